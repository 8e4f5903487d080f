#pragma once

#include <compare>
#include <string>

#include "scott/errors.hpp"

namespace scott {

// A rank or game budget: a finite ordinal, the symbolic stabilization
// marker omega, or infinity (indistinguishable). Totally ordered as
// Finite(0) < Finite(1) < ... < Omega < Infinity.
class RankValue {
 public:
  static RankValue finite(int n) {
    if (n < 0) throw ValidationError("finite rank must be >= 0");
    return RankValue(Tag::Finite, n);
  }
  static RankValue omega() { return RankValue(Tag::Omega, 0); }
  static RankValue infinity() { return RankValue(Tag::Infinity, 0); }

  bool is_finite() const { return tag_ == Tag::Finite; }
  bool is_omega() const { return tag_ == Tag::Omega; }
  bool is_infinity() const { return tag_ == Tag::Infinity; }

  int value() const {
    if (!is_finite()) throw ValidationError("rank value is not finite");
    return n_;
  }

  RankValue successor() const {
    if (!is_finite()) throw ValidationError("successor of a non-finite rank");
    return finite(n_ + 1);
  }

  bool operator==(const RankValue& o) const = default;
  std::strong_ordering operator<=>(const RankValue& o) const {
    if (tag_ != o.tag_) return static_cast<int>(tag_) <=> static_cast<int>(o.tag_);
    return n_ <=> o.n_;
  }

  std::string to_string() const {
    switch (tag_) {
      case Tag::Finite: return std::to_string(n_);
      case Tag::Omega: return "omega";
      default: return "inf";
    }
  }

  // Accepts a decimal ordinal, "omega", or "inf".
  static RankValue parse(const std::string& text);

 private:
  enum class Tag { Finite = 0, Omega = 1, Infinity = 2 };
  RankValue(Tag tag, int n) : tag_(tag), n_(n) {}
  Tag tag_;
  int n_;
};

}  // namespace scott
