#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace scott {

// Exact rational arithmetic on 64-bit numerator / denominator.
// Values are always in lowest terms with a positive denominator.
// Results that do not fit in 64 bits after reduction throw
// std::overflow_error; nothing in this library ever rounds.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p", "-p" or "p/q" with q > 0 after normalization.
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }

  Rational operator-() const;
  Rational abs() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const;

  // this ^ e for e >= 0.
  Rational pow(unsigned e) const;

  // 2^-n as an exact rational (n >= 0).
  static Rational pow2_neg(int n);

  // "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace scott
