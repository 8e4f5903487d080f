#include "scott/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "scott/errors.hpp"

namespace scott {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow past 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_reduced(i128 num, i128 den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw ValidationError("rational with zero denominator");
  if (den_ < 0) {
    num_ = narrow(-i128(num_));
    den_ = narrow(-i128(den_));
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    std::size_t used_n = 0, used_d = 0;
    std::int64_t n = std::stoll(text.substr(0, slash), &used_n);
    std::int64_t d = std::stoll(text.substr(slash + 1), &used_d);
    if (used_n != slash || used_d != text.size() - slash - 1) {
      throw std::invalid_argument(text);
    }
    return Rational(n, d);
  } catch (const std::out_of_range&) {
    throw std::overflow_error("rational literal out of 64-bit range: " + text);
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed rational literal: '" + text + "'");
  }
}

Rational Rational::operator-() const { return Rational(narrow(-i128(num_)), den_); }

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::operator+(const Rational& o) const {
  return make_reduced(i128(num_) * o.den_ + i128(o.num_) * den_,
                      i128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make_reduced(i128(num_) * o.den_ - i128(o.num_) * den_,
                      i128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make_reduced(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw ValidationError("rational division by zero");
  return make_reduced(i128(num_) * o.den_, i128(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  i128 lhs = i128(num_) * o.den_;
  i128 rhs = i128(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned e) const {
  Rational acc(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

Rational Rational::pow2_neg(int n) {
  if (n < 0) throw ValidationError("pow2_neg expects n >= 0");
  if (n >= 62) throw std::overflow_error("2^-n denominator overflow");
  return Rational(1, std::int64_t(1) << n);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace scott
