#pragma once

#include "scott/errors.hpp"
#include "scott/rational.hpp"

namespace scott {

// A strictly decreasing positive tolerance schedule f(j) = base * ratio^j
// with 0 < ratio < 1, the geometric instantiation of the class of
// computable schedules converging to zero.
class ToleranceSchedule {
 public:
  ToleranceSchedule(Rational base, Rational ratio)
      : base_(base), ratio_(ratio) {
    if (!base_.is_positive()) {
      throw ValidationError("tolerance schedule base must be positive");
    }
    if (!ratio_.is_positive() || ratio_ >= Rational(1)) {
      throw ValidationError("tolerance schedule ratio must be in (0,1)");
    }
  }

  Rational at(int j) const {
    if (j < 0) throw ValidationError("tolerance index must be >= 0");
    return base_ * ratio_.pow(static_cast<unsigned>(j));
  }

  const Rational& base() const { return base_; }
  const Rational& ratio() const { return ratio_; }

  bool operator==(const ToleranceSchedule& o) const {
    return base_ == o.base_ && ratio_ == o.ratio_;
  }

 private:
  Rational base_;
  Rational ratio_;
};

}  // namespace scott
