#pragma once

#include <cmath>
#include <complex>

namespace zrl {

/// Neumaier-compensated running sum. Terms must be added in a fixed order for
/// results to be reproducible bit for bit.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  CompensatedComplexSum& operator+=(std::complex<double> z) noexcept {
    add(z);
    return *this;
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace zrl
