#pragma once

#include <cmath>
#include <complex>

namespace bergdir {

/// Neumaier (improved Kahan) accumulator. Unlike plain Kahan it stays exact
/// when an addend is larger in magnitude than the running sum.
template <typename Real>
class NeumaierSum {
 public:
  NeumaierSum& operator+=(Real value) {
    const Real t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  [[nodiscard]] Real value() const { return sum_ + compensation_; }

 private:
  Real sum_{0};
  Real compensation_{0};
};

/// Componentwise compensated sum of complex values.
template <typename Real>
class ComplexNeumaierSum {
 public:
  ComplexNeumaierSum& operator+=(const std::complex<Real>& value) {
    re_ += value.real();
    im_ += value.imag();
    return *this;
  }

  [[nodiscard]] std::complex<Real> value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum<Real> re_;
  NeumaierSum<Real> im_;
};

}  // namespace bergdir
