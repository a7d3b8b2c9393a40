#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace bergdir {

/// Parameters of pFq(a_1..a_P; b_1..b_Q; z).
/// No denominator parameter may be zero or a negative integer.
class HypergeometricSpec {
 public:
  HypergeometricSpec(std::vector<double> numerator, std::vector<double> denominator);

  [[nodiscard]] const std::vector<double>& numerator() const { return numerator_; }
  [[nodiscard]] const std::vector<double>& denominator() const { return denominator_; }

  /// True when some numerator parameter is a nonpositive integer (the series is a polynomial).
  [[nodiscard]] bool terminates() const;

 private:
  std::vector<double> numerator_;
  std::vector<double> denominator_;
};

struct SeriesResult {
  std::complex<double> value;
  int terms_used = 0;
  /// Magnitude of the last neglected term.
  double error_estimate = 0.0;
};

/// Extended-precision partial state of a series summation.
struct SeriesSum {
  std::complex<long double> value;
  int terms_used = 0;
  long double error_estimate = 0.0L;
};

class NonconvergenceError : public std::runtime_error {
 public:
  NonconvergenceError(const std::string& what, SeriesResult partial)
      : std::runtime_error(what), partial_(partial) {}
  [[nodiscard]] const SeriesResult& partial() const { return partial_; }

 private:
  SeriesResult partial_;
};

struct SeriesOptions {
  double tol = 1e-17;
  int max_terms = 100000;
};

/// (a)_k = a (a+1) ... (a+k-1)
[[nodiscard]] double pochhammer(double a, int k);
[[nodiscard]] long double pochhammer_ld(long double a, int k);

/// log(Gamma(a) / Gamma(b)) for a, b > 0. Exact-ish for large arguments
/// (evaluated as a Stirling difference, never as two large lgamma values).
[[nodiscard]] double log_gamma_ratio(double a, double b);

/// Gamma(a) / Gamma(b) for a, b > 0. Integer differences up to 1024 are
/// taken as a finite product; everything else goes through log_gamma_ratio.
[[nodiscard]] double gamma_ratio(double a, double b);

/// Sums pFq by term recurrence t_{k+1} = t_k prod(a_i+k)/prod(b_j+k) z/(k+1)
/// with compensated accumulation in extended precision. Stops once
/// |t_k| <= tol |partial sum| holds for three consecutive terms.
///
/// Throws DivergenceError when P = Q+1 and |z| >= 1 (or P > Q+1, z != 0)
/// for a non-terminating series, NonconvergenceError when max_terms is hit.
[[nodiscard]] SeriesResult eval_pfq(const HypergeometricSpec& spec, std::complex<double> z,
                                    double tol = 1e-17, int max_terms = 100000);

/// Same summation, returned at full extended precision.
[[nodiscard]] SeriesSum sum_pfq(const HypergeometricSpec& spec, std::complex<long double> z,
                                SeriesOptions options = {});

/// The first `count` series coefficients c_k = prod (a_i)_k / prod (b_j)_k / k!.
[[nodiscard]] std::vector<long double> pfq_coefficients(const HypergeometricSpec& spec,
                                                        int count);

/// |Gamma(x+a)/Gamma(x+b) x^(b-a) - 1|, which is O(1/x).
[[nodiscard]] double gamma_ratio_asymptotic_error(double x, double a, double b);

/// |3F2(b, c, x+a; d, e; z/x) - 2F2(b, c; d, e; z)|
[[nodiscard]] double limit_3f2_to_2f2_error(double b, double c, double d, double e, double a,
                                            std::complex<double> z, double x,
                                            SeriesOptions options = {1e-17, 100000});

}  // namespace bergdir
