#include "bergdir/hypergeo.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_complex.hpp>
#include <fmt/format.h>

#include "bergdir/errors.hpp"

namespace bergdir {

namespace {

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::nearbyint(v); }

// Stirling remainder log Gamma(x) - [(x-1/2) log x - x + log(2 pi)/2] for x >= 20.
double stirling_tail(double x) {
  // B_{2j} / (2j (2j-1)), j = 1..8
  constexpr std::array<double, 8> coeff = {
      1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,          -1.0 / 1680.0,
      1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,           -3617.0 / 122400.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double acc = 0.0;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * inv2 + *it;
  return acc * inv;
}

constexpr double kShiftTarget = 20.0;

// Raises x to at least kShiftTarget; returns log of the product x (x+1) ... consumed.
double shift_up(double& x) {
  double log_product = 0.0;
  double product = 1.0;
  while (x < kShiftTarget) {
    product *= x;
    x += 1.0;
  }
  log_product += std::log(product);
  return log_product;
}

}  // namespace

HypergeometricSpec::HypergeometricSpec(std::vector<double> numerator,
                                       std::vector<double> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (double b : denominator_) {
    if (!std::isfinite(b) || is_nonpositive_integer(b)) {
      throw InvalidParameter("denominator parameter must not be zero or a negative integer, got " +
                             fmt::format("{}", b));
    }
  }
  for (double a : numerator_) {
    if (!std::isfinite(a)) throw InvalidParameter("numerator parameter must be finite");
  }
}

bool HypergeometricSpec::terminates() const {
  for (double a : numerator_) {
    if (is_nonpositive_integer(a)) return true;
  }
  return false;
}

double pochhammer(double a, int k) {
  double out = 1.0;
  for (int j = 0; j < k; ++j) out *= a + j;
  return out;
}

long double pochhammer_ld(long double a, int k) {
  long double out = 1.0L;
  for (int j = 0; j < k; ++j) out *= a + j;
  return out;
}

double log_gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("gamma ratio requires positive arguments, got a=" + fmt::format("{}", a) +
                      ", b=" + fmt::format("{}", b));
  }
  if (a == b) return 0.0;
  double big_a = a;
  double big_b = b;
  const double log_shift_a = shift_up(big_a);
  const double log_shift_b = shift_up(big_b);
  // log Gamma(A) - log Gamma(B) with D = A - B, arranged to avoid cancelling
  // two O(A log A) quantities.
  const double d = big_a - big_b;
  const double main = (big_a - 0.5) * std::log1p(d / big_b) + d * std::log(big_b) - d;
  const double tail = stirling_tail(big_a) - stirling_tail(big_b);
  return main + tail - log_shift_a + log_shift_b;
}

double gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("gamma ratio requires positive arguments, got a=" + fmt::format("{}", a) +
                      ", b=" + fmt::format("{}", b));
  }
  const double d = a - b;
  if (d == std::nearbyint(d) && std::abs(d) <= 1024.0) {
    const int k = static_cast<int>(std::abs(d));
    return d >= 0.0 ? pochhammer(b, k) : 1.0 / pochhammer(a, k);
  }
  return std::exp(log_gamma_ratio(a, b));
}

namespace {

/// Outcome of one summation pass at a given working precision.
template <class C>
struct Pass {
  C value;
  int terms_used;
  long double tail;
  long double magnitude;  ///< sum of |term_k|, the scale of rounding error
  bool converged;
};

template <class C>
Pass<C> sum_terms(const HypergeometricSpec& spec, const C& z, long double tol, int max_terms) {
  using std::abs;
  using R = typename C::value_type;
  C acc(0);
  C comp(0);
  C term(1);
  R magnitude(0);
  int small_run = 0;
  for (int k = 0; k < max_terms; ++k) {
    // Neumaier compensated update on each component
    const C next = acc + term;
    const auto fix = [](const R& a, const R& t, const R& sum) {
      return abs(a) >= abs(t) ? (a - sum) + t : (t - sum) + a;
    };
    comp += C(fix(acc.real(), term.real(), next.real()), fix(acc.imag(), term.imag(), next.imag()));
    acc = next;
    const R mag = abs(term);
    magnitude += mag;
    if (mag <= R(tol) * abs(acc + comp)) {
      ++small_run;
    } else {
      small_run = 0;
    }
    R ratio = R(1) / R(k + 1);
    for (double a : spec.numerator()) ratio *= R(a) + k;
    for (double b : spec.denominator()) ratio /= R(b) + k;
    term *= C(ratio) * z;
    if (term == C(0)) return {acc + comp, k + 1, 0.0L, static_cast<long double>(magnitude), true};
    if (small_run >= 3) {
      return {acc + comp, k + 1, static_cast<long double>(abs(term)),
              static_cast<long double>(magnitude), true};
    }
  }
  return {acc + comp, max_terms, static_cast<long double>(abs(term)),
          static_cast<long double>(magnitude), false};
}

}  // namespace

SeriesSum sum_pfq(const HypergeometricSpec& spec, std::complex<long double> z,
                  SeriesOptions options) {
  const auto& num = spec.numerator();
  const auto& den = spec.denominator();
  const std::size_t p = num.size();
  const std::size_t q = den.size();
  if (!spec.terminates() && z != std::complex<long double>(0.0L)) {
    if (p == q + 1 && std::abs(z) >= 1.0L) {
      throw DivergenceError("pFq with P = Q+1 diverges for |z| >= 1");
    }
    if (p > q + 1) throw DivergenceError("pFq with P > Q+1 diverges for z != 0");
  }
  if (!(options.tol > 0.0)) throw InvalidParameter("series tolerance must be positive");
  if (options.max_terms < 1) throw InvalidParameter("max_terms must be >= 1");

  const long double tol = options.tol;
  const auto fast = sum_terms(spec, z, tol, options.max_terms);
  if (!fast.converged) {
    throw NonconvergenceError(
        "pFq series did not converge within " + std::to_string(options.max_terms) + " terms",
        SeriesResult{{static_cast<double>(fast.value.real()), static_cast<double>(fast.value.imag())},
                     options.max_terms,
                     static_cast<double>(fast.tail)});
  }
  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  const long double rounding = eps * fast.magnitude;
  if (rounding <= tol * std::abs(fast.value)) {
    return SeriesSum{fast.value, fast.terms_used, fast.tail + rounding};
  }
  // Cancellation between terms exceeds the requested accuracy: redo the sum
  // with 50 significant digits.
  using Wide = boost::multiprecision::cpp_complex_50;
  const auto wide = sum_terms(spec, Wide(z.real(), z.imag()), tol, options.max_terms);
  const std::complex<long double> value(static_cast<long double>(wide.value.real()),
                                        static_cast<long double>(wide.value.imag()));
  constexpr long double wide_eps = 1e-49L;
  return SeriesSum{value, wide.terms_used, wide.tail + wide_eps * wide.magnitude + eps * std::abs(value)};
}

SeriesResult eval_pfq(const HypergeometricSpec& spec, std::complex<double> z, double tol,
                      int max_terms) {
  const auto sum = sum_pfq(spec, std::complex<long double>(z.real(), z.imag()),
                           SeriesOptions{tol, max_terms});
  return SeriesResult{{static_cast<double>(sum.value.real()), static_cast<double>(sum.value.imag())},
                      sum.terms_used,
                      static_cast<double>(sum.error_estimate)};
}

std::vector<long double> pfq_coefficients(const HypergeometricSpec& spec, int count) {
  std::vector<long double> out;
  out.reserve(count > 0 ? static_cast<std::size_t>(count) : 0);
  long double c = 1.0L;
  for (int k = 0; k < count; ++k) {
    out.push_back(c);
    long double ratio = 1.0L / static_cast<long double>(k + 1);
    for (double a : spec.numerator()) ratio *= static_cast<long double>(a) + k;
    for (double b : spec.denominator()) ratio /= static_cast<long double>(b) + k;
    c *= ratio;
  }
  return out;
}

double gamma_ratio_asymptotic_error(double x, double a, double b) {
  if (a == b) {
    if (!(x + a > 0.0)) throw DomainError("gamma_ratio_asymptotic_error requires x + a > 0");
    return 0.0;
  }
  const double ratio = gamma_ratio(x + a, x + b);
  return std::abs(ratio * std::pow(x, b - a) - 1.0);
}

double limit_3f2_to_2f2_error(double b, double c, double d, double e, double a,
                              std::complex<double> z, double x, SeriesOptions options) {
  if (!(x > 0.0)) throw DomainError("limit_3f2_to_2f2_error requires x > 0");
  const std::complex<long double> zl(z.real(), z.imag());
  const std::complex<long double> scaled = zl / static_cast<long double>(x);
  if (std::abs(scaled) >= 1.0L) throw DomainError("limit_3f2_to_2f2_error requires |z/x| < 1");
  const HypergeometricSpec three({b, c, x + a}, {d, e});
  const HypergeometricSpec two({b, c}, {d, e});
  const auto lhs = sum_pfq(three, scaled, options).value;
  const auto rhs = sum_pfq(two, zl, options).value;
  return static_cast<double>(std::abs(lhs - rhs));
}

}  // namespace bergdir
