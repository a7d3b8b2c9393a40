#include "bergdir/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "bergdir/compensated.hpp"
#include "bergdir/detail/ipow.hpp"
#include "bergdir/errors.hpp"

namespace bergdir {

using CLD = std::complex<long double>;

BargmannDirichletSpace::BargmannDirichletSpace(std::size_t n, double nu, int m)
    : n_(n), nu_(nu), m_(m) {
  if (n_ < 1) throw InvalidParameter("invariant violated: n >= 1");
  if (!std::isfinite(nu_) || !(nu_ > 0.0)) {
    throw InvalidParameter("invariant violated: nu > 0 (got " + fmt::format("{}", nu_) + ")");
  }
  if (m_ < 0) throw InvalidParameter("invariant violated: m >= 0");
}

namespace bargmann {

namespace {

void check_dimension(const BargmannDirichletSpace& space, std::size_t got) {
  if (got != space.n()) throw DimensionMismatch(space.n(), got);
}

CLD to_ld(Complex v) { return {v.real(), v.imag()}; }
Complex to_d(CLD v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

long double log_falling(int k, int m) {
  long double out = 0.0L;
  for (int j = 0; j < m; ++j) out += std::log(static_cast<long double>(k - j));
  return out;
}

// nu_exponent_sign = +1 for the kernel-consistent form, -1 for the printed one.
long double log_norm(const BargmannDirichletSpace& space, const MultiIndex& p,
                     int nu_exponent_sign) {
  check_dimension(space, p.size());
  const long double log_nu = std::log(static_cast<long double>(space.nu()));
  const int k = degree(p);
  const int m = space.m();
  long double out = space.n() * (std::log(std::numbers::pi_v<long double>) - log_nu) +
                    log_big(multifactorial(p)) - k * log_nu;
  if (k >= m) out += log_falling(k, m) + nu_exponent_sign * m * log_nu;
  return out;
}

}  // namespace

long double log_monomial_norm_sq(const BargmannDirichletSpace& space, const MultiIndex& p) {
  return log_norm(space, p, +1);
}

double monomial_norm_sq(const BargmannDirichletSpace& space, const MultiIndex& p) {
  return static_cast<double>(std::exp(log_norm(space, p, +1)));
}

double monomial_norm_sq_printed(const BargmannDirichletSpace& space, const MultiIndex& p) {
  return static_cast<double>(std::exp(log_norm(space, p, -1)));
}

double function_norm_sq(const BargmannDirichletSpace& space, const TaylorSeries& f) {
  check_dimension(space, f.dimension());
  NeumaierSum<double> acc;
  for (const auto& [p, a] : f.terms()) acc += monomial_norm_sq(space, p) * std::norm(a);
  return acc.value();
}

Complex inner_product(const BargmannDirichletSpace& space, const TaylorSeries& f,
                      const TaylorSeries& g) {
  check_dimension(space, f.dimension());
  check_dimension(space, g.dimension());
  ComplexNeumaierSum<double> acc;
  for (const auto& [p, a] : f.terms()) {
    const auto it = g.terms().find(p);
    if (it == g.terms().end()) continue;
    acc += monomial_norm_sq(space, p) * a * std::conj(it->second);
  }
  return acc.value();
}

double kernel_prefactor(const BargmannDirichletSpace& space) {
  return std::pow(space.nu() / std::numbers::pi, static_cast<double>(space.n()));
}

long double kernel_degree_coefficient(const BargmannDirichletSpace& space, int k) {
  if (k < 0) throw InvalidParameter("kernel degree must be >= 0");
  const long double nu = space.nu();
  const long double prefactor = kernel_prefactor(space);
  const int m = space.m();
  if (k < m) return prefactor * detail::ipow(nu, k) / to_long_double(factorial(k));
  const HypergeometricSpec spec({1.0, 1.0}, {m + 1.0, m + 1.0});
  const long double m_fact = to_long_double(factorial(m));
  const auto coeffs = pfq_coefficients(spec, k - m + 1);
  return prefactor * coeffs.back() * detail::ipow(nu, k - m) / (m_fact * m_fact);
}

SeriesResult kernel_closed_result(const BargmannDirichletSpace& space, Complex t,
                                  SeriesOptions options) {
  const int m = space.m();
  const CLD tl = to_ld(t);
  const CLD x = static_cast<long double>(space.nu()) * tl;

  ComplexNeumaierSum<long double> low;
  CLD term = 1.0L;
  for (int k = 0; k < m; ++k) {
    low += term;
    term *= x / static_cast<long double>(k + 1);
  }

  const HypergeometricSpec spec({1.0, 1.0}, {m + 1.0, m + 1.0});
  const auto series = sum_pfq(spec, x, options);
  const long double m_fact = to_long_double(factorial(m));
  const CLD lead = detail::ipow(tl, m) / (m_fact * m_fact);
  const long double prefactor = kernel_prefactor(space);

  const CLD value = prefactor * (low.value() + lead * series.value);
  return SeriesResult{to_d(value), series.terms_used + m,
                      static_cast<double>(prefactor * std::abs(lead) * series.error_estimate)};
}

Complex kernel_closed(const BargmannDirichletSpace& space, Complex t, SeriesOptions options) {
  return kernel_closed_result(space, t, options).value;
}

Complex kernel_closed(const BargmannDirichletSpace& space, const CVector& z, const CVector& w,
                      SeriesOptions options) {
  check_dimension(space, z.size());
  check_dimension(space, w.size());
  return kernel_closed(space, inner(z, w), options);
}

SeriesResult kernel_series_result(const BargmannDirichletSpace& space, Complex t,
                                  int max_degree) {
  if (max_degree < 0) throw InvalidParameter("kernel_series requires max_degree >= 0");
  const CLD tl = to_ld(t);
  const long double mag = std::abs(tl);

  std::vector<int> parts(space.n(), 0);
  // t^k / ||z^{(k,0,...)}||^2
  auto degree_term = [&](int k) -> CLD {
    parts[0] = k;
    return detail::ipow(tl, k) * std::exp(-log_monomial_norm_sq(space, MultiIndex(parts)));
  };

  ComplexNeumaierSum<long double> acc;
  for (int k = 0; k <= max_degree; ++k) acc += degree_term(k);
  // From degree K >= m on, |term_{k+1}/term_k| <= nu |t| / (k+1): exponential majorant.
  const int first = std::max(max_degree + 1, space.m());
  long double tail = 0.0L;
  for (int k = max_degree + 1; k < first; ++k) tail += std::abs(degree_term(k));
  tail += std::abs(degree_term(first)) * std::exp(space.nu() * mag);
  return SeriesResult{to_d(acc.value()), max_degree + 1, static_cast<double>(tail)};
}

Complex kernel_series(const BargmannDirichletSpace& space, Complex t, int max_degree) {
  return kernel_series_result(space, t, max_degree).value;
}

Complex kernel_series(const BargmannDirichletSpace& space, const CVector& z, const CVector& w,
                      int max_degree) {
  check_dimension(space, z.size());
  check_dimension(space, w.size());
  return kernel_series(space, inner(z, w), max_degree);
}

TaylorSeries kernel_section(const BargmannDirichletSpace& space, const CVector& w, int degree) {
  check_dimension(space, w.size());
  TaylorSeries out(space.n());
  for (int k = 0; k <= degree; ++k) {
    const long double ck = kernel_degree_coefficient(space, k);
    const long double kfact = to_long_double(factorial(k));
    for (const auto& p : enumerate_indices(space.n(), k)) {
      CLD coeff = ck * kfact / to_long_double(multifactorial(p));
      for (std::size_t i = 0; i < p.size(); ++i) coeff *= detail::ipow(std::conj(to_ld(w[i])), p[i]);
      out.set(p, to_d(coeff));
    }
  }
  return out;
}

Complex reproduce(const BargmannDirichletSpace& space, const TaylorSeries& f, const CVector& w) {
  check_dimension(space, f.dimension());
  check_dimension(space, w.size());
  return inner_product(space, f, kernel_section(space, w, f.max_degree()));
}

double pointwise_bound(const BargmannDirichletSpace& space, const CVector& z) {
  check_dimension(space, z.size());
  return std::sqrt(kernel_closed(space, z, z).real());
}

}  // namespace bargmann
}  // namespace bergdir
