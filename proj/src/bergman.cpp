#include "bergdir/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "bergdir/compensated.hpp"
#include "bergdir/detail/ipow.hpp"
#include "bergdir/errors.hpp"

namespace bergdir {

using CLD = std::complex<long double>;

BergmanDirichletSpace::BergmanDirichletSpace(std::size_t n, double alpha, int m, double radius)
    : n_(n), alpha_(alpha), m_(m), radius_(radius) {
  if (n_ < 1) throw InvalidParameter("invariant violated: n >= 1");
  if (!std::isfinite(alpha_) || !(alpha_ > -1.0)) {
    throw InvalidParameter("invariant violated: alpha > -1 (got " + fmt::format("{}", alpha_) + ")");
  }
  if (m_ < 0) throw InvalidParameter("invariant violated: m >= 0");
  if (!std::isfinite(radius_) || !(radius_ > 0.0)) {
    throw InvalidParameter("invariant violated: radius > 0");
  }
}

namespace bergman {

namespace {

void check_dimension(const BergmanDirichletSpace& space, std::size_t got) {
  if (got != space.n()) throw DimensionMismatch(space.n(), got);
}

void check_kernel_domain(const BergmanDirichletSpace& space, Complex t) {
  const double r2 = space.radius() * space.radius();
  if (!(std::abs(t) < r2)) {
    throw DomainError("kernel requires |<z,w>| < R^2 (|<z,w>| = " + fmt::format("{}", std::abs(t)) +
                      ", R^2 = " + fmt::format("{}", r2) + ")");
  }
}

long double log_falling(int k, int m) {
  long double out = 0.0L;
  for (int j = 0; j < m; ++j) out += std::log(static_cast<long double>(k - j));
  return out;
}

// log gamma_{alpha,p} without the p! factor; depends on |p| only.
long double log_degree_weight(const BergmanDirichletSpace& space, int k) {
  const long double shift = static_cast<long double>(space.alpha()) + space.n() + 1;
  if (k < space.m()) return -std::lgamma(shift + k);
  return log_falling(k, space.m()) - std::lgamma(shift + (k - space.m()));
}

CLD to_ld(Complex v) { return {v.real(), v.imag()}; }
Complex to_d(CLD v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

}  // namespace

long double log_monomial_norm_sq(const BergmanDirichletSpace& space, const MultiIndex& p) {
  check_dimension(space, p.size());
  const int k = degree(p);
  const int m = space.m();
  const long double log_r = std::log(static_cast<long double>(space.radius()));
  const int r_power = 2 * static_cast<int>(space.n()) + 2 * (k < m ? k : k - m);
  return space.n() * std::log(std::numbers::pi_v<long double>) +
         std::lgamma(static_cast<long double>(space.alpha()) + 1) + log_big(multifactorial(p)) +
         log_degree_weight(space, k) + r_power * log_r;
}

double monomial_norm_sq(const BergmanDirichletSpace& space, const MultiIndex& p) {
  return static_cast<double>(std::exp(log_monomial_norm_sq(space, p)));
}

double gamma_coeff(const BergmanDirichletSpace& space, const MultiIndex& p) {
  check_dimension(space, p.size());
  return static_cast<double>(
      std::exp(log_big(multifactorial(p)) + log_degree_weight(space, degree(p))));
}

double function_norm_sq(const BergmanDirichletSpace& space, const TaylorSeries& f) {
  check_dimension(space, f.dimension());
  NeumaierSum<double> acc;
  for (const auto& [p, a] : f.terms()) acc += monomial_norm_sq(space, p) * std::norm(a);
  return acc.value();
}

Complex inner_product(const BergmanDirichletSpace& space, const TaylorSeries& f,
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

double kernel_prefactor(const BergmanDirichletSpace& space) {
  const double n = static_cast<double>(space.n());
  return gamma_ratio(space.alpha() + n + 1.0, space.alpha() + 1.0) /
         (std::pow(std::numbers::pi, n) * std::pow(space.radius(), 2.0 * n));
}

long double kernel_degree_coefficient(const BergmanDirichletSpace& space, int k) {
  if (k < 0) throw InvalidParameter("kernel degree must be >= 0");
  const long double shift = static_cast<long double>(space.alpha()) + space.n() + 1;
  const long double r2 = static_cast<long double>(space.radius()) * space.radius();
  const long double prefactor = kernel_prefactor(space);
  const int m = space.m();
  if (k < m) {
    long double c = 1.0L;
    for (int j = 0; j < k; ++j) c *= (shift + j) / ((j + 1) * r2);
    return prefactor * c;
  }
  const HypergeometricSpec spec({1.0, 1.0, static_cast<double>(shift)},
                                {m + 1.0, m + 1.0});
  const long double m_fact = to_long_double(factorial(m));
  const auto coeffs = pfq_coefficients(spec, k - m + 1);
  return prefactor * coeffs.back() / (m_fact * m_fact) / detail::ipow(r2, k - m);
}

SeriesResult kernel_closed_result(const BergmanDirichletSpace& space, Complex t,
                                  SeriesOptions options) {
  check_kernel_domain(space, t);
  const int m = space.m();
  const long double shift = static_cast<long double>(space.alpha()) + space.n() + 1;
  const long double r2 = static_cast<long double>(space.radius()) * space.radius();
  const CLD tl = to_ld(t);
  const CLD s = tl / r2;

  ComplexNeumaierSum<long double> low;
  CLD term = 1.0L;
  for (int k = 0; k < m; ++k) {
    low += term;
    term *= (shift + k) * s / static_cast<long double>(k + 1);
  }

  const HypergeometricSpec spec({1.0, 1.0, static_cast<double>(shift)}, {m + 1.0, m + 1.0});
  const auto series = sum_pfq(spec, s, options);
  const long double m_fact = to_long_double(factorial(m));
  const CLD lead = detail::ipow(tl, m) / (m_fact * m_fact);
  const long double prefactor = kernel_prefactor(space);

  const CLD value = prefactor * (low.value() + lead * series.value);
  return SeriesResult{to_d(value), series.terms_used + m,
                      static_cast<double>(prefactor * std::abs(lead) * series.error_estimate)};
}

Complex kernel_closed(const BergmanDirichletSpace& space, Complex t, SeriesOptions options) {
  return kernel_closed_result(space, t, options).value;
}

Complex kernel_closed(const BergmanDirichletSpace& space, const CVector& z, const CVector& w,
                      SeriesOptions options) {
  check_dimension(space, z.size());
  check_dimension(space, w.size());
  return kernel_closed(space, inner(z, w), options);
}

SeriesResult kernel_series_result(const BergmanDirichletSpace& space, Complex t,
                                  int max_degree) {
  check_kernel_domain(space, t);
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
  // Terms below order m are added exactly; from degree K >= m on the term ratio is
  // |s| (1 - m x)(1 + (alpha+n-m) x) with x = 1/(k+1), bounded by rho below.
  const int first = std::max(max_degree + 1, space.m());
  long double tail = 0.0L;
  for (int k = max_degree + 1; k < first; ++k) tail += std::abs(degree_term(k));
  const long double s = mag / (static_cast<long double>(space.radius()) * space.radius());
  const long double rho =
      s * (1.0L + std::max(0.0L, static_cast<long double>(space.alpha()) + space.n() - 2 * space.m()) /
                      (first + 1));
  tail += rho < 1.0L ? std::abs(degree_term(first)) / (1.0L - rho)
                     : std::numeric_limits<long double>::infinity();
  return SeriesResult{to_d(acc.value()), max_degree + 1, static_cast<double>(tail)};
}

Complex kernel_series(const BergmanDirichletSpace& space, Complex t, int max_degree) {
  return kernel_series_result(space, t, max_degree).value;
}

Complex kernel_series(const BergmanDirichletSpace& space, const CVector& z, const CVector& w,
                      int max_degree) {
  check_dimension(space, z.size());
  check_dimension(space, w.size());
  return kernel_series(space, inner(z, w), max_degree);
}

TaylorSeries kernel_section(const BergmanDirichletSpace& space, const CVector& w, int degree) {
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

Complex reproduce(const BergmanDirichletSpace& space, const TaylorSeries& f, const CVector& w) {
  check_dimension(space, f.dimension());
  check_dimension(space, w.size());
  if (!(w.norm() < space.radius())) throw DomainError("reproduce requires |w| < R");
  return inner_product(space, f, kernel_section(space, w, f.max_degree()));
}

double pointwise_bound(const BergmanDirichletSpace& space, const CVector& z) {
  check_dimension(space, z.size());
  if (!(z.norm() < space.radius())) throw DomainError("pointwise_bound requires |z| < R");
  return std::sqrt(kernel_closed(space, z, z).real());
}

double pointwise_bound_paper(const BergmanDirichletSpace& space, const CVector& z) {
  check_dimension(space, z.size());
  if (space.radius() != 1.0) throw InvalidParameter("pointwise_bound_paper is stated for R = 1");
  const double r = z.norm();
  if (!(r < 1.0)) throw DomainError("pointwise_bound_paper requires |z| < 1");
  const double shift = space.alpha() + static_cast<double>(space.n()) + 1.0;
  double sum = 0.0;
  double term = 1.0;
  for (int k = 0; k < space.m(); ++k) {
    sum += term;
    term *= (shift + k) * r / (k + 1);
  }
  sum += std::pow(1.0 - r * r, -shift);
  return kernel_prefactor(space) * sum;
}

}  // namespace bergman
}  // namespace bergdir
