#include "bergdir/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "bergdir/errors.hpp"

namespace bergdir::asymptotics {

BergmanDirichletSpace scaled_space(double nu, double radius, std::size_t n, int m) {
  if (!(nu > 0.0)) throw InvalidParameter("invariant violated: nu > 0");
  if (!(radius > 0.0)) throw InvalidParameter("invariant violated: radius > 0");
  return BergmanDirichletSpace(n, nu * radius * radius, m, radius);
}

double prefactor_ratio(double nu, double radius, std::size_t n) {
  if (!(nu > 0.0)) throw InvalidParameter("invariant violated: nu > 0");
  if (!(radius > 0.0)) throw InvalidParameter("invariant violated: radius > 0");
  const double alpha = nu * radius * radius;
  const double dn = static_cast<double>(n);
  return gamma_ratio(alpha + dn + 1.0, alpha + 1.0) /
         (std::pow(std::numbers::pi, dn) * std::pow(radius, 2.0 * dn));
}

namespace {

void check_radii(const std::vector<double>& radii, double t_abs) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw InvalidParameter("radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw InvalidParameter("radii must be strictly increasing");
    }
    if (!(t_abs < radii[i] * radii[i])) {
      throw DomainError("radius " + fmt::format("{}", radii[i]) + " violates |<z,w>| < R^2");
    }
  }
}

}  // namespace

std::vector<ConvergenceRecord> convergence_sweep(double nu, int m, std::size_t n, Complex t,
                                                 const std::vector<double>& radii) {
  check_radii(radii, std::abs(t));
  const Complex limit = bargmann::kernel_closed(BargmannDirichletSpace(n, nu, m), t);
  std::vector<ConvergenceRecord> out(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const Complex value = bergman::kernel_closed(scaled_space(nu, radii[i], n, m), t);
    out[i] = ConvergenceRecord{radii[i], value, limit, std::abs(value - limit)};
  }
  return out;
}

std::vector<ConvergenceRecord> convergence_sweep(double nu, int m, std::size_t n,
                                                 const CVector& z, const CVector& w,
                                                 const std::vector<double>& radii) {
  if (z.size() != n) throw DimensionMismatch(n, z.size());
  return convergence_sweep(nu, m, n, inner(z, w), radii);
}

std::vector<double> uniform_sweep(double nu, int m, const std::vector<CVector>& zs,
                                  const std::vector<CVector>& ws,
                                  const std::vector<double>& radii) {
  std::vector<double> worst(radii.size(), 0.0);
  for (const auto& z : zs) {
    for (const auto& w : ws) {
      const auto records = convergence_sweep(nu, m, z.size(), z, w, radii);
      for (std::size_t i = 0; i < records.size(); ++i) {
        worst[i] = std::max(worst[i], records[i].abs_error);
      }
    }
  }
  return worst;
}

std::vector<std::pair<double, double>> lemma5_sweep(double b, double c, double d, double e,
                                                    double a, Complex z,
                                                    const std::vector<double>& x_values) {
  std::vector<std::pair<double, double>> out;
  out.reserve(x_values.size());
  for (std::size_t i = 0; i < x_values.size(); ++i) {
    if (i > 0 && !(x_values[i] > x_values[i - 1])) {
      throw InvalidParameter("x values must be increasing");
    }
    out.emplace_back(x_values[i], limit_3f2_to_2f2_error(b, c, d, e, a, z, x_values[i]));
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records) {
  out << "R,Re(K_R),Im(K_R),Re(K_inf),Im(K_inf),abs_error\n";
  for (const auto& r : records) {
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.radius,
                       r.kernel_value.real(), r.kernel_value.imag(), r.limit_value.real(),
                       r.limit_value.imag(), r.abs_error);
  }
}

}  // namespace bergdir::asymptotics
