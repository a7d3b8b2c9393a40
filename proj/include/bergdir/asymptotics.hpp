#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "bergdir/bargmann.hpp"
#include "bergdir/bergman.hpp"

namespace bergdir {

/// One point of a flat-limit sweep: the ball kernel at radius R against the Fock kernel.
struct ConvergenceRecord {
  double radius;
  Complex kernel_value;
  Complex limit_value;
  double abs_error;  ///< |kernel_value - limit_value|
};

namespace asymptotics {

/// The ball space of radius R with alpha = nu R^2.
[[nodiscard]] BergmanDirichletSpace scaled_space(double nu, double radius, std::size_t n, int m);

/// Gamma(nu R^2 + n + 1) / (pi^n R^(2n) Gamma(nu R^2 + 1)), which tends to (nu/pi)^n.
[[nodiscard]] double prefactor_ratio(double nu, double radius, std::size_t n);

/// Kernels as functions of t = <z,w> at each radius (radii strictly increasing,
/// |t| < R^2 for all of them). Radii are evaluated independently.
[[nodiscard]] std::vector<ConvergenceRecord> convergence_sweep(double nu, int m, std::size_t n,
                                                               Complex t,
                                                               const std::vector<double>& radii);
[[nodiscard]] std::vector<ConvergenceRecord> convergence_sweep(double nu, int m, std::size_t n,
                                                               const CVector& z,
                                                               const CVector& w,
                                                               const std::vector<double>& radii);

/// Max abs_error over all (z_i, w_j) pairs at each radius.
[[nodiscard]] std::vector<double> uniform_sweep(double nu, int m, const std::vector<CVector>& zs,
                                                const std::vector<CVector>& ws,
                                                const std::vector<double>& radii);

/// (x, |3F2(b, c, x+a; d, e; z/x) - 2F2(b, c; d, e; z)|) for each x.
[[nodiscard]] std::vector<std::pair<double, double>> lemma5_sweep(
    double b, double c, double d, double e, double a, Complex z,
    const std::vector<double>& x_values);

/// CSV with columns R, Re(K_R), Im(K_R), Re(K_inf), Im(K_inf), abs_error,
/// 17 significant digits.
void write_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records);

}  // namespace asymptotics
}  // namespace bergdir
