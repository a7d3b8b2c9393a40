#pragma once

#include <functional>
#include <vector>

#include "bergdir/bargmann.hpp"
#include "bergdir/bergman.hpp"
#include "bergdir/holo.hpp"

namespace bergdir {

/// Nodes and positive weights of a one-dimensional Gauss rule.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// int_0^1 (1-t)^alpha g(t) dt, exact for deg g <= 2 count - 1.
[[nodiscard]] GaussRule gauss_jacobi_unit(int count, double alpha);
/// int_0^1 g(u) du
[[nodiscard]] GaussRule gauss_legendre_unit(int count);
/// int_0^inf e^{-s} g(s) ds
[[nodiscard]] GaussRule gauss_laguerre(int count);

enum class RadialWeight {
  jacobi,             ///< (1-t)^alpha on [0,1], t = r^2
  legendre_fallback,  ///< plain Legendre on [0,1] with (1-t)^alpha folded into the integrand
  laguerre,           ///< e^{-s} on [0,inf), s = nu r^2
};

/// Tensor-product grid in (radial, u = sin^2 phi, theta_1..theta_n). Integrands
/// z^a conj(z)^b with |a|, |b| <= capacity are integrated exactly up to roundoff.
class QuadratureGrid {
 public:
  /// Ball grid for the weight (1-|z|^2)^alpha.
  static QuadratureGrid ball(double alpha, int capacity = 16);
  /// Ball grid using the Legendre fallback; accurate but not exact for non-integer alpha.
  static QuadratureGrid ball_legendre(double alpha, int capacity = 16, int radial_nodes = 64);
  /// Whole-space grid for the weight exp(-nu |z|^2); nu enters at integration time.
  static QuadratureGrid gaussian(int capacity = 16);

  /// Same grid with every node count doubled.
  [[nodiscard]] QuadratureGrid refined() const;

  [[nodiscard]] RadialWeight radial_weight() const { return weight_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] int capacity() const { return capacity_; }
  [[nodiscard]] const GaussRule& radial() const { return radial_; }
  [[nodiscard]] const GaussRule& angular_u() const { return angular_u_; }
  [[nodiscard]] int theta_count() const { return theta_count_; }

 private:
  QuadratureGrid(RadialWeight weight, double alpha, int capacity, int radial_count, int u_count,
                 int theta_count);

  RadialWeight weight_;
  double alpha_;
  int capacity_;
  GaussRule radial_;
  GaussRule angular_u_;
  int theta_count_;
};

using Integrand = std::function<Complex(const CVector&)>;

/// int_{|z|<R} g(z) (1 - |z/R|^2)^alpha dlambda(z) for n in {1, 2}.
/// Throws CapacityError if declared_degree exceeds the grid capacity.
[[nodiscard]] Complex integrate_ball(std::size_t n, double alpha, const Integrand& integrand,
                                     const QuadratureGrid& grid, double radius = 1.0,
                                     int declared_degree = 0);

/// int_{C^n} g(z) exp(-nu |z|^2) dlambda(z) for n in {1, 2}.
[[nodiscard]] Complex integrate_gaussian(std::size_t n, double nu, const Integrand& integrand,
                                         const QuadratureGrid& grid, int declared_degree = 0);

/// The defining Sobolev-type inner product evaluated by quadrature:
///   <f_{1,m}, g_{1,m}> + m! sum_{|q|=m} <D^q f_{2,m}, D^q g_{2,m}> / q!
[[nodiscard]] Complex sobolev_inner_quadrature(const BergmanDirichletSpace& space,
                                               const TaylorSeries& f, const TaylorSeries& g,
                                               const QuadratureGrid& grid);
/// <f_{1,m}, g_{1,m}> + sum_{|l|=m} m!/l! <D^l f, D^l g>, Gaussian weight.
[[nodiscard]] Complex sobolev_inner_quadrature(const BargmannDirichletSpace& space,
                                               const TaylorSeries& f, const TaylorSeries& g,
                                               const QuadratureGrid& grid);

enum class BargmannNormForm { kernel_consistent, printed };

/// |quadrature of the defining norm of z^p - monomial_norm_sq| / monomial_norm_sq
[[nodiscard]] double verify_monomial_norm(const BergmanDirichletSpace& space, const MultiIndex& p,
                                          const QuadratureGrid& grid);
[[nodiscard]] double verify_monomial_norm(const BergmanDirichletSpace& space, const MultiIndex& p);
[[nodiscard]] double verify_monomial_norm(
    const BargmannDirichletSpace& space, const MultiIndex& p, const QuadratureGrid& grid,
    BargmannNormForm form = BargmannNormForm::kernel_consistent);
[[nodiscard]] double verify_monomial_norm(const BargmannDirichletSpace& space, const MultiIndex& p);

/// |<z^p, z^q>| / (||z^p|| ||z^q||) by quadrature; requires p != q.
[[nodiscard]] double verify_orthogonality(const BergmanDirichletSpace& space, const MultiIndex& p,
                                          const MultiIndex& q, const QuadratureGrid& grid);
[[nodiscard]] double verify_orthogonality(const BargmannDirichletSpace& space,
                                          const MultiIndex& p, const MultiIndex& q,
                                          const QuadratureGrid& grid);

/// Relative gap between the quadrature of the defining norm and function_norm_sq.
[[nodiscard]] double verify_sobolev_norm(const BergmanDirichletSpace& space,
                                         const TaylorSeries& f, const QuadratureGrid& grid);
[[nodiscard]] double verify_sobolev_norm(const BargmannDirichletSpace& space,
                                         const TaylorSeries& f, const QuadratureGrid& grid);

}  // namespace bergdir
