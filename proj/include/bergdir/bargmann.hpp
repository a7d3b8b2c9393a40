#pragma once

#include <cstddef>

#include "bergdir/holo.hpp"
#include "bergdir/hypergeo.hpp"
#include "bergdir/multiindex.hpp"

namespace bergdir {

/// Bargmann-Dirichlet space of order m on C^n with Gaussian weight exp(-nu |z|^2).
class BargmannDirichletSpace {
 public:
  /// Throws InvalidParameter unless n >= 1, nu > 0, m >= 0.
  BargmannDirichletSpace(std::size_t n, double nu, int m);

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] double nu() const { return nu_; }
  [[nodiscard]] int m() const { return m_; }

 private:
  std::size_t n_;
  double nu_;
  int m_;
};

namespace bargmann {

[[nodiscard]] long double log_monomial_norm_sq(const BargmannDirichletSpace& space,
                                               const MultiIndex& p);

/// ||z^p||^2 = (pi/nu)^n p! / nu^|p|                             for |p| < m
///           = (pi/nu)^n p! nu^(m-|p|) |p|(|p|-1)...(|p|-m+1)     for |p| >= m
/// This is the normalization the basis expansion of the 2F2 kernel requires and
/// the one direct Gaussian integration of the Sobolev norm produces.
[[nodiscard]] double monomial_norm_sq(const BargmannDirichletSpace& space, const MultiIndex& p);

/// The misprinted variant with nu^m in the denominator for |p| >= m:
/// (pi/nu)^n p! nu^(-|p|-m) |p|(|p|-1)...(|p|-m+1). Only used to show it fails.
[[nodiscard]] double monomial_norm_sq_printed(const BargmannDirichletSpace& space,
                                              const MultiIndex& p);

[[nodiscard]] double function_norm_sq(const BargmannDirichletSpace& space, const TaylorSeries& f);

[[nodiscard]] Complex inner_product(const BargmannDirichletSpace& space, const TaylorSeries& f,
                                    const TaylorSeries& g);

/// (nu/pi)^n
[[nodiscard]] double kernel_prefactor(const BargmannDirichletSpace& space);

/// Coefficient c_k of t^k in the closed-form kernel.
[[nodiscard]] long double kernel_degree_coefficient(const BargmannDirichletSpace& space, int k);

/// (nu/pi)^n [ sum_{k<m} (nu t)^k/k! + t^m/(m!)^2 2F2(1, 1; m+1, m+1; nu t) ],  t = <z,w>.
[[nodiscard]] SeriesResult kernel_closed_result(const BargmannDirichletSpace& space, Complex t,
                                                SeriesOptions options = {});
[[nodiscard]] Complex kernel_closed(const BargmannDirichletSpace& space, Complex t,
                                    SeriesOptions options = {});
[[nodiscard]] Complex kernel_closed(const BargmannDirichletSpace& space, const CVector& z,
                                    const CVector& w, SeriesOptions options = {});

/// Degree-collapsed truncated basis expansion, sum_{k<=max_degree} t^k / ||z^{(k,0,..)}||^2.
[[nodiscard]] SeriesResult kernel_series_result(const BargmannDirichletSpace& space, Complex t,
                                                int max_degree = 200);
[[nodiscard]] Complex kernel_series(const BargmannDirichletSpace& space, Complex t,
                                    int max_degree = 200);
[[nodiscard]] Complex kernel_series(const BargmannDirichletSpace& space, const CVector& z,
                                    const CVector& w, int max_degree = 200);

[[nodiscard]] TaylorSeries kernel_section(const BargmannDirichletSpace& space, const CVector& w,
                                          int degree);

[[nodiscard]] Complex reproduce(const BargmannDirichletSpace& space, const TaylorSeries& f,
                                const CVector& w);

/// sqrt(K(z,z))
[[nodiscard]] double pointwise_bound(const BargmannDirichletSpace& space, const CVector& z);

}  // namespace bargmann
}  // namespace bergdir
