#pragma once

#include <cstddef>

#include "bergdir/holo.hpp"
#include "bergdir/hypergeo.hpp"
#include "bergdir/multiindex.hpp"

namespace bergdir {

/// Weighted Bergman-Dirichlet space of order m on the ball |z| < R in C^n,
/// with measure (1 - |z/R|^2)^alpha dlambda.
///
/// The norm is ||f_{1,m}||^2 + m! sum_{|q|=m} ||D^q f_{2,m}||^2 / q!, where
/// f_{1,m} collects the Taylor terms of degree < m. Monomials are orthogonal,
/// so every norm and inner product below is evaluated in coefficient space.
class BergmanDirichletSpace {
 public:
  /// Throws InvalidParameter unless n >= 1, alpha > -1, m >= 0, radius > 0.
  BergmanDirichletSpace(std::size_t n, double alpha, int m, double radius = 1.0);

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] double radius() const { return radius_; }

 private:
  std::size_t n_;
  double alpha_;
  int m_;
  double radius_;
};

namespace bergman {

/// log ||z^p||^2, computed in extended precision so that degrees far past
/// Gamma-function overflow stay usable.
[[nodiscard]] long double log_monomial_norm_sq(const BergmanDirichletSpace& space,
                                               const MultiIndex& p);

/// ||z^p||^2 = pi^n Gamma(alpha+1) R^(2n) gamma_{alpha,p} R^(2|p|)   for |p| < m
///           = pi^n Gamma(alpha+1) R^(2n) gamma_{alpha,p} R^(2|p|-2m) for |p| >= m
[[nodiscard]] double monomial_norm_sq(const BergmanDirichletSpace& space, const MultiIndex& p);

/// gamma_{alpha,p}: p!/Gamma(|p|+alpha+n+1) below order m,
/// p! |p|(|p|-1)...(|p|-m+1) / Gamma(|p|-m+alpha+n+1) from order m on. Radius-free.
[[nodiscard]] double gamma_coeff(const BergmanDirichletSpace& space, const MultiIndex& p);

[[nodiscard]] double function_norm_sq(const BergmanDirichletSpace& space, const TaylorSeries& f);

/// <f, g> = sum_p ||z^p||^2 a_p conj(b_p)
[[nodiscard]] Complex inner_product(const BergmanDirichletSpace& space, const TaylorSeries& f,
                                    const TaylorSeries& g);

/// Gamma(alpha+n+1) / (pi^n Gamma(alpha+1) R^(2n)), the kernel value at w = 0 (m >= 1).
[[nodiscard]] double kernel_prefactor(const BergmanDirichletSpace& space);

/// Coefficient c_k of t^k in the closed-form kernel K = sum_k c_k <z,w>^k.
[[nodiscard]] long double kernel_degree_coefficient(const BergmanDirichletSpace& space, int k);

/// Closed-form kernel as a function of t = <z,w>:
///   P [ sum_{k<m} (alpha+n+1)_k s^k / k!
///       + t^m/(m!)^2 3F2(1, 1, alpha+n+1; m+1, m+1; s) ],   s = t/R^2,
/// with P = kernel_prefactor. Throws DomainError if |t| >= R^2.
[[nodiscard]] SeriesResult kernel_closed_result(const BergmanDirichletSpace& space, Complex t,
                                                SeriesOptions options = {});
[[nodiscard]] Complex kernel_closed(const BergmanDirichletSpace& space, Complex t,
                                    SeriesOptions options = {});
[[nodiscard]] Complex kernel_closed(const BergmanDirichletSpace& space, const CVector& z,
                                    const CVector& w, SeriesOptions options = {});

/// Truncated basis expansion sum_{k <= max_degree} t^k / ||z^{(k,0,..,0)}||^2, i.e.
/// sum_p z^p conj(w^p)/||z^p||^2 after collapsing each degree with
/// sum_{|p|=k} z^p conj(w)^p / p! = t^k / k!. Independent of the 3F2 path.
[[nodiscard]] SeriesResult kernel_series_result(const BergmanDirichletSpace& space, Complex t,
                                                int max_degree = 200);
[[nodiscard]] Complex kernel_series(const BergmanDirichletSpace& space, Complex t,
                                    int max_degree = 200);
[[nodiscard]] Complex kernel_series(const BergmanDirichletSpace& space, const CVector& z,
                                    const CVector& w, int max_degree = 200);

/// Taylor series of z -> K(z, w) through total degree `degree`, taken from
/// the closed-form coefficients.
[[nodiscard]] TaylorSeries kernel_section(const BergmanDirichletSpace& space, const CVector& w,
                                          int degree);

/// <f, K_w> with K_w truncated at deg f; equals f(w) for every polynomial f.
[[nodiscard]] Complex reproduce(const BergmanDirichletSpace& space, const TaylorSeries& f,
                                const CVector& w);

/// sqrt(K(z,z)): |f(z)| <= pointwise_bound(z) ||f|| for every f in the space.
[[nodiscard]] double pointwise_bound(const BergmanDirichletSpace& space, const CVector& z);

/// The cruder evaluation bound
///   Gamma(alpha+n+1)/(pi^n Gamma(alpha+1)) (sum_{k<m} (alpha+n+1)_k |z|^k/k! + (1-|z|^2)^-(alpha+n+1)),
/// kept for comparison. Unit ball only.
[[nodiscard]] double pointwise_bound_paper(const BergmanDirichletSpace& space, const CVector& z);

}  // namespace bergman
}  // namespace bergdir
