#include "bergdir/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "bergdir/compensated.hpp"
#include "bergdir/errors.hpp"

namespace bergdir {

namespace {

// Three-term recurrence of the orthonormal polynomials for a weight of total
// mass mu0: off[k+1] p_{k+1} = (x - diag[k]) p_k - off[k] p_{k-1}.
// diag has `count` entries, off has count + 1 (off[0] unused).
struct Recurrence {
  std::vector<double> diag;
  std::vector<double> off;
  double mu0 = 1.0;
};

// Evaluates p_count(x), its derivative, and sum_{k<count} p_k(x)^2.
struct PolyEval {
  double value;
  double derivative;
  double christoffel_sum;
};

PolyEval eval_orthonormal(const Recurrence& rec, double x) {
  const std::size_t count = rec.diag.size();
  double prev = 0.0;
  double cur = 1.0 / std::sqrt(rec.mu0);
  double dprev = 0.0;
  double dcur = 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    sum += cur * cur;
    const double next = ((x - rec.diag[k]) * cur - rec.off[k] * prev) / rec.off[k + 1];
    const double dnext = (cur + (x - rec.diag[k]) * dcur - rec.off[k] * dprev) / rec.off[k + 1];
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
  }
  return {cur, dcur, sum};
}

// Golub-Welsch for the nodes, polished by Newton on p_count; weights are the
// Christoffel numbers 1 / sum p_k(x_i)^2, which keep full relative accuracy
// even where the weights are tiny.
GaussRule rule_from_recurrence(const Recurrence& rec) {
  const auto count = static_cast<Eigen::Index>(rec.diag.size());
  Eigen::VectorXd diag(count);
  Eigen::VectorXd sub(std::max<Eigen::Index>(count - 1, 0));
  for (Eigen::Index k = 0; k < count; ++k) diag[k] = rec.diag[k];
  for (Eigen::Index k = 0; k + 1 < count; ++k) sub[k] = rec.off[k + 1];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  GaussRule rule;
  for (Eigen::Index i = 0; i < count; ++i) {
    double x = solver.eigenvalues()[i];
    for (int iter = 0; iter < 3; ++iter) {
      const auto e = eval_orthonormal(rec, x);
      if (e.derivative == 0.0) break;
      x -= e.value / e.derivative;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(1.0 / eval_orthonormal(rec, x).christoffel_sum);
  }
  return rule;
}

void check_count(int count) {
  if (count < 1) throw InvalidParameter("quadrature node count must be >= 1");
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

GaussRule gauss_jacobi_unit(int count, double alpha) {
  check_count(count);
  if (!(alpha > -1.0)) throw InvalidParameter("Gauss-Jacobi weight requires alpha > -1");
  // Jacobi weight (1-x)^alpha (1+x)^0 on [-1, 1], then t = (1+x)/2.
  const double a = alpha;
  const double b = 0.0;
  Recurrence rec;
  rec.diag.resize(count);
  rec.off.assign(static_cast<std::size_t>(count) + 1, 0.0);
  for (int k = 0; k < count; ++k) {
    const double s = 2.0 * k + a + b;
    rec.diag[k] = (k == 0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k <= count; ++k) {
    const double s = 2.0 * k + a + b;
    rec.off[k] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) /
                           (s * s * (s + 1.0) * (s - 1.0)));
  }
  rec.mu0 = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                     std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  GaussRule rule = rule_from_recurrence(rec);
  const double scale = std::exp(-(a + 1.0) * std::log(2.0));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
    rule.weights[i] *= scale;
  }
  return rule;
}

GaussRule gauss_legendre_unit(int count) { return gauss_jacobi_unit(count, 0.0); }

GaussRule gauss_laguerre(int count) {
  check_count(count);
  Recurrence rec;
  rec.diag.resize(count);
  rec.off.assign(static_cast<std::size_t>(count) + 1, 0.0);
  for (int k = 0; k < count; ++k) rec.diag[k] = 2.0 * k + 1.0;
  for (int k = 1; k <= count; ++k) rec.off[k] = k;
  rec.mu0 = 1.0;
  return rule_from_recurrence(rec);
}

QuadratureGrid::QuadratureGrid(RadialWeight weight, double alpha, int capacity,
                               int radial_count, int u_count, int theta_count)
    : weight_(weight), alpha_(alpha), capacity_(capacity), theta_count_(theta_count) {
  if (capacity_ < 0) throw InvalidParameter("grid capacity must be >= 0");
  switch (weight_) {
    case RadialWeight::jacobi:
      radial_ = gauss_jacobi_unit(radial_count, alpha_);
      break;
    case RadialWeight::legendre_fallback:
      radial_ = gauss_legendre_unit(radial_count);
      for (std::size_t i = 0; i < radial_.nodes.size(); ++i) {
        radial_.weights[i] *= std::pow(1.0 - radial_.nodes[i], alpha_);
      }
      break;
    case RadialWeight::laguerre:
      radial_ = gauss_laguerre(radial_count);
      break;
  }
  angular_u_ = gauss_legendre_unit(u_count);
}

// Capacity D: the radial integrand is a polynomial of degree <= D + 1 in t
// (n = 2 carries an extra factor t), the u-integrand has degree <= D, and
// theta frequencies are bounded by D in modulus.
QuadratureGrid QuadratureGrid::ball(double alpha, int capacity) {
  if (!(alpha > -1.0)) throw InvalidParameter("invariant violated: alpha > -1");
  return {RadialWeight::jacobi, alpha, capacity, capacity / 2 + 2, capacity / 2 + 1,
          2 * capacity + 1};
}

QuadratureGrid QuadratureGrid::ball_legendre(double alpha, int capacity, int radial_nodes) {
  if (!(alpha > -1.0)) throw InvalidParameter("invariant violated: alpha > -1");
  return {RadialWeight::legendre_fallback, alpha, capacity, radial_nodes, capacity / 2 + 1,
          2 * capacity + 1};
}

QuadratureGrid QuadratureGrid::gaussian(int capacity) {
  return {RadialWeight::laguerre, 0.0, capacity, capacity / 2 + 2, capacity / 2 + 1,
          2 * capacity + 1};
}

QuadratureGrid QuadratureGrid::refined() const {
  return {weight_,
          alpha_,
          capacity_,
          2 * static_cast<int>(radial_.nodes.size()),
          2 * static_cast<int>(angular_u_.nodes.size()),
          2 * theta_count_};
}

namespace {

void check_integration(std::size_t n, const QuadratureGrid& grid, int declared_degree) {
  if (n != 1 && n != 2) {
    throw InvalidParameter("quadrature is implemented for n in {1, 2}, got n = " +
                           std::to_string(n));
  }
  if (declared_degree > grid.capacity()) throw CapacityError(declared_degree, grid.capacity());
}

// Shared tensor-product sum. `radial_point` maps a radial node to the modulus
// r of z and the Jacobian factor multiplying its weight.
template <typename RadialPoint>
Complex tensor_sum(std::size_t n, const Integrand& integrand, const QuadratureGrid& grid,
                   RadialPoint radial_point) {
  const int nt = grid.theta_count();
  const double dtheta = kTwoPi / nt;
  std::vector<Complex> phase(static_cast<std::size_t>(nt));
  for (int j = 0; j < nt; ++j) phase[j] = std::polar(1.0, j * dtheta);

  ComplexNeumaierSum<double> acc;
  const auto& radial = grid.radial();
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const auto [r, jacobian] = radial_point(radial.nodes[i]);
    const double wr = radial.weights[i] * jacobian;
    if (n == 1) {
      Complex ring = 0.0;
      for (int j = 0; j < nt; ++j) ring += integrand(CVector{r * phase[j]});
      acc += wr * dtheta * ring;
      continue;
    }
    const auto& u_rule = grid.angular_u();
    for (std::size_t k = 0; k < u_rule.nodes.size(); ++k) {
      const double u = u_rule.nodes[k];
      const double r1 = r * std::sqrt(u);
      const double r2 = r * std::sqrt(1.0 - u);
      Complex torus = 0.0;
      for (int j1 = 0; j1 < nt; ++j1) {
        for (int j2 = 0; j2 < nt; ++j2) {
          torus += integrand(CVector{r1 * phase[j1], r2 * phase[j2]});
        }
      }
      acc += wr * u_rule.weights[k] * dtheta * dtheta * torus;
    }
  }
  return acc.value();
}

}  // namespace

Complex integrate_ball(std::size_t n, double alpha, const Integrand& integrand,
                       const QuadratureGrid& grid, double radius, int declared_degree) {
  check_integration(n, grid, declared_degree);
  if (grid.radial_weight() == RadialWeight::laguerre) {
    throw InvalidParameter("integrate_ball needs a ball grid");
  }
  if (grid.alpha() != alpha) {
    throw InvalidParameter("grid built for alpha = " + fmt::format("{}", grid.alpha()) +
                           ", integrating with alpha = " + fmt::format("{}", alpha));
  }
  if (!(radius > 0.0)) throw InvalidParameter("radius must be positive");
  // z = R sqrt(t) xi; dlambda = r^{2n-1} dr dsigma with r^{2n-1} dr = t^{n-1} dt / 2
  // and (n = 2) dsigma = du dtheta_1 dtheta_2 / 2.
  const double scale = std::pow(radius, 2.0 * static_cast<double>(n));
  const double angular = (n == 1) ? 0.5 : 0.25;
  return scale * angular * tensor_sum(n, integrand, grid, [&](double t) {
           return std::pair{radius * std::sqrt(t), n == 1 ? 1.0 : t};
         });
}

Complex integrate_gaussian(std::size_t n, double nu, const Integrand& integrand,
                           const QuadratureGrid& grid, int declared_degree) {
  check_integration(n, grid, declared_degree);
  if (grid.radial_weight() != RadialWeight::laguerre) {
    throw InvalidParameter("integrate_gaussian needs a Gauss-Laguerre grid");
  }
  if (!(nu > 0.0)) throw InvalidParameter("invariant violated: nu > 0");
  // s = nu r^2: r^{2n-1} dr = s^{n-1} ds / (2 nu^n).
  const double angular = (n == 1) ? 0.5 / nu : 0.25 / (nu * nu);
  return angular * tensor_sum(n, integrand, grid, [&](double s) {
           return std::pair{std::sqrt(s / nu), n == 1 ? 1.0 : s};
         });
}

namespace {

Integrand product_integrand(const TaylorSeries& f, const TaylorSeries& g) {
  return [&f, &g](const CVector& z) { return evaluate(f, z) * std::conj(evaluate(g, z)); };
}

int declared(const TaylorSeries& f, const TaylorSeries& g) {
  return std::max({f.max_degree(), g.max_degree(), 0});
}

double rel_gap(double approx, double exact) { return std::abs(approx - exact) / std::abs(exact); }

}  // namespace

Complex sobolev_inner_quadrature(const BergmanDirichletSpace& space, const TaylorSeries& f,
                                 const TaylorSeries& g, const QuadratureGrid& grid) {
  const int deg = declared(f, g);
  auto integrate = [&](const TaylorSeries& a, const TaylorSeries& b) {
    return integrate_ball(space.n(), space.alpha(), product_integrand(a, b), grid,
                          space.radius(), deg);
  };
  const auto [f_low, f_high] = split(f, space.m());
  const auto [g_low, g_high] = split(g, space.m());
  ComplexNeumaierSum<double> acc;
  acc += integrate(f_low, g_low);
  const double m_fact = to_double(factorial(space.m()));
  for (const auto& q : enumerate_indices(space.n(), space.m())) {
    const double weight = m_fact / to_double(multifactorial(q));
    acc += weight * integrate(derivative(f_high, q), derivative(g_high, q));
  }
  return acc.value();
}

Complex sobolev_inner_quadrature(const BargmannDirichletSpace& space, const TaylorSeries& f,
                                 const TaylorSeries& g, const QuadratureGrid& grid) {
  const int deg = declared(f, g);
  auto integrate = [&](const TaylorSeries& a, const TaylorSeries& b) {
    return integrate_gaussian(space.n(), space.nu(), product_integrand(a, b), grid, deg);
  };
  const auto f_low = split(f, space.m()).first;
  const auto g_low = split(g, space.m()).first;
  ComplexNeumaierSum<double> acc;
  acc += integrate(f_low, g_low);
  const double m_fact = to_double(factorial(space.m()));
  for (const auto& l : enumerate_indices(space.n(), space.m())) {
    const double weight = m_fact / to_double(multifactorial(l));
    acc += weight * integrate(derivative(f, l), derivative(g, l));
  }
  return acc.value();
}

double verify_monomial_norm(const BergmanDirichletSpace& space, const MultiIndex& p,
                            const QuadratureGrid& grid) {
  const auto phi = monomial(p);
  const double quad = sobolev_inner_quadrature(space, phi, phi, grid).real();
  return rel_gap(quad, bergman::monomial_norm_sq(space, p));
}

double verify_monomial_norm(const BergmanDirichletSpace& space, const MultiIndex& p) {
  return verify_monomial_norm(space, p, QuadratureGrid::ball(space.alpha()));
}

double verify_monomial_norm(const BargmannDirichletSpace& space, const MultiIndex& p,
                            const QuadratureGrid& grid, BargmannNormForm form) {
  const auto phi = monomial(p);
  const double quad = sobolev_inner_quadrature(space, phi, phi, grid).real();
  const double formula = form == BargmannNormForm::kernel_consistent
                             ? bargmann::monomial_norm_sq(space, p)
                             : bargmann::monomial_norm_sq_printed(space, p);
  return rel_gap(quad, formula);
}

double verify_monomial_norm(const BargmannDirichletSpace& space, const MultiIndex& p) {
  return verify_monomial_norm(space, p, QuadratureGrid::gaussian());
}

namespace {

void check_distinct(const MultiIndex& p, const MultiIndex& q) {
  if (p == q) throw InvalidParameter("verify_orthogonality requires p != q");
}

}  // namespace

double verify_orthogonality(const BergmanDirichletSpace& space, const MultiIndex& p,
                            const MultiIndex& q, const QuadratureGrid& grid) {
  check_distinct(p, q);
  const Complex ip = sobolev_inner_quadrature(space, monomial(p), monomial(q), grid);
  return std::abs(ip) /
         std::sqrt(bergman::monomial_norm_sq(space, p) * bergman::monomial_norm_sq(space, q));
}

double verify_orthogonality(const BargmannDirichletSpace& space, const MultiIndex& p,
                            const MultiIndex& q, const QuadratureGrid& grid) {
  check_distinct(p, q);
  const Complex ip = sobolev_inner_quadrature(space, monomial(p), monomial(q), grid);
  return std::abs(ip) /
         std::sqrt(bargmann::monomial_norm_sq(space, p) * bargmann::monomial_norm_sq(space, q));
}

double verify_sobolev_norm(const BergmanDirichletSpace& space, const TaylorSeries& f,
                           const QuadratureGrid& grid) {
  const double quad = sobolev_inner_quadrature(space, f, f, grid).real();
  const double exact = bergman::function_norm_sq(space, f);
  return exact == 0.0 ? std::abs(quad) : rel_gap(quad, exact);
}

double verify_sobolev_norm(const BargmannDirichletSpace& space, const TaylorSeries& f,
                           const QuadratureGrid& grid) {
  const double quad = sobolev_inner_quadrature(space, f, f, grid).real();
  const double exact = bargmann::function_norm_sq(space, f);
  return exact == 0.0 ? std::abs(quad) : rel_gap(quad, exact);
}

}  // namespace bergdir
