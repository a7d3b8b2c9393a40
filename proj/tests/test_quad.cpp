#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <random>

#include "bergdir/errors.hpp"
#include "bergdir/quad.hpp"
#include "oracles.hpp"

using namespace bergdir;
using oracle::pi;

namespace {

Integrand monomial_product(const MultiIndex& p, const MultiIndex& q) {
  return [p, q](const CVector& z) {
    Complex v = 1;
    for (std::size_t i = 0; i < z.size(); ++i) v *= std::pow(z[i], p[i]) * std::pow(std::conj(z[i]), q[i]);
    return v;
  };
}

double apply(const GaussRule& rule, int k) {
  double s = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
  return s;
}

}  // namespace

TEST_CASE("Gauss-Jacobi rule on [0,1]") {
  for (double alpha : {-0.5, 0.0, 0.5, 2.0, 25.0}) {
    for (int count : {1, 3, 8, 12}) {
      const auto rule = gauss_jacobi_unit(count, alpha);
      REQUIRE(rule.nodes.size() == static_cast<std::size_t>(count));
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        CHECK(rule.weights[i] > 0);
        CHECK(rule.nodes[i] > 0);
        CHECK(rule.nodes[i] < 1);
      }
      for (int k = 0; k <= 2 * count - 1; ++k) {
        const double exact = boost::math::beta(k + 1.0, alpha + 1.0);
        CHECK(apply(rule, k) == doctest::Approx(exact).epsilon(1e-13));
      }
    }
  }
  CHECK_THROWS_AS((void)gauss_jacobi_unit(0, 0.0), InvalidParameter);
  CHECK_THROWS_AS((void)gauss_jacobi_unit(4, -1.0), InvalidParameter);
}

TEST_CASE("Gauss-Legendre and Gauss-Laguerre rules") {
  const auto leg = gauss_legendre_unit(10);
  for (int k = 0; k < 20; ++k) CHECK(apply(leg, k) == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
  const auto lag = gauss_laguerre(12);
  for (const double w : lag.weights) CHECK(w > 0);
  for (int k = 0; k < 24; ++k) CHECK(apply(lag, k) == doctest::Approx(std::tgamma(k + 1.0)).epsilon(1e-12));
}

TEST_CASE("ball integrals") {
  const auto grid = QuadratureGrid::ball(0.0);
  const Integrand one = [](const CVector&) { return Complex(1, 0); };
  CHECK(std::abs(integrate_ball(2, 0.0, one, grid) - pi * pi / 2) < 1e-14);
  // |z_1|^2 over the unit ball of C^2: int_0^1 r^5 dr times the sphere moment 2 pi^2 1!/2!
  CHECK(std::abs(integrate_ball(2, 0.0, monomial_product({1, 0}, {1, 0}), grid) - pi * pi / 6) < 1e-14);
  CHECK(std::abs(integrate_ball(2, 0.0, monomial_product({1, 0}, {0, 1}), grid)) < 1e-15);
  CHECK(std::abs(integrate_ball(1, 0.0, one, grid) - pi) < 1e-14);
  for (double alpha : {-0.5, 0.5, 2.0}) {
    const auto g = QuadratureGrid::ball(alpha);
    CHECK(std::abs(integrate_ball(2, alpha, one, g) - pi * pi * std::tgamma(alpha + 1) / std::tgamma(alpha + 3)) < 1e-13);
    CHECK(std::abs(integrate_ball(1, alpha, one, g) - pi / (alpha + 1)) < 1e-13);
  }
}

TEST_CASE("Gaussian integrals") {
  const auto grid = QuadratureGrid::gaussian();
  const Integrand one = [](const CVector&) { return Complex(1, 0); };
  CHECK(std::abs(integrate_gaussian(2, 1.0, one, grid) - pi * pi) < 1e-13);
  CHECK(std::abs(integrate_gaussian(2, 1.0, monomial_product({1, 0}, {1, 0}), grid) - pi * pi) < 1e-13);
  CHECK(std::abs(integrate_gaussian(2, 1.0, monomial_product({1, 0}, {0, 1}), grid)) < 1e-14);
  CHECK(std::abs(integrate_gaussian(1, 2.5, monomial_product({3}, {3}), grid) - pi * 6 / std::pow(2.5, 4)) < 1e-13);
}

TEST_CASE("quadrature errors") {
  const auto ball = QuadratureGrid::ball(0.5, 4);
  const Integrand one = [](const CVector&) { return Complex(1, 0); };
  CHECK_THROWS_AS((void)integrate_ball(2, 0.5, one, ball, 1.0, 5), CapacityError);
  CHECK_THROWS_AS((void)integrate_ball(3, 0.5, one, ball), InvalidParameter);
  CHECK_THROWS_AS((void)integrate_ball(2, 1.0, one, ball), InvalidParameter);
  CHECK_THROWS_AS((void)integrate_ball(2, 0.5, one, QuadratureGrid::gaussian()), InvalidParameter);
  CHECK_THROWS_AS((void)integrate_gaussian(2, 1.0, one, ball), InvalidParameter);
  CHECK_THROWS_AS((void)integrate_gaussian(2, 0.0, one, QuadratureGrid::gaussian()), InvalidParameter);
  CHECK_THROWS_AS((void)QuadratureGrid::ball(-1.0), InvalidParameter);
  CHECK_THROWS_AS((void)verify_monomial_norm(BergmanDirichletSpace(2, 0.5, 0), {3, 3}, ball), CapacityError);
  CHECK_THROWS_AS((void)verify_orthogonality(BergmanDirichletSpace(2, 0.5, 0), {1, 0}, {1, 0}, ball),
                  InvalidParameter);
}

TEST_CASE("grid node counts") {
  const auto g = QuadratureGrid::ball(1.0, 6);
  CHECK(g.theta_count() > 2 * g.capacity());
  const auto r = g.refined();
  CHECK(r.radial().nodes.size() == 2 * g.radial().nodes.size());
  CHECK(r.angular_u().nodes.size() == 2 * g.angular_u().nodes.size());
  CHECK(r.theta_count() == 2 * g.theta_count());
  CHECK(r.capacity() == g.capacity());
}

TEST_CASE("exactness under refinement") {
  for (double alpha : {0.0, 0.5, 2.0}) {
    const auto grid = QuadratureGrid::ball(alpha, 8);
    const auto fine = grid.refined();
    for (std::size_t n : {1, 2}) {
      for (int k = 0; k <= 4; ++k) {
        for (const auto& p : enumerate_indices(n, k)) {
          for (const auto& q : enumerate_indices(n, 4 - k)) {
            const auto f = monomial_product(p, q);
            const Complex a = integrate_ball(n, alpha, f, grid);
            const Complex b = integrate_ball(n, alpha, f, fine);
            CHECK(std::abs(a - b) <= 1e-12 * std::max(std::abs(b), 1.0));
          }
        }
      }
    }
  }
  const auto gauss = QuadratureGrid::gaussian(8);
  for (const auto& p : enumerate_indices(2, 4)) {
    const auto f = monomial_product(p, p);
    const Complex a = integrate_gaussian(2, 1.5, f, gauss);
    const Complex b = integrate_gaussian(2, 1.5, f, gauss.refined());
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
  }
}

TEST_CASE("scaled balls") {
  // |z^p|^2 over the ball of radius R with weight (1 - |z/R|^2)^(nu R^2), nu = 1
  for (double R : {2.0, 5.0}) {
    const double alpha = R * R;
    const auto grid = QuadratureGrid::ball(alpha);
    for (int k = 0; k <= 4; ++k) {
      for (const auto& p : enumerate_indices(2, k)) {
        const double quad = integrate_ball(2, alpha, monomial_product(p, p), grid, R, 2 * k).real();
        const double l = 2 * std::log(pi) + 4 * std::log(R) + std::lgamma(alpha + 1) + 2 * k * std::log(R) +
                         static_cast<double>(oracle::lmultifact(p)) - std::lgamma(k + alpha + 3);
        CHECK(std::abs(quad / std::exp(l) - 1) <= 1e-8);
      }
    }
  }
}

TEST_CASE("Legendre fallback") {
  const Integrand one = [](const CVector&) { return Complex(1, 0); };
  const auto exact_grid = QuadratureGrid::ball_legendre(2.0, 8);
  CHECK(std::abs(integrate_ball(2, 2.0, one, exact_grid) - pi * pi / 12) < 1e-13);
  const auto rough = QuadratureGrid::ball_legendre(0.5, 8);
  const double exact = pi * pi * std::tgamma(1.5) / std::tgamma(3.5);
  CHECK(std::abs(integrate_ball(2, 0.5, one, rough).real() / exact - 1) < 1e-4);
}

TEST_CASE("verify_monomial_norm") {
  CHECK(verify_monomial_norm(BergmanDirichletSpace(2, 0.0, 0), {0, 0}) <= 1e-12);
  CHECK(verify_monomial_norm(BergmanDirichletSpace(2, 1.5, 2), {2, 1}) <= 1e-8);
  CHECK(verify_monomial_norm(BargmannDirichletSpace(2, 1.0, 2), {2, 1}) <= 1e-8);
  const BargmannDirichletSpace nu2(2, 2.0, 2);
  const auto grid = QuadratureGrid::gaussian();
  CHECK(verify_monomial_norm(nu2, {2, 1}, grid) <= 1e-8);
  CHECK(verify_monomial_norm(nu2, {2, 1}, grid, BargmannNormForm::printed) >= 0.5);
  // the two forms agree below the order
  CHECK(verify_monomial_norm(nu2, {1, 0}, grid, BargmannNormForm::printed) <= 1e-8);
  for (std::size_t n : {1, 2}) {
    for (double alpha : {-0.5, 0.5, 3.0}) {
      for (int m : {0, 1, 2, 3}) {
        const BergmanDirichletSpace s(n, alpha, m, 1.7);
        const auto g = QuadratureGrid::ball(alpha, 6);
        for (int k = 0; k <= 6; ++k) {
          for (const auto& p : enumerate_indices(n, k)) CHECK(verify_monomial_norm(s, p, g) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("verify_orthogonality") {
  const auto ball = QuadratureGrid::ball(0.5, 6);
  for (double alpha : {0.0, 0.5, 7.0}) {
    const auto g = QuadratureGrid::ball(alpha, 6);
    CHECK(verify_orthogonality(BergmanDirichletSpace(2, alpha, 0), {1, 0}, {0, 1}, g) <= 1e-14);
  }
  CHECK(verify_orthogonality(BergmanDirichletSpace(2, 0.5, 1), {2, 0}, {1, 1}, ball) <= 1e-10);
  CHECK(verify_orthogonality(BargmannDirichletSpace(2, 1.0, 2), {0, 0}, {3, 3}, QuadratureGrid::gaussian(6)) <=
        1e-10);
}

TEST_CASE("verify_sobolev_norm") {
  std::mt19937_64 rng(79);
  const auto f = oracle::random_polynomial(rng, 2, 6);
  CHECK(verify_sobolev_norm(BergmanDirichletSpace(2, 0.5, 2), f, QuadratureGrid::ball(0.5, 6)) <= 1e-8);
  CHECK(verify_sobolev_norm(BargmannDirichletSpace(2, 1.0, 1), f, QuadratureGrid::gaussian(6)) <= 1e-8);
  const BergmanDirichletSpace s(2, 2.0, 1);
  const auto grid = QuadratureGrid::ball(2.0, 6);
  CHECK(verify_sobolev_norm(s, monomial({2, 3}), grid) == verify_monomial_norm(s, {2, 3}, grid));
  CHECK(verify_sobolev_norm(s, TaylorSeries(2), grid) == 0);
}
