#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "bergdir/bergman.hpp"
#include "bergdir/errors.hpp"
#include "bergdir/quad.hpp"
#include "oracles.hpp"

using namespace bergdir;
using oracle::pi;

namespace {

Complex classical_kernel(const BergmanDirichletSpace& s, Complex t) {
  const double c = std::tgamma(s.alpha() + s.n() + 1) / (std::pow(pi, s.n()) * std::tgamma(s.alpha() + 1));
  return c * std::pow(1.0 - t, -(s.alpha() + s.n() + 1));
}

}  // namespace

TEST_CASE("space invariants") {
  CHECK_THROWS_AS(BergmanDirichletSpace(2, -1.0, 0), InvalidParameter);
  CHECK_THROWS_AS(BergmanDirichletSpace(2, -3.0, 0), InvalidParameter);
  CHECK_THROWS_AS(BergmanDirichletSpace(0, 0.0, 0), InvalidParameter);
  CHECK_THROWS_AS(BergmanDirichletSpace(2, 0.0, -1), InvalidParameter);
  CHECK_THROWS_AS(BergmanDirichletSpace(2, 0.0, 1, 0.0), InvalidParameter);
  CHECK_THROWS_AS(BergmanDirichletSpace(2, NAN, 1), InvalidParameter);
  CHECK_NOTHROW(BergmanDirichletSpace(2, -0.999, 3, 2.0));
  try {
    BergmanDirichletSpace(2, -1.5, 0);
  } catch (const InvalidParameter& e) {
    CHECK(std::string(e.what()).find("alpha > -1") != std::string::npos);
  }
}

TEST_CASE("monomial norms and gamma coefficients") {
  const BergmanDirichletSpace a00(2, 0.0, 0);
  CHECK(bergman::monomial_norm_sq(a00, {0, 0}) == doctest::Approx(pi * pi / 2).epsilon(1e-15));
  CHECK(bergman::monomial_norm_sq(BergmanDirichletSpace(2, 0.0, 1), {1, 0}) ==
        doctest::Approx(pi * pi / 2).epsilon(1e-15));
  CHECK(bergman::gamma_coeff(BergmanDirichletSpace(2, 0.0, 1), {0, 0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(bergman::gamma_coeff(BergmanDirichletSpace(2, 0.0, 1), {2, 0}) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(verify_monomial_norm(BergmanDirichletSpace(2, 0.0, 2), {1, 1}) <= 1e-8);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ua(-0.9, 4.0);
  std::uniform_int_distribution<int> um(0, 4), up(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = ua(rng);
    const BergmanDirichletSpace s(2, alpha, um(rng));
    const MultiIndex p{up(rng), up(rng)};
    const double ratio = bergman::monomial_norm_sq(s, p) / (pi * pi * std::tgamma(alpha + 1));
    CHECK(ratio == doctest::Approx(bergman::gamma_coeff(s, p)).epsilon(1e-13));
  }
}

TEST_CASE("monomial norms against the test-side formula") {
  for (std::size_t n : {1, 2, 3}) {
    for (double alpha : {-0.5, 0.0, 0.5, 2.0, 7.25}) {
      for (int m : {0, 1, 3}) {
        for (double R : {1.0, 2.5}) {
          const BergmanDirichletSpace s(n, alpha, m, R);
          for (int k = 0; k <= 7; ++k) {
            for (const auto& p : enumerate_indices(n, k)) {
              const double expected = static_cast<double>(oracle::ball_norm_sq(n, alpha, m, R, p));
              CHECK(bergman::monomial_norm_sq(s, p) == doctest::Approx(expected).epsilon(1e-13));
            }
          }
        }
      }
    }
  }
  // far past Gamma overflow the log form stays finite
  const BergmanDirichletSpace s(2, 0.5, 2);
  const long double l = bergman::log_monomial_norm_sq(s, {400, 300});
  CHECK(std::isfinite(static_cast<double>(l)));
  CHECK(std::abs(l - std::log(oracle::ball_norm_sq(2, 0.5L, 2, 1.0L, {400, 300}))) < 1e-9L * std::abs(l));
}

TEST_CASE("function norms and inner products") {
  const BergmanDirichletSpace s(2, 0.0, 1);
  CHECK(bergman::function_norm_sq(s, TaylorSeries(2)) == 0);
  CHECK(bergman::function_norm_sq(s, monomial({2, 3})) == bergman::monomial_norm_sq(s, {2, 3}));
  TaylorSeries f(2);
  f.set({0, 0}, 1.0);
  f.set({1, 0}, 1.0);
  CHECK(bergman::function_norm_sq(s, f) == doctest::Approx(pi * pi).epsilon(1e-15));
  CHECK(bergman::inner_product(s, monomial({1, 0}), monomial({0, 1})) == Complex(0, 0));
  CHECK_THROWS_AS((void)bergman::function_norm_sq(s, TaylorSeries(3)), DimensionMismatch);

  std::mt19937_64 rng(19);
  const BergmanDirichletSpace t(2, 0.5, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::random_polynomial(rng, 2, 6);
    const auto h = oracle::random_polynomial(rng, 2, 6);
    const Complex self = bergman::inner_product(t, g, g);
    CHECK(std::abs(self.imag()) <= 1e-15 * self.real());
    CHECK(self.real() == doctest::Approx(bergman::function_norm_sq(t, g)).epsilon(1e-14));
    CHECK(std::abs(bergman::inner_product(t, g, h) - std::conj(bergman::inner_product(t, h, g))) <
          1e-13 * std::abs(bergman::inner_product(t, g, h)));
  }
}

TEST_CASE("closed-form kernel examples") {
  const BergmanDirichletSpace s(2, 0.0, 0);
  CHECK(std::abs(bergman::kernel_closed(s, 0.5) - 16 / (pi * pi)) < 1e-15);
  for (double alpha : {0.0, 1.5}) {
    for (double R : {1.0, 3.0}) {
      const BergmanDirichletSpace t(3, alpha, 2, R);
      const double expected = std::tgamma(alpha + 4) / (std::pow(pi, 3) * std::tgamma(alpha + 1) * std::pow(R, 6));
      CHECK(bergman::kernel_closed(t, 0.0).real() == doctest::Approx(expected).epsilon(1e-14));
      CHECK(bergman::kernel_prefactor(t) == doctest::Approx(expected).epsilon(1e-14));
    }
  }
  const BergmanDirichletSpace u(2, 0.5, 2);
  CHECK(oracle::rel(bergman::kernel_closed(u, 0.3), bergman::kernel_series(u, 0.3)) <= 1e-10);
  const CVector z{Complex(0.3, 0.1), Complex(-0.2, 0.4)};
  const CVector w{Complex(0.5, -0.3), Complex(0.1, 0.2)};
  CHECK(bergman::kernel_closed(u, z, w) == bergman::kernel_closed(u, inner(z, w)));
}

TEST_CASE("kernel domain guard") {
  const BergmanDirichletSpace s(2, 0.0, 1, 2.0);
  CHECK_THROWS_AS((void)bergman::kernel_closed(s, 4.0), DomainError);
  CHECK_THROWS_AS((void)bergman::kernel_closed(s, Complex(0, -4.5)), DomainError);
  CHECK_THROWS_AS((void)bergman::kernel_series(s, 4.0), DomainError);
  CHECK_NOTHROW((void)bergman::kernel_closed(s, 3.9));
  CHECK_THROWS_AS((void)bergman::kernel_closed(s, CVector{1.0}, CVector{1.0, 0.0}), DimensionMismatch);
}

TEST_CASE("series kernel") {
  const BergmanDirichletSpace s(2, 0.7, 3);
  CHECK(bergman::kernel_series(s, Complex(0.4, 0.2), 0) == Complex(bergman::kernel_prefactor(s), 0));
  const BergmanDirichletSpace c(2, 0.0, 0);
  CHECK(std::abs(bergman::kernel_series(c, 0.5) - 16 / (pi * pi)) <= 1e-10 * 16 / (pi * pi));

  // Explicit multi-index enumeration, no collapsing of degrees.
  std::mt19937_64 rng(23);
  for (std::size_t n : {1, 2, 3}) {
    for (double alpha : {0.0, 0.5, 2.0}) {
      for (int m : {0, 1, 3}) {
        for (double R : {1.0, 5.0}) {
          const BergmanDirichletSpace t(n, alpha, m, R);
          const CVector z = oracle::random_point(rng, n, 0.8 * R);
          const CVector w = oracle::random_point(rng, n, 0.9 * R);
          const Complex explicit_sum = oracle::explicit_kernel(z, w, 12, [&](const MultiIndex& p) {
            return oracle::ball_norm_sq(static_cast<int>(n), alpha, m, R, p);
          });
          CHECK(oracle::rel(bergman::kernel_series(t, z, w, 12), explicit_sum) <= 1e-13);
        }
      }
    }
  }
}

TEST_CASE("series result bookkeeping") {
  const BergmanDirichletSpace s(2, 1.0, 1);
  const auto r = bergman::kernel_series_result(s, 0.6, 40);
  CHECK(r.terms_used == 41);
  const auto exact = bergman::kernel_closed(s, 0.6);
  CHECK(std::abs(r.value - exact) <= r.error_estimate);
  CHECK(r.error_estimate <= 100 * std::abs(r.value - exact));

  // the estimate bounds the true truncation error, including below the order
  std::mt19937_64 rng(43);
  for (double alpha : {-0.5, 0.0, 3.0, 12.0}) {
    for (int m : {0, 1, 4}) {
      for (int d : {0, 2, 10, 30}) {
        const BergmanDirichletSpace t(2, alpha, m, 1.5);
        const Complex x = oracle::random_complex(rng, 0.8 * 2.25);
        const auto got = bergman::kernel_series_result(t, x, d);
        const Complex truth = bergman::kernel_closed(t, x);
        CHECK(std::abs(got.value - truth) <= got.error_estimate * (1 + 1e-12) + 1e-14 * std::abs(truth));
      }
    }
  }
  CHECK_THROWS_AS((void)bergman::kernel_series(s, 0.1, -1), InvalidParameter);
}

TEST_CASE("m = 0 reduces to the weighted Bergman kernel") {
  std::mt19937_64 rng(29);
  for (std::size_t n : {1, 2, 3}) {
    for (double alpha : {0.0, 0.5, 2.0}) {
      const BergmanDirichletSpace s(n, alpha, 0);
      for (int i = 0; i < 5; ++i) {
        const Complex t = oracle::random_complex(rng, 0.8);
        CHECK(oracle::rel(bergman::kernel_closed(s, t), classical_kernel(s, t)) <= 1e-12);
      }
    }
  }
  // radius scaling for m = 0: K_R(t) = R^(-2n) K_1(t/R^2)
  const BergmanDirichletSpace one(2, 1.5, 0), big(2, 1.5, 0, 3.0);
  const Complex t(2.5, -4.0);
  CHECK(oracle::rel(bergman::kernel_closed(big, t), bergman::kernel_closed(one, t / 9.0) / 81.0) <= 1e-13);
}

TEST_CASE("Hermitian symmetry and positive semidefiniteness") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {1, 2, 3}) {
    for (int m : {0, 1, 2, 3}) {
      const BergmanDirichletSpace s(n, 0.5, m, 2.0);
      for (int i = 0; i < 5; ++i) {
        const CVector z = oracle::random_point(rng, n, 1.9);
        const CVector w = oracle::random_point(rng, n, 1.7);
        const Complex a = bergman::kernel_closed(s, z, w);
        const Complex b = bergman::kernel_closed(s, w, z);
        CHECK(std::abs(a - std::conj(b)) <= 1e-13 * std::abs(a));
      }
      std::vector<CVector> pts;
      for (int i = 0; i < 4; ++i) pts.push_back(oracle::random_point(rng, n, 2.0 * std::sqrt((i + 0.5) / 4.5)));
      Eigen::Matrix4cd gram;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) gram(i, j) = bergman::kernel_closed(s, pts[i], pts[j]);
      }
      const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(gram);
      CHECK(eig.eigenvalues().minCoeff() >= -1e-9 * gram.trace().real());
    }
  }
}

TEST_CASE("reproducing property") {
  const BergmanDirichletSpace s(2, 0.5, 2);
  const CVector w{Complex(0.3, -0.2), Complex(0.1, 0.4)};
  CHECK(std::abs(bergman::reproduce(s, monomial({0, 0}), w) - Complex(1, 0)) < 1e-15);
  for (const auto& p : enumerate_indices(2, 4)) {
    const Complex expected = evaluate(monomial(p), w);
    CHECK(std::abs(bergman::reproduce(s, monomial(p), w) - expected) <= 1e-14);
  }
  std::mt19937_64 rng(37);
  for (std::size_t n : {1, 2, 3}) {
    for (double alpha : {0.0, 2.0}) {
      for (int m : {0, 3}) {
        const BergmanDirichletSpace t(n, alpha, m, 1.5);
        const auto f = oracle::random_polynomial(rng, n, 12);
        const CVector x = oracle::random_point(rng, n, 0.7 * 1.5);
        CHECK(oracle::rel(bergman::reproduce(t, f, x), evaluate(f, x)) <= 1e-10);
      }
    }
  }
  // the section of K_w really is the kernel, truncated
  const auto section = bergman::kernel_section(s, w, 60);
  const CVector z{Complex(-0.2, 0.1), Complex(0.3, 0.3)};
  CHECK(oracle::rel(evaluate(section, z), bergman::kernel_closed(s, z, w)) <= 1e-13);
  CHECK_THROWS_AS((void)bergman::reproduce(s, monomial({1, 0}), CVector{1.0, 0.0}), DomainError);
}

TEST_CASE("pointwise bound") {
  for (double alpha : {0.0, 1.5}) {
    const BergmanDirichletSpace s(2, alpha, 2);
    const double expected = std::sqrt(std::tgamma(alpha + 3) / (pi * pi * std::tgamma(alpha + 1)));
    CHECK(bergman::pointwise_bound(s, CVector{0.0, 0.0}) == doctest::Approx(expected).epsilon(1e-14));
  }
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> um(0, 3);
  int violations = 0;
  for (int i = 0; i < 50; ++i) {
    const BergmanDirichletSpace s(2, 0.5 * (i % 5), um(rng));
    const auto f = oracle::random_polynomial(rng, 2, 1 + i % 8);
    const CVector z = oracle::random_point(rng, 2, 0.95 * std::sqrt((i + 0.5) / 50));
    if (std::abs(evaluate(f, z)) > bergman::pointwise_bound(s, z) * std::sqrt(bergman::function_norm_sq(s, f))) {
      ++violations;
    }
  }
  CHECK(violations == 0);

  const BergmanDirichletSpace s(2, 0.5, 2);
  const CVector dir = oracle::random_point(rng, 2, 1.0);
  double previous = 0;
  for (int i = 0; i < 10; ++i) {
    const double b = bergman::pointwise_bound(s, dir.scaled(0.095 * i));
    CHECK(b >= previous);
    previous = b;
  }
  CHECK_THROWS_AS((void)bergman::pointwise_bound(s, CVector{1.0, 0.0}), DomainError);
  CHECK_THROWS_AS((void)bergman::pointwise_bound_paper(BergmanDirichletSpace(2, 0.5, 2, 2.0), CVector{0.1, 0.0}),
                  InvalidParameter);
  CHECK(bergman::pointwise_bound_paper(s, CVector{0.3, 0.2}) > 0);
}
