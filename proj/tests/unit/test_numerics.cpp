#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qmock/error.hpp"
#include "qmock/harness/harness.hpp"
#include "qmock/numerics/numerics.hpp"
#include "qmock/specfun/specfun.hpp"

using namespace qmock;
using namespace qmock::numerics;

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI{0.0, 1.0};

// R(a tau - b) from the series with the complementary error function,
// sum over nu in 1/2 + Z of (sgn nu - E((nu + a) sqrt(2y))) (-1)^(nu - 1/2)
// e^(-pi i nu^2 tau - 2 pi i nu u), E(x) = erf(sqrt(pi) x).
cd r_erfc_oracle(double a, double b, cd tau) {
  const double y = tau.imag();
  const cd u = a * tau - b;
  cd sum = 0;
  for (int n = -10; n < 10; ++n) {
    const double nu = n + 0.5;
    const double x = (nu + a) * std::sqrt(2 * y);
    const double weight = (nu > 0 ? 1.0 : -1.0) * std::erfc(std::sqrt(kPi) * std::abs(x));
    sum += weight * (n % 2 == 0 ? 1.0 : -1.0) * std::exp(-kPi * kI * nu * nu * tau - 2.0 * kPi * kI * nu * u);
  }
  return sum;
}

// Plain trapezoid rule for the Mordell integral on [-T, T].
cd h_trapezoid(cd z, cd tau, double T, int steps) {
  const double dx = 2 * T / steps;
  cd sum = 0;
  for (int k = 0; k <= steps; ++k) {
    const double x = -T + k * dx;
    const cd f = std::exp(kPi * kI * tau * x * x - 2.0 * kPi * z * x) / std::cosh(kPi * x);
    sum += (k == 0 || k == steps ? 0.5 : 1.0) * f;
  }
  return sum * dx;
}

cd sqrt_minus_i_tau(cd tau) { return std::sqrt(-kI * tau); }

}  // namespace

TEST(Theta, VanishesAtLatticePoints) {
  for (cd tau : {cd(0, 1), cd(1, 2), cd(0.3, 0.7)}) {
    EXPECT_LT(std::abs(eval_theta(0.0, tau)), 1e-14);
    EXPECT_LT(std::abs(eval_theta(tau, tau)), 1e-12);
    EXPECT_LT(std::abs(eval_theta_normalized(1.0, tau)), 1e-12);
  }
}

TEST(Theta, DerivativeAtZeroIsEtaCubed) {
  // theta'(0) = 2 pi i eta^3 for the bilateral sum.
  const double h = 1e-5;
  for (cd tau : {cd(0, 1), cd(0.2, 0.8), cd(-0.4, 1.5)}) {
    const cd d = (eval_theta(h, tau) - eval_theta(-h, tau)) / (2 * h);
    EXPECT_LT(std::abs(d - 2.0 * kPi * kI * std::pow(eval_eta(tau), 3)), 1e-8);
  }
}

TEST(Theta, ProductSignConventions) {
  for (const auto& p : random_points(3, 5)) {
    EXPECT_LT(std::abs(eval_theta(p.u, p.tau) - eval_theta_product(p.u, p.tau)), 1e-12);
    EXPECT_LT(std::abs(eval_theta(p.u, p.tau) + eval_theta_normalized(p.u, p.tau)), 1e-12);
  }
}

TEST(Eta, ModularInversion) {
  for (cd tau : {cd(0, 1.2), cd(0.3, 0.9), cd(-0.45, 1.0)}) {
    const cd lhs = eval_eta(-1.0 / tau);
    EXPECT_LT(std::abs(lhs - sqrt_minus_i_tau(tau) * eval_eta(tau)), 1e-12);
  }
}

TEST(Laws, TwentySeededPointsBelowTolerance) {
  const auto pts = random_points(7, 20);
  ASSERT_EQ(pts.size(), 20u);
  for (const auto& p : pts) EXPECT_GE(p.tau.imag(), 0.5);
  const auto rows = law_batch(pts, 1e-9);
  ASSERT_EQ(rows.size(), 20 * law_names().size());
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.law << " residual " << r.residual;
}

TEST(Laws, ParallelBatchMatchesSerial) {
  const auto pts = random_points(11, 12);
  const auto a = law_batch(pts, 1e-9);
  const auto b = law_batch_serial(pts, 1e-9);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].law, b[i].law);
    EXPECT_EQ(a[i].residual, b[i].residual);
  }
}

TEST(Laws, PointsAreDeterministic) {
  const auto a = random_points(42, 4);
  const auto b = random_points(42, 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].tau, b[i].tau);
    EXPECT_EQ(a[i].u, b[i].u);
  }
  EXPECT_NE(random_points(43, 1)[0].tau, a[0].tau);
  EXPECT_THROW(transform_residual("nope", a[0]), LookupError);
}

TEST(Mu, MatchesExactExpansion) {
  // mu(3 alpha, tau; 3 tau) from the exact series against the direct sum.
  const double alpha = 0.3;
  const cd tau(0, 1.5);
  const auto f = specfun::build_mu({3, 1, 3}, 24 * 30);
  const cd exact = harness::evaluate_numeric(f, tau, std::exp(kPi * kI * alpha));
  EXPECT_LT(std::abs(exact - eval_mu(3 * alpha, tau, 3.0 * tau)), 1e-10);
}

TEST(Mu, PoleRaisesDomainError) {
  const cd tau(0, 1);
  EXPECT_THROW(eval_mu(1e-8, 0.3, tau), DomainError);
  EXPECT_THROW(eval_mu(0.3, tau + 1.0, tau), DomainError);
}

TEST(Mordell, EvenAndElliptic) {
  const cd tau(0.25, 0.9);
  for (cd z : {cd(0.1, 0.05), cd(-0.2, 0.3)}) {
    const cd h = eval_h(z, tau);
    EXPECT_LT(std::abs(h - eval_h(-z, tau)), 1e-10);
    const cd shift1 = 2.0 / sqrt_minus_i_tau(tau) * std::exp(kPi * kI * (z + 0.5) * (z + 0.5) / tau);
    EXPECT_LT(std::abs(h + eval_h(z + 1.0, tau) - shift1), 1e-9);
    const cd lhs = h + std::exp(-2.0 * kPi * kI * z - kPi * kI * tau) * eval_h(z + tau, tau);
    EXPECT_LT(std::abs(lhs - 2.0 * std::exp(-kPi * kI * z - kPi * kI * tau / 4.0)), 1e-9);
  }
}

TEST(Mordell, AgreesWithTrapezoidOnWiderInterval) {
  const cd tau(0, 1);
  const cd z(0.15, 0.1);
  const cd ref = h_trapezoid(z, tau, 12.0, 24000);
  EXPECT_LT(std::abs(eval_h(z, tau) - ref), 1e-10);
  Tolerance t;
  t.T = 0.5;
  EXPECT_THROW(eval_h(z, tau, t), TruncationError);
}

TEST(UnaryTheta, MatchesExactSeries) {
  const qlaurent::Rational a(1, 6), b(1, 5);
  const cd tau(0.1, 0.4);
  const auto exact = specfun::build_g_ab(a, b, 3, 24 * 20);
  const cd s_exact = harness::evaluate_numeric(qlaurent::LocalizedSeries(exact), tau, 1.0);
  EXPECT_LT(std::abs(s_exact - eval_g_ab(1.0 / 6, 1.0 / 5, 3.0 * tau)), 1e-10);
}

TEST(UnaryTheta, Periodicity) {
  const double a = 0.3, b = std::numbers::sqrt2 / 3;
  const cd tau(0.2, 0.7);
  const cd g = eval_g_ab(a, b, tau);
  EXPECT_LT(std::abs(eval_g_ab(a + 1, b, tau) - g), 1e-12);
  EXPECT_LT(std::abs(eval_g_ab(a, b + 1, tau) - std::exp(2 * kPi * kI * a) * g), 1e-12);
  EXPECT_LT(std::abs(eval_g_ab(-a, -b, tau) + g), 1e-12);
  EXPECT_LT(std::abs(eval_g_ab(0, 0, tau)), 1e-15);
}

TEST(PeriodIntegral, MatchesErfcSeries) {
  struct Case {
    double a, b;
    cd tau;
  };
  for (const Case& c : {Case{0.2, 0.1, {0, 1.3}}, Case{-0.3, 0.45, {0.4, 0.8}}, Case{0.0, -0.2, {-0.3, 1.1}},
                        Case{0.45, 0.7, {0.1, 0.6}}}) {
    EXPECT_LT(std::abs(eval_R(c.a, c.b, c.tau) - r_erfc_oracle(c.a, c.b, c.tau)), 1e-10) << c.a << " " << c.b;
  }
}

TEST(PeriodIntegral, DerivativeCheck) {
  const auto r = r_derivative_check();
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.residual, 1e-5);
  EXPECT_EQ(r.law, "R-derivative");
  // The series itself against the erfc oracle differentiated numerically.
  const double a = -0.1, b = 0.3, h = 1e-4;
  const cd tau(0.2, 1.0);
  const cd dx = (r_erfc_oracle(a, b, tau + h) - r_erfc_oracle(a, b, tau - h)) / (2 * h);
  const cd dy = (r_erfc_oracle(a, b, tau + kI * h) - r_erfc_oracle(a, b, tau - kI * h)) / (2 * h);
  EXPECT_LT(std::abs(0.5 * (dx + kI * dy) - dR_dtaubar_series(a, b, tau)), 1e-6);
}

TEST(PeriodIntegral, Preconditions) {
  EXPECT_THROW(eval_R(0.5, 0.1, cd(0, 1)), PreconditionError);
  EXPECT_THROW(eval_R(-0.7, 0.1, cd(0, 1)), PreconditionError);
  EXPECT_THROW(eval_theta(0.1, cd(0, 0.01)), PreconditionError);
}
