#include "qmock/numerics/numerics.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "qmock/error.hpp"

namespace qmock::numerics {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cd kI{0.0, 1.0};

cd e(cd x) { return std::exp(2.0 * kPi * kI * x); }

void check_tau(cd tau) {
  if (tau.imag() < kMinImTau) {
    throw PreconditionError("Im(tau) must be at least " + std::to_string(kMinImTau));
  }
}

// Smallest N >= 0 with quad n^2 - lin n >= L for every n >= N.
long gaussian_cutoff(double quad, double lin, double L) {
  const double root = (lin + std::sqrt(lin * lin + 4.0 * quad * std::max(L, 0.0))) / (2.0 * quad);
  return static_cast<long>(std::ceil(root)) + 1;
}

double log_inv(double tol) { return std::log(1.0 / tol) + 8.0; }

// Lattice coordinates (alpha, beta) of z = alpha + beta tau.
std::pair<double, double> lattice_coords(cd z, cd tau) {
  const double beta = z.imag() / tau.imag();
  return {z.real() - beta * tau.real(), beta};
}

double dist_to_int(double x) { return std::abs(x - std::round(x)); }

bool near_lattice(cd z, cd tau, double eps) {
  const auto [alpha, beta] = lattice_coords(z, tau);
  return dist_to_int(alpha) < eps && dist_to_int(beta) < eps;
}

}  // namespace

cd eval_theta(cd z, cd tau, double tol) {
  check_tau(tau);
  const double y = tau.imag();
  const double iz = std::abs(z.imag());
  const long N = gaussian_cutoff(kPi * y, kPi * y + 2.0 * kPi * iz, log_inv(tol) + kPi * iz);
  cd sum = 0;
  for (long n = -N; n <= N; ++n) {
    const double nn = static_cast<double>(n);
    const cd expo = kI * kPi * (2.0 * nn + 1.0) * z + 2.0 * kPi * kI * tau * (nn * (nn + 1.0) / 2.0 + 0.125);
    sum += (n % 2 == 0 ? 1.0 : -1.0) * std::exp(expo);
  }
  return sum;
}

cd eval_theta_normalized(cd z, cd tau, double tol) {
  check_tau(tau);
  const cd q = e(tau);
  const cd x = e(z);
  const double scale = std::max({1.0, std::abs(x), 1.0 / std::abs(x)});
  cd prod = std::exp(2.0 * kPi * kI * tau / 8.0) * std::exp(-kPi * kI * z) * (1.0 - x);
  cd qn = q;
  for (long n = 1; std::abs(qn) * scale > tol * 1e-6 || n < 3; ++n) {
    prod *= (1.0 - qn) * (1.0 - x * qn) * (1.0 - qn / x);
    qn *= q;
  }
  return prod;
}

cd eval_theta_product(cd z, cd tau, double tol) { return -eval_theta_normalized(z, tau, tol); }

cd eval_eta(cd tau, double tol) {
  check_tau(tau);
  const cd q = e(tau);
  cd prod = std::exp(2.0 * kPi * kI * tau / 24.0);
  cd qn = q;
  for (long n = 1; std::abs(qn) > tol * 1e-6; ++n) {
    prod *= 1.0 - qn;
    qn *= q;
  }
  return prod;
}

cd eval_mu(cd u, cd v, cd tau, double tol) {
  check_tau(tau);
  if (near_lattice(u, tau, 1e-6)) throw DomainError("mu: u is within 1e-6 of a pole");
  if (near_lattice(v, tau, 1e-6)) throw DomainError("mu: theta(v) vanishes within 1e-6");
  const double y = tau.imag();
  const double iu = std::abs(u.imag());
  const double iv = std::abs(v.imag());
  const long N = gaussian_cutoff(kPi * y, 3.0 * kPi * y + 2.0 * kPi * (iu + iv), log_inv(tol) + 2.0 * kPi * iu);
  cd sum = 0;
  for (long n = -N; n <= N; ++n) {
    const double nn = static_cast<double>(n);
    const cd num = std::exp(kI * kPi * nn + 2.0 * kPi * kI * (nn * v + tau * (nn * (nn + 1.0) / 2.0)));
    sum += num / (1.0 - e(u + nn * tau));
  }
  return std::exp(kPi * kI * u) * sum / eval_theta_normalized(v, tau, tol);
}

cd eval_h(cd z, cd tau, const Tolerance& tol) {
  check_tau(tau);
  const double y = tau.imag();
  // |integrand| <= 2 exp(-pi y x^2 + (2 pi |Re z| - pi) |x|)
  const double lin = std::max(0.0, 2.0 * kPi * std::abs(z.real()) - kPi);
  const double needed = static_cast<double>(gaussian_cutoff(kPi * y, lin, log_inv(tol.abs_tol)));
  const double T = tol.T > 0 ? tol.T : needed;
  const double tail = 2.0 * std::exp(-kPi * y * T * T + lin * T);
  if (tail > tol.abs_tol / 2) throw TruncationError("eval_h: truncation at T leaves a tail above tolerance");
  auto f = [&](double x) { return std::exp(kPi * kI * tau * x * x - 2.0 * kPi * z * x) / std::cosh(kPi * x); };
  double err = 0;
  const cd r = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -T, T, static_cast<unsigned>(tol.max_depth),
                                                                             1e-14, &err);
  if (err * std::max(1.0, std::abs(r)) > tol.abs_tol / 2) {
    throw TruncationError("eval_h: quadrature error estimate above tolerance");
  }
  return r;
}

cd eval_g_ab(double a, double b, cd tau, double tol) {
  check_tau(tau);
  const double y = tau.imag();
  const long N = gaussian_cutoff(kPi * y, 2.0 * kPi * y * std::abs(a) + 1.0, log_inv(tol));
  const double base = std::floor(a);
  cd sum = 0;
  for (long n = -N - 1; n <= N + 1; ++n) {
    const double nu = a - base + static_cast<double>(n);
    sum += nu * std::exp(kPi * kI * nu * nu * tau + 2.0 * kPi * kI * nu * b);
  }
  return sum;
}

cd eval_R(double a, double b, cd tau, const Tolerance& tol) {
  check_tau(tau);
  if (!(a > -0.5 && a < 0.5)) throw PreconditionError("eval_R needs -1/2 < a < 1/2");
  const double y = tau.imag();
  const cd taubar = std::conj(tau);
  const double nu_min = 0.5 - std::abs(a);
  const double L = log_inv(tol.abs_tol) + 6.0;
  // Terms nu e^(-pi nu^2 (y + u^2)); keep nu with pi nu^2 y below L.
  const long N = static_cast<long>(std::ceil(std::sqrt(L / (kPi * y)))) + 2;
  std::vector<double> nus;
  for (long n = -N; n <= N; ++n) nus.push_back(a + 0.5 + static_cast<double>(n));
  const double U = tol.T > 0 ? tol.T : std::sqrt(L / kPi) / nu_min;
  auto f = [&](double u) {
    cd s = 0;
    for (double nu : nus) {
      s += nu * std::exp(-kPi * kI * nu * nu * taubar - kPi * nu * nu * u * u + 2.0 * kPi * kI * nu * (b + 0.5));
    }
    return s * 2.0 * kI * u / std::sqrt(2.0 * y + u * u);
  };
  double err = 0;
  const cd integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, U, static_cast<unsigned>(tol.max_depth), 1e-15, &err);
  if (err * std::max(1.0, std::abs(integral)) > tol.abs_tol) {
    throw TruncationError("eval_R: quadrature error estimate above tolerance");
  }
  return -std::exp(kPi * kI * a * a * tau - 2.0 * kPi * kI * a * (b + 0.5)) * integral;
}

cd dR_dtaubar_numeric(double a, double b, cd tau, double step) {
  Tolerance tight;
  tight.abs_tol = 1e-14;
  auto R = [&](cd t) { return eval_R(a, b, t, tight); };
  const cd dx = (R(tau + step) - R(tau - step)) / (2.0 * step);
  const cd dy = (R(tau + kI * step) - R(tau - kI * step)) / (2.0 * step);
  return 0.5 * (dx + kI * dy);
}

cd dR_dtaubar_series(double a, double b, cd tau, double tol) {
  check_tau(tau);
  const double y = tau.imag();
  const cd taubar = std::conj(tau);
  const long N = gaussian_cutoff(kPi * y, 2.0 * kPi * y * std::abs(a) + 1.0, log_inv(tol));
  cd sum = 0;
  for (long n = -N - 1; n <= N; ++n) {
    const double nu = static_cast<double>(n) + 0.5;
    const double sign = n % 2 == 0 ? 1.0 : -1.0;  // (-1)^(nu - 1/2)
    sum += sign * (nu + a) * std::exp(-kPi * kI * nu * nu * taubar - 2.0 * kPi * kI * nu * (a * taubar - b));
  }
  return -kI / std::sqrt(2.0 * y) * std::exp(-2.0 * kPi * a * a * y) * sum;
}

namespace {

// sum_n num(n) q^(quad(n)) / ((w)_(n+1) (q/w)_(n+1)); num(n) multiplies in
// the extra factor of term n relative to term n - 1.
template <typename Step>
cd eulerian_numeric(cd w, cd tau, double tol, Step step) {
  check_tau(tau);
  const cd q = e(tau);
  cd ratio = 1.0 / ((1.0 - w) * (1.0 - q / w));
  cd sum = ratio;
  cd qn = q;
  for (long n = 1; n < 10000; ++n) {
    ratio *= step(n, q, qn) / ((1.0 - w * qn) * (1.0 - qn * q / w));
    sum += ratio;
    if (std::abs(ratio) < tol * 1e-6 && n > 3) return sum;
    qn *= q;
  }
  throw TruncationError("Eulerian sum did not converge");
}

}  // namespace

cd eval_g2(cd w, cd tau, double tol) {
  // (-q)_n q^(n(n+1)/2): factor (1 + q^n) q^n per step.
  return eulerian_numeric(w, tau, tol, [](long, cd, cd qn) { return (1.0 + qn) * qn; });
}

cd eval_g3(cd w, cd tau, double tol) {
  // q^(n(n+1)): factor q^(2n) per step.
  return eulerian_numeric(w, tau, tol, [](long, cd, cd qn) { return qn * qn; });
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names{"theta-odd",   "theta-shift", "theta-product",
                                              "mu-symmetry", "mu-shift-1",  "mu-shift-tau"};
  return names;
}

double transform_residual(const std::string& law, const EvalPoint& p) {
  const cd tau = p.tau, u = p.u, v = p.v;
  if (law == "theta-odd") return std::abs(eval_theta(u, tau) + eval_theta(-u, tau));
  if (law == "theta-shift") return std::abs(eval_theta(u + 1.0, tau) + eval_theta(u, tau));
  if (law == "theta-product") return std::abs(eval_theta(u, tau) - eval_theta_product(u, tau));
  if (law == "mu-symmetry") return std::abs(eval_mu(u, v, tau) - eval_mu(v, u, tau));
  if (law == "mu-shift-1") return std::abs(eval_mu(u + 1.0, v, tau) + eval_mu(u, v, tau));
  if (law == "mu-shift-tau") {
    const cd lhs = std::exp(-2.0 * kPi * kI * (u - v) - kPi * kI * tau) * eval_mu(u + tau, v, tau) +
                   std::exp(-kPi * kI * (u - v) - kPi * kI * tau / 4.0);
    return std::abs(lhs + eval_mu(u, v, tau));
  }
  throw LookupError("unknown law '" + law + "'");
}

std::vector<EvalPoint> random_points(std::uint64_t seed, int count, double min_im) {
  std::mt19937_64 rng(seed);
  // Fixed bit recipe so every platform draws the same doubles.
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto lattice_point = [&](cd tau) {
    const double alpha = unit();
    const double beta = 0.05 + 0.9 * unit();
    return alpha + beta * tau;
  };
  std::vector<EvalPoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const cd tau(unit() - 0.5, min_im + unit());
    const cd u = lattice_point(tau);
    const cd v = lattice_point(tau);
    pts.push_back({tau, u, v});
  }
  return pts;
}

namespace {

void fill_point(const EvalPoint& p, double tol, LawResidual* out) {
  const auto& names = law_names();
  for (std::size_t j = 0; j < names.size(); ++j) {
    LawResidual& r = out[j];
    r.law = names[j];
    r.point = p;
    r.tol = tol;
    r.residual = transform_residual(names[j], p);
    r.pass = r.residual < tol;
  }
}

}  // namespace

std::vector<LawResidual> law_batch_serial(const std::vector<EvalPoint>& points, double tol) {
  const std::size_t k = law_names().size();
  std::vector<LawResidual> out(points.size() * k);
  for (std::size_t i = 0; i < points.size(); ++i) fill_point(points[i], tol, &out[i * k]);
  return out;
}

std::vector<LawResidual> law_batch(const std::vector<EvalPoint>& points, double tol) {
  const std::size_t k = law_names().size();
  std::vector<LawResidual> out(points.size() * k);
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) fill_point(points[static_cast<std::size_t>(i)], tol, &out[static_cast<std::size_t>(i) * k]);
  return out;
}

LawResidual r_derivative_check(double tol) {
  const double a = 0.2, b = 0.1;
  const cd tau(0.0, 1.3);
  LawResidual r;
  r.law = "R-derivative";
  r.point = {tau, cd(a, 0.0), cd(b, 0.0)};
  r.tol = tol;
  r.residual = std::abs(dR_dtaubar_numeric(a, b, tau) - dR_dtaubar_series(a, b, tau));
  r.pass = r.residual < tol;
  return r;
}

}  // namespace qmock::numerics
