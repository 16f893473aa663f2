#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qmock::numerics {

using cd = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
/// Quadrature accuracy floor on Im(tau).
inline constexpr double kMinImTau = 0.05;

/// Error budget for the quadrature evaluators. A zero T or step means
/// "derive from abs_tol".
struct Tolerance {
  double abs_tol = kDefaultTol;
  double T = 0;
  int max_depth = 15;
};

/// Bilateral theta series sum (-1)^n e^(pi i (2n+1) z) q^(n(n+1)/2 + 1/8).
cd eval_theta(cd z, cd tau, double tol = kDefaultTol);
/// Triple product with the sign that makes it equal eval_theta.
cd eval_theta_product(cd z, cd tau, double tol = kDefaultTol);
/// The normalization used by mu and the theta quotients: -eval_theta, i.e.
/// q^(1/8) x^(-1/2) prod (1 - q^n)(1 - x q^(n-1))(1 - q^n / x).
cd eval_theta_normalized(cd z, cd tau, double tol = kDefaultTol);
/// q^(1/24) prod (1 - q^n).
cd eval_eta(cd tau, double tol = kDefaultTol);

/// a^(1/2) / theta(v) * sum (-b)^n q^(n(n+1)/2) / (1 - a q^n), a = e(u),
/// b = e(v), theta normalized as above. Throws DomainError within 1e-6 of a
/// pole.
cd eval_mu(cd u, cd v, cd tau, double tol = kDefaultTol);

/// Mordell integral over the real line of e^(pi i tau x^2 - 2 pi z x) / cosh(pi x).
cd eval_h(cd z, cd tau, const Tolerance& tol = {});

/// sum over nu in a + Z of nu e^(pi i nu^2 tau + 2 pi i nu b).
cd eval_g_ab(double a, double b, cd tau, double tol = kDefaultTol);

/// R(a tau - b; tau) from the period integral of g_(a+1/2, b+1/2) along
/// z = -conj(tau) + i t. Requires -1/2 < a < 1/2.
cd eval_R(double a, double b, cd tau, const Tolerance& tol = {});
/// d/d(conj tau) of R(a tau - b; tau) by central differences in x and y.
cd dR_dtaubar_numeric(double a, double b, cd tau, double step = 1e-4);
/// The explicit series for the same derivative.
cd dR_dtaubar_series(double a, double b, cd tau, double tol = kDefaultTol);

/// Direct Eulerian sums at w = e^(2 pi i alpha) given as the complex w.
cd eval_g2(cd w, cd tau, double tol = kDefaultTol);
cd eval_g3(cd w, cd tau, double tol = kDefaultTol);

struct EvalPoint {
  cd tau;
  cd u;
  cd v;
};

struct LawResidual {
  std::string law;
  EvalPoint point;
  double residual = 0;
  double tol = 0;
  bool pass = false;
};

/// theta-odd, theta-shift, theta-product, mu-symmetry, mu-shift-1,
/// mu-shift-tau.
const std::vector<std::string>& law_names();
/// Residual of one law at one point. Throws LookupError for unknown laws.
double transform_residual(const std::string& law, const EvalPoint& p);

/// Deterministic points: tau with Re in [-1/2, 1/2], Im in [min_im, min_im + 1];
/// u, v = alpha + beta tau kept 0.05 away from the pole lattice.
std::vector<EvalPoint> random_points(std::uint64_t seed, int count, double min_im = 0.5);

/// Every law at every point. The OpenMP kernel splits the points across
/// threads; both return rows in (point, law) order.
std::vector<LawResidual> law_batch_serial(const std::vector<EvalPoint>& points, double tol);
std::vector<LawResidual> law_batch(const std::vector<EvalPoint>& points, double tol);

/// The derivative check at a = 0.2, b = 0.1, tau = 1.3 i.
LawResidual r_derivative_check(double tol = 1e-5);

}  // namespace qmock::numerics
