#include "qmock/qlaurent/constructors.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "qmock/error.hpp"

namespace qmock::qlaurent {

using exactring::floor_div;

namespace {

Cyclotomic sign_pow(int sign, std::int64_t n) { return (sign < 0 && (n % 2 != 0)) ? Cyclotomic(-1L) : Cyclotomic(1L); }

// Visits every integer n in [lo, hi] with a n^2 + b n + c < bound (a > 0).
void for_each_quadratic_below(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t bound, std::int64_t lo,
                              std::int64_t hi, const std::function<void(std::int64_t)>& visit) {
  const double disc = static_cast<double>(b) * b - 4.0 * a * (static_cast<double>(c) - static_cast<double>(bound));
  if (disc < 0) return;
  const double root = std::sqrt(disc);
  const auto from = std::max(lo, static_cast<std::int64_t>(std::floor((-b - root) / (2.0 * a))) - 2);
  const auto to = std::min(hi, static_cast<std::int64_t>(std::ceil((-b + root) / (2.0 * a))) + 2);
  for (std::int64_t n = from; n <= to; ++n) {
    if (a * n * n + b * n + c < bound) visit(n);
  }
}

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 8;

}  // namespace

QSeries pochhammer(const Monomial& a, std::int64_t step, std::optional<long> n, std::int64_t order, int denom) {
  if (!n) {
    if (a.q_exp <= 0) {
      throw PreconditionError("infinite Pochhammer symbol needs a base of positive q-valuation; split off the "
                              "leading factors first");
    }
    ProductForm p;
    p.times_pochhammer_infinite(a, step, 1);
    return p.expand(order, denom).expanded_num();
  }
  if (*n < 0) throw PreconditionError("pochhammer: negative length");
  QSeries s = QSeries(WLaurent(1L), denom);
  for (long i = 0; i < *n; ++i) {
    const Monomial x = a * Monomial::q(step * i);
    QSeries factor = QSeries::from_terms({{0, WLaurent(1L)}, {x.q_exp, -x.coefficient()}}, kExactOrder, denom);
    s = s * factor;
  }
  return s.truncated(order);
}

ProductForm eta_product(int k, int power) {
  ProductForm p(Monomial::q(static_cast<std::int64_t>(k) * power));
  p.times_pochhammer_infinite(Monomial::q(24LL * k), 24LL * k, power);
  return p;
}

QSeries eta(int k, std::int64_t order) { return eta_product(k, 1).expand(order).expanded_num(); }

QSeries theta_sum(int l, int m, int k, std::int64_t order) {
  if (k <= 0) throw PreconditionError("theta: modulus must be positive");
  // q-exponent of the n-th term in lattice units: 12 m (2n+1) + 12 k n(n+1) + 3k.
  auto e = [&](std::int64_t n) { return 12LL * m * (2 * n + 1) + 12LL * k * n * (n + 1) + 3LL * k; };
  std::vector<QSeries::Term> terms;
  for_each_quadratic_below(12LL * k, 12LL * k + 24LL * m, 12LL * m + 3LL * k, order, -kUnbounded, kUnbounded,
                           [&](std::int64_t n) {
                             terms.emplace_back(e(n), WLaurent::s_monomial(static_cast<int>(l * (2 * n + 1)),
                                                                          sign_pow(-1, n)));
                           });
  return QSeries::from_terms(std::move(terms), order);
}

ProductForm theta_product(int l, int m, int k) {
  if (k <= 0) throw PreconditionError("theta: modulus must be positive");
  const std::int64_t kq = 24LL * k;
  // -q^(k/8) x^(-1/2) (q^k; q^k)(x; q^k)(q^k / x; q^k), matching theta_sum.
  ProductForm p(Monomial{Cyclotomic(-1L), -l, 3LL * k - 12LL * m});
  const Monomial x{Cyclotomic(1L), 2 * l, 24LL * m};
  p.times_pochhammer_infinite(Monomial::q(kq), kq);
  p.times_pochhammer_infinite(x, kq);
  p.times_pochhammer_infinite(x.inverse() * Monomial::q(kq), kq);
  return p;
}

LocalizedSeries theta(int l, int m, int k, ThetaMode mode, std::int64_t order) {
  if (mode == ThetaMode::kSum) return LocalizedSeries(theta_sum(l, m, k, order));
  return theta_product(l, m, k).expand(order);
}

LocalizedSeries lambert(int sign, const Rational& A, const Rational& B, int r, int k, int j, std::int64_t order,
                        int denom) {
  if (A <= 0) throw PreconditionError("lambert: quadratic coefficient A must be positive");
  if (r == 0) throw PreconditionError("lambert: r = 0 makes the pole w-free");
  if (k <= 0) throw PreconditionError("lambert: k must be positive");
  if (sign != 1 && sign != -1) throw PreconditionError("lambert: sign must be +1 or -1");
  const std::int64_t a = to_lattice(A, denom);
  const std::int64_t b = to_lattice(B, denom);
  auto E = [&](std::int64_t n) { return a * n * n + b * n; };
  const std::int64_t dd = denom;
  auto D = [&](std::int64_t n) { return dd * (k * n + j); };

  std::vector<QSeries::Term> terms;
  std::vector<QSeries::Term> pole;
  auto visit = [&](std::int64_t n) {
    const Cyclotomic c = sign_pow(sign, n);
    const std::int64_t d = D(n);
    if (d == 0) {
      pole.emplace_back(E(n), WLaurent(c));
    } else if (d > 0) {
      for (std::int64_t i = 0; E(n) + i * d < order; ++i) {
        terms.emplace_back(E(n) + i * d, WLaurent::w_monomial(static_cast<int>(r * i), c));
      }
    } else {
      // 1/(1 - y) = -y^-1 / (1 - y^-1) with y = w^r q^(d)
      for (std::int64_t i = 1; E(n) - i * d < order; ++i) {
        terms.emplace_back(E(n) - i * d, WLaurent::w_monomial(static_cast<int>(-r * i), -c));
      }
    }
  };
  // Terms with k n + j >= 0 start at E(n); the others at E(n) - D(n).
  const std::int64_t first_nonneg = floor_div(-j + k - 1, k);
  for_each_quadratic_below(a, b, 0, order, first_nonneg, kUnbounded, visit);
  for_each_quadratic_below(a, b - dd * k, -dd * j, order, -kUnbounded, first_nonneg - 1, visit);
  LocalizedSeries out(QSeries::from_terms(std::move(terms), order, denom));
  if (!pole.empty()) {
    out += LocalizedSeries(QSeries::from_terms(std::move(pole), order, denom)).over_one_minus(Cyclotomic(1L), r);
  }
  return out;
}

}  // namespace qmock::qlaurent
