#include "qmock/specfun/specfun.hpp"

#include <cmath>
#include <map>

#include "qmock/error.hpp"

namespace qmock::specfun {

using qlaurent::kDefaultDenom;
using qlaurent::kExactOrder;

namespace {

constexpr std::int64_t kQ = kDefaultDenom;  // lattice units per q

Monomial scalar(long c) { return {Cyclotomic(c), 0, 0}; }

Monomial neg(const Monomial& m) { return -m; }

long sign_power(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace

std::string to_string(EulerianKind kind) {
  switch (kind) {
    case EulerianKind::kG2: return "g2";
    case EulerianKind::kG3: return "g3";
    case EulerianKind::kRank: return "rank";
    case EulerianKind::kCrank: return "crank";
    case EulerianKind::kK1: return "K1";
    case EulerianKind::kK2: return "K2";
    case EulerianKind::kRho: return "rho";
  }
  return "?";
}

LocalizedSeries eulerian_sum(const std::function<ProductForm(long)>& term, long first, std::int64_t order) {
  if (order >= kExactOrder) throw PreconditionError("eulerian sums need a finite order");
  const long span = 2 * static_cast<long>(std::max<std::int64_t>(order / kQ, 0)) + 8;
  std::vector<std::pair<long, ProductForm>> live;
  long last_live = first - 1;
  std::vector<std::pair<long, std::int64_t>> vals;
  for (long n = first; n < first + span; ++n) {
    ProductForm t = term(n);
    if (t.is_zero()) continue;
    vals.emplace_back(n, t.valuation());
    if (t.valuation() < order) {
      last_live = n;
      live.emplace_back(n, std::move(t));
    }
  }
  // Valuations past the last contributing index must keep increasing.
  std::int64_t prev = std::numeric_limits<std::int64_t>::min();
  bool after = false;
  for (const auto& [n, v] : vals) {
    if (n <= last_live) continue;
    if (after && v <= prev) {
      throw PreconditionError("term valuations are not increasing past the order (index " + std::to_string(n) +
                              "); the sum is not formally convergent at this specialization");
    }
    prev = v;
    after = true;
  }
  if (last_live >= first + span - 1) {
    throw PreconditionError("term valuations stay below the order across the whole scan window");
  }
  LocalizedSeries sum(QSeries::zero(order));
  for (const auto& [n, t] : live) sum += t.expand(order);
  return sum;
}

LocalizedSeries bilateral_sum(const std::function<ProductForm(long)>& term, std::int64_t order) {
  return eulerian_sum(term, 0, order) + eulerian_sum([&](long n) { return term(-1 - n); }, 0, order);
}

ProductForm eulerian_term(EulerianKind kind, long n, const std::optional<RhoArgs>& rho) {
  ProductForm p;
  switch (kind) {
    case EulerianKind::kG2:
      p.times(Monomial::q(12 * n * (n + 1)));
      p.times_pochhammer({Cyclotomic(-1L), 0, kQ}, kQ, n);
      p.times_pochhammer(Monomial::w(1), kQ, n + 1, -1);
      p.times_pochhammer(Monomial::w(-1, kQ), kQ, n + 1, -1);
      return p;
    case EulerianKind::kG3:
      p.times(Monomial::q(24 * n * (n + 1)));
      p.times_pochhammer(Monomial::w(1), kQ, n + 1, -1);
      p.times_pochhammer(Monomial::w(-1, kQ), kQ, n + 1, -1);
      return p;
    case EulerianKind::kRank:
      p.times(Monomial::q(24 * n * n));
      p.times_pochhammer(Monomial::w(1, kQ), kQ, n, -1);
      p.times_pochhammer(Monomial::w(-1, kQ), kQ, n, -1);
      return p;
    case EulerianKind::kK1:
      p.times({Cyclotomic(sign_power(n)), 0, 24 * n * n});
      p.times_pochhammer(Monomial::q(kQ), 2 * kQ, n);
      p.times_pochhammer(Monomial::w(1, 2 * kQ), 2 * kQ, n, -1);
      p.times_pochhammer(Monomial::w(-1, 2 * kQ), 2 * kQ, n, -1);
      return p;
    case EulerianKind::kK2:
      if (n < 1) return ProductForm::zero();
      p.times({Cyclotomic(sign_power(n)), 0, 24 * n * n});
      p.times_pochhammer(Monomial::q(kQ), 2 * kQ, n - 1);
      p.times_pochhammer(Monomial::w(1, kQ), 2 * kQ, n, -1);
      p.times_pochhammer(Monomial::w(-1, kQ), 2 * kQ, n, -1);
      return p;
    case EulerianKind::kRho: {
      if (!rho) throw PreconditionError("rho needs its three specialization values");
      const RhoArgs& r = *rho;
      const std::int64_t step = kQ * r.base;
      const Monomial qb = Monomial::q(step);
      // (1 + 1/b) (c)_n (-1)^n q^(n(n+1)/2) (a/b)^n / ((-aq)_n (-c/b)_{n+1})
      p.times_one_minus(neg(r.b.inverse()));
      if (!r.c_is_zero) {
        p.times_pochhammer(r.c, step, n);
        p.times_pochhammer(neg(r.c * r.b.inverse()), step, n + 1, -1);
      }
      p.times({Cyclotomic(sign_power(n)), 0, 12 * r.base * n * (n + 1)});
      p.times((r.a * r.b.inverse()).pow(static_cast<int>(n)));
      p.times_pochhammer(neg(r.a * qb), step, n, -1);
      return p;
    }
    case EulerianKind::kCrank:
      break;
  }
  throw PreconditionError("no Eulerian term for " + to_string(kind));
}

LocalizedSeries build_eulerian(EulerianKind kind, std::int64_t order, const std::optional<RhoArgs>& rho) {
  if (kind == EulerianKind::kCrank) {
    ProductForm p;
    p.times_pochhammer_infinite(Monomial::q(kQ), kQ);
    p.times_pochhammer_infinite(Monomial::w(1, kQ), kQ, -1);
    p.times_pochhammer_infinite(Monomial::w(-1, kQ), kQ, -1);
    return p.expand(order);
  }
  const long first = kind == EulerianKind::kK2 ? 1 : 0;
  return eulerian_sum([&](long n) { return eulerian_term(kind, n, rho); }, first, order);
}

ProductForm reciprocity_rhs(const RhoArgs& r) {
  const std::int64_t step = kQ * r.base;
  const Monomial qb = Monomial::q(step);
  ProductForm p(r.b.inverse());
  p.times_one_minus(r.b * r.a.inverse());  // 1/b - 1/a = (1/b)(1 - b/a)
  if (!r.c_is_zero) {
    p.times_pochhammer_infinite(r.c, step);
    p.times_pochhammer_infinite(neg(r.c * r.a.inverse()), step, -1);
    p.times_pochhammer_infinite(neg(r.c * r.b.inverse()), step, -1);
  }
  p.times_pochhammer_infinite(r.a * qb * r.b.inverse(), step);
  p.times_pochhammer_infinite(r.b * qb * r.a.inverse(), step);
  p.times_pochhammer_infinite(qb, step);
  p.times_pochhammer_infinite(neg(r.a * qb), step, -1);
  p.times_pochhammer_infinite(neg(r.b * qb), step, -1);
  return p;
}

LocalizedSeries times_to_order(const ProductForm& f, const std::function<LocalizedSeries(std::int64_t)>& g,
                               std::int64_t order) {
  if (f.is_zero()) return LocalizedSeries(QSeries::zero(order));
  const LocalizedSeries gs = g(order - f.valuation());
  const LocalizedSeries fs = f.expand(order - gs.valuation());
  return fs * gs;
}

LocalizedSeries build_lambert(EulerianKind kind, std::int64_t order) {
  ProductForm f;
  std::function<LocalizedSeries(std::int64_t)> sum;
  switch (kind) {
    case EulerianKind::kG2:
      f.times_pochhammer_infinite({Cyclotomic(-1L), 0, kQ}, kQ);
      f.times_pochhammer_infinite(Monomial::q(kQ), kQ, -1);
      sum = [](std::int64_t o) { return qlaurent::lambert(-1, Rational(1), Rational(1), 1, 1, 0, o); };
      break;
    case EulerianKind::kG3:
      f.times_pochhammer_infinite(Monomial::q(kQ), kQ, -1);
      sum = [](std::int64_t o) { return qlaurent::lambert(-1, Rational(3, 2), Rational(3, 2), 1, 1, 0, o); };
      break;
    case EulerianKind::kRank:
      f.times_one_minus(Monomial::w(1));
      f.times_pochhammer_infinite(Monomial::q(kQ), kQ, -1);
      sum = [](std::int64_t o) { return qlaurent::lambert(-1, Rational(3, 2), Rational(1, 2), 1, 1, 0, o); };
      break;
    case EulerianKind::kK1:
      f.times_one_minus(Monomial::w(1));
      f.times_pochhammer_infinite(Monomial::q(kQ), 2 * kQ);
      f.times_pochhammer_infinite(Monomial::q(2 * kQ), 2 * kQ, -1);
      sum = [](std::int64_t o) { return qlaurent::lambert(1, Rational(2), Rational(1), 1, 2, 0, o); };
      break;
    case EulerianKind::kK2:
      f.times({Cyclotomic(-1L), 0, kQ});
      f.times_pochhammer_infinite(Monomial::q(kQ), 2 * kQ);
      f.times_pochhammer_infinite(Monomial::q(2 * kQ), 2 * kQ, -1);
      f.times_one_minus(Monomial::w(-1), -1);
      sum = [](std::int64_t o) { return qlaurent::lambert(1, Rational(2), Rational(3), 1, 2, 1, o); };
      break;
    default:
      throw PreconditionError("no Lambert form for " + to_string(kind));
  }
  return times_to_order(f, sum, order);
}

ProductForm theta_normalized(int l, int m, int k) {
  ProductForm p = qlaurent::theta_product(l, m, k);
  p.times(scalar(-1));
  return p;
}

LocalizedSeries build_mu(const MuArgs& a, std::int64_t order) {
  if (a.k <= 0) throw PreconditionError("mu: modulus k must be positive");
  if (a.r == 0) throw PreconditionError("mu: r must be nonzero");
  if (a.m % a.k == 0) {
    throw DomainError("mu: theta(" + std::to_string(a.m) + " tau; " + std::to_string(a.k) +
                      " tau) vanishes identically");
  }
  ProductForm f = theta_normalized(0, a.m, a.k).inverse();
  f.times(Monomial{Cyclotomic(1L), a.r, 0});
  return times_to_order(
      f,
      [&](std::int64_t o) {
        return qlaurent::lambert(-1, Rational(a.k, 2), Rational(a.k, 2) + a.m, a.r, a.k, 0, o);
      },
      order);
}

ThetaQuotient theta_quotient_from_string(const std::string& name) {
  static const std::map<std::string, ThetaQuotient> names{
      {"eq1.6-rhs", ThetaQuotient::kEq16}, {"eq1.3-rhs", ThetaQuotient::kEq13}, {"eq1.7-rhs", ThetaQuotient::kEq17},
      {"eq1.8-rhs", ThetaQuotient::kEq18}, {"eq1.9-rhs", ThetaQuotient::kEq19}, {"eq5.8-rhs", ThetaQuotient::kEq58}};
  auto it = names.find(name);
  if (it == names.end()) throw LookupError("unknown theta quotient '" + name + "'");
  return it->second;
}

ProductForm theta_quotient_form(ThetaQuotient kind) {
  using qlaurent::eta_product;
  ProductForm p;
  switch (kind) {
    case ThetaQuotient::kEq16:
    case ThetaQuotient::kEq17:
      p = eta_product(2, 4) * eta_product(1, -2) * theta_normalized(2, 0, 2).inverse();
      if (kind == ThetaQuotient::kEq17) p.times(scalar(2));
      return p;
    case ThetaQuotient::kEq13:
    case ThetaQuotient::kEq18:
      p = eta_product(3, 3) * eta_product(1, -1) * theta_normalized(3, 0, 3).inverse();
      if (kind == ThetaQuotient::kEq18) p.times(scalar(3));
      return p;
    case ThetaQuotient::kEq19:
      return eta_product(1, 4) * eta_product(2, -2) * theta_normalized(1, 0, 1).inverse();
    case ThetaQuotient::kEq58:
      p.times_pochhammer_infinite(Monomial::q(kQ), 2 * kQ, 3);
      p.times_pochhammer_infinite(Monomial::q(2 * kQ), 2 * kQ);
      p.times_pochhammer_infinite(Monomial::w(1), kQ, -1);
      p.times_pochhammer_infinite(Monomial::w(-1, kQ), kQ, -1);
      return p;
  }
  return p;
}

LocalizedSeries build_theta_quotient(ThetaQuotient kind, std::int64_t order) {
  return theta_quotient_form(kind).expand(order);
}

Cyclotomic exp_2pi_i(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  const mpz_class& d = c.get_den();
  if (!d.fits_sint_p() || d > qmock::exactring::conductor_cap()) {
    throw DomainError("e^(2 pi i " + c.get_str() + ") needs conductor " + d.get_str() + ", above the cap");
  }
  const long den = d.get_si();
  mpz_class num = c.get_num() % d;
  return Cyclotomic::zeta(static_cast<int>(den), num.get_si());
}

Cyclotomic sin_pi(const Rational& r) {
  const Cyclotomic z = exp_2pi_i(r / 2);
  const Cyclotomic two_i = Cyclotomic(2L) * Cyclotomic::zeta(4);
  return (z - z.inverse()) / two_i;
}

int kronecker12(long n) {
  long r = n % 12;
  if (r < 0) r += 12;
  if (r == 1 || r == 11) return 1;
  if (r == 5 || r == 7) return -1;
  return 0;
}

QSeries build_g_ab(const Rational& a, const Rational& b, int k, std::int64_t order) {
  if (k <= 0) throw PreconditionError("g_ab: scale must be positive");
  // nu^2 < order / (12 k) in lattice units
  const double bound = static_cast<double>(order) / (12.0 * k);
  std::vector<QSeries::Term> terms;
  if (bound > 0) {
    const double root = std::sqrt(bound);
    const double ad = a.get_d();
    const long lo = static_cast<long>(std::floor(-root - ad)) - 1;
    const long hi = static_cast<long>(std::ceil(root - ad)) + 1;
    for (long n = lo; n <= hi; ++n) {
      const Rational nu = a + n;
      const Rational e = nu * nu * (12 * k);
      if (e >= order) continue;
      if (!qmock::exactring::is_integer(e)) {
        throw PreconditionError("g_ab: exponent " + Rational(e / 24).get_str() + " is off the 1/24 lattice");
      }
      terms.emplace_back(qmock::exactring::to_int64(e), WLaurent(Cyclotomic(nu) * exp_2pi_i(nu * b)));
    }
  }
  return QSeries::from_terms(std::move(terms), order);
}

ShadowKind shadow_from_string(const std::string& name) {
  static const std::map<std::string, ShadowKind> names{{"g2-shadow", ShadowKind::kG2Shadow},
                                                       {"g3-shadow", ShadowKind::kG3Shadow},
                                                       {"eq3.7-lhs", ShadowKind::kEq37Lhs},
                                                       {"eq3.7-rhs", ShadowKind::kEq37Rhs},
                                                       {"zagier-rank-shadow", ShadowKind::kZagierRankShadow}};
  auto it = names.find(name);
  if (it == names.end()) throw LookupError("unknown shadow '" + name + "'");
  return it->second;
}

QSeries build_shadow(ShadowKind kind, const Rational& alpha, std::int64_t order) {
  std::vector<QSeries::Term> terms;
  switch (kind) {
    case ShadowKind::kG2Shadow: {
      const Cyclotomic zeta = exp_2pi_i(alpha);
      for (long n = 1; 24 * n * n < order; ++n) {
        for (long m : {n, -n}) {
          terms.emplace_back(24 * m * m, WLaurent(Cyclotomic(sign_power(m) * m) * zeta.pow(-2 * m)));
        }
      }
      return QSeries::from_terms(std::move(terms), order);
    }
    case ShadowKind::kG3Shadow:
    case ShadowKind::kZagierRankShadow: {
      for (long n = 1; n * n < order; ++n) {
        const int chi = kronecker12(n);
        if (chi == 0) continue;
        // the summand is even in n
        const Cyclotomic c = Cyclotomic(2L * chi * n) * sin_pi(alpha * n);
        terms.emplace_back(n * n, WLaurent(c));
      }
      QSeries s = QSeries::from_terms(std::move(terms), order);
      if (kind == ShadowKind::kZagierRankShadow) {
        const Cyclotomic half = exp_2pi_i(alpha / 2);
        s *= WLaurent(half.inverse() - half);
      }
      return s;
    }
    case ShadowKind::kEq37Lhs: {
      const Rational sixth(1, 6);
      QSeries first = build_g_ab(sixth, -3 * alpha + Rational(1, 2), 3, order);
      QSeries second = build_g_ab(sixth, 3 * alpha - Rational(1, 2), 3, order);
      first *= WLaurent(exp_2pi_i(sixth) / Cyclotomic(2L));
      second *= WLaurent(exp_2pi_i(Rational(1, 3)) / Cyclotomic(2L));
      return first - second;
    }
    case ShadowKind::kEq37Rhs: {
      const double root = std::sqrt(static_cast<double>(std::max<std::int64_t>(order, 0)));
      const long span = static_cast<long>(root / 6) + 2;
      for (long n = -span; n <= span; ++n) {
        const long t = 6 * n + 1;
        if (t * t >= order) continue;
        const Cyclotomic c = Cyclotomic(Rational(sign_power(n) * t, 6)) * sin_pi(alpha * t);
        terms.emplace_back(t * t, WLaurent(c));
      }
      return QSeries::from_terms(std::move(terms), order);
    }
  }
  throw PreconditionError("unknown shadow kind");
}

}  // namespace qmock::specfun
