#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qmock/error.hpp"
#include "qmock/kernels/convolution.hpp"
#include "qmock/qlaurent/constructors.hpp"
#include "qmock/qlaurent/json.hpp"

using namespace qmock;
using namespace qmock::qlaurent;

namespace {

constexpr std::int64_t Q(std::int64_t n) { return 24 * n; }

WLaurent w(int k) { return WLaurent::w_monomial(k); }

// 1 + q + q^2 + ... below order.
QSeries geometric_q(std::int64_t order) {
  std::vector<QSeries::Term> t;
  for (std::int64_t e = 0; e < order; e += Q(1)) t.emplace_back(e, WLaurent(1L));
  return QSeries::from_terms(t, order);
}

QSeries random_series(std::mt19937_64& rng, std::int64_t order) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<int> sexp(-3, 3);
  std::vector<QSeries::Term> t;
  for (std::int64_t e = -Q(1); e < order; e += 6) {
    if (c(rng) == 0) continue;
    t.emplace_back(e, WLaurent::s_monomial(sexp(rng), Cyclotomic(static_cast<long>(c(rng)))) + WLaurent(1L));
  }
  return QSeries::from_terms(t, order);
}

}  // namespace

TEST(QSeries, GeometricInverse) {
  const QSeries one_minus_q = QSeries::from_terms({{0, WLaurent(1L)}, {Q(1), WLaurent(-1L)}}, kExactOrder);
  const QSeries prod = one_minus_q * geometric_q(Q(20));
  EXPECT_TRUE(eq_upto(prod, QSeries(WLaurent(1L)).truncated(Q(20)), Q(20)).pass);
  EXPECT_EQ(prod.order(), Q(20));
  EXPECT_TRUE(eq_upto(one_minus_q.inverse(Q(20)), geometric_q(Q(20)), Q(20)).pass);
}

TEST(QSeries, AddNegationIsZero) {
  std::mt19937_64 rng(1);
  const QSeries x = random_series(rng, Q(10));
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_EQ((x + (-x)).order(), Q(10));
}

TEST(QSeries, FractionalExponentsAdd) {
  const QSeries a = QSeries::monomial(WLaurent(1L), to_lattice(Rational(1, 8)));
  const QSeries p = a * a;
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(from_lattice(p.terms()[0].first), Rational(1, 4));
}

TEST(QSeries, DenominatorMismatchThrows) {
  const QSeries a(WLaurent(1L), 24);
  const QSeries b(WLaurent(1L), 12);
  EXPECT_THROW(a + b, PreconditionError);
}

TEST(QSeries, InverseOfEtaProductIsTwoSided) {
  const QSeries e = pochhammer(Monomial::q(Q(1)), Q(1), std::nullopt, Q(20));
  const QSeries inv = e.inverse();
  EXPECT_TRUE(eq_upto(e * inv, QSeries(WLaurent(1L)).truncated(Q(20)), Q(20)).pass);
  EXPECT_TRUE(eq_upto(inv * e, QSeries(WLaurent(1L)).truncated(Q(20)), Q(20)).pass);
}

TEST(QSeries, InverseNeedsUnitLead) {
  const QSeries s = QSeries::from_terms({{0, WLaurent(1L) - w(1)}, {Q(1), WLaurent(1L)}}, Q(10));
  EXPECT_THROW(s.inverse(), DomainError);
  EXPECT_THROW(QSeries::zero(Q(3)).inverse(), DomainError);
}

TEST(QSeries, ShiftExamples) {
  const QSeries one(WLaurent(1L));
  const QSeries s = one.shifted(Rational(-1, 4));
  EXPECT_EQ(s.coeff(Rational(-1, 4)), WLaurent(1L));
  std::mt19937_64 rng(2);
  const QSeries x = random_series(rng, Q(8));
  EXPECT_TRUE(eq_upto(x.shifted(Rational(3, 8)).shifted(Rational(-3, 8)), x, Q(8)).pass);
  EXPECT_THROW(one.shifted(Rational(1, 7)), PreconditionError);
}

TEST(QSeries, EtaShiftGivesPentagonalSeries) {
  const QSeries e = eta(1, Q(16));
  const QSeries p = e.shifted(Rational(-1, 24));
  // 1 - q - q^2 + q^5 + q^7 - q^12 - q^15
  const std::map<int, long> expect{{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}, {15, -1}};
  for (int n = 0; n < 16; ++n) {
    const auto it = expect.find(n);
    EXPECT_EQ(p.coeff(Q(n)), WLaurent(it == expect.end() ? 0L : it->second)) << n;
  }
}

TEST(QSeries, RescaleExamples) {
  const QSeries a = QSeries::from_terms({{0, WLaurent(1L)}, {Q(1), WLaurent(-1L)}}, kExactOrder);
  const QSeries b = a.rescaled(2);
  EXPECT_EQ(b.coeff(Q(2)), WLaurent(-1L));
  EXPECT_EQ(b.coeff(Q(1)), WLaurent());
  EXPECT_TRUE(eq_upto(a.rescaled(1), a, Q(5)).pass);
  // eta(tau) rescaled by 3 is eta(3 tau), leading exponent 1/8
  const QSeries e3 = eta(1, Q(10)).rescaled(3);
  const QSeries direct = eta(3, Q(30));
  EXPECT_EQ(e3.valuation(), to_lattice(Rational(1, 8)));
  EXPECT_TRUE(eq_upto(e3, direct, Q(30)).pass);
}

TEST(QSeries, RescaleIsMultiplicative) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    const QSeries a = random_series(rng, Q(6));
    const QSeries b = random_series(rng, Q(6));
    const QSeries lhs = (a * b).rescaled(3);
    const QSeries rhs = a.rescaled(3) * b.rescaled(3);
    ASSERT_EQ(lhs.order(), rhs.order());
    EXPECT_TRUE(eq_upto(lhs, rhs, lhs.order()).pass);
  }
}

TEST(QSeries, MultiplicationCommutesAndAssociates) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const QSeries a = random_series(rng, Q(8));
    const QSeries b = random_series(rng, Q(7));
    const QSeries c = random_series(rng, Q(9));
    const QSeries ab = a * b;
    EXPECT_TRUE(eq_upto(ab, b * a, ab.order()).pass);
    const QSeries l = (a * b) * c;
    const QSeries r = a * (b * c);
    const std::int64_t o = std::min(l.order(), r.order());
    EXPECT_TRUE(eq_upto(l, r, o).pass);
  }
}

TEST(QSeries, ProductMatchesNaiveOracle) {
  std::mt19937_64 rng(5);
  const QSeries a = random_series(rng, Q(8));
  const QSeries b = random_series(rng, Q(8));
  const QSeries p = a * b;
  const oracle::Poly expect = oracle::mul(oracle::from_series(a), oracle::from_series(b), p.order());
  EXPECT_EQ(oracle::from_series(p), expect);
}

TEST(QSeries, TruncationErrors) {
  const QSeries e = eta(1, Q(8));
  EXPECT_THROW(e.coeff(e.order()), TruncationError);
  EXPECT_THROW(eq_upto(e, e, Q(9)), TruncationError);
}

TEST(QSeries, EqUptoReportsFirstMismatch) {
  std::mt19937_64 rng(6);
  const QSeries x = random_series(rng, Q(12));
  EXPECT_TRUE(eq_upto(x, x, Q(12)).pass);
  const QSeries y = x + QSeries::monomial(WLaurent(1L), Q(9));
  const Verdict v = eq_upto(x, y, Q(10));
  ASSERT_FALSE(v.pass);
  ASSERT_TRUE(v.first_mismatch.has_value());
  EXPECT_EQ(v.first_mismatch->exp, Q(9));
  EXPECT_TRUE(eq_upto(x, y, Q(9)).pass);
}

TEST(Kernels, OmpConvolutionMatchesSerial) {
  std::mt19937_64 rng(7);
  const QSeries a = random_series(rng, Q(30));
  const QSeries b = random_series(rng, Q(30));
  const auto s = kernels::convolve_serial(a.terms(), b.terms(), Q(30));
  const auto p = kernels::convolve_omp(a.terms(), b.terms(), Q(30));
  ASSERT_EQ(s.size(), p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].first, p[i].first);
    EXPECT_EQ(s[i].second, p[i].second);
  }
}

TEST(Pochhammer, EulerProductToOrderEight) {
  const QSeries e = pochhammer(Monomial::q(Q(1)), Q(1), std::nullopt, Q(8));
  oracle::Poly expect;
  for (auto [n, c] : std::vector<std::pair<int, int>>{{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}}) {
    oracle::add(expect, Q(n), 0, c);
  }
  EXPECT_EQ(oracle::from_series(e), expect);
  EXPECT_EQ(e.coeff(Q(5)), WLaurent(1L));
}

TEST(Pochhammer, FiniteProduct) {
  const QSeries p = pochhammer(Monomial::w(1), Q(1), 3, kExactOrder);
  oracle::Poly expect = oracle::one();
  for (int j = 0; j < 3; ++j) expect = oracle::mul(expect, oracle::binomial(1, 2, Q(j)), kExactOrder);
  EXPECT_EQ(oracle::from_series(p), expect);
}

TEST(Pochhammer, InfiniteNeedsPositiveValuation) {
  EXPECT_NO_THROW(pochhammer(Monomial::w(-1, Q(1)), Q(1), std::nullopt, Q(10)));
  EXPECT_THROW(pochhammer(Monomial::w(1), Q(1), std::nullopt, Q(10)), PreconditionError);
}

TEST(Pochhammer, InfiniteMatchesOracle) {
  // (q/w; q)_inf below q^12
  const std::int64_t order = Q(12);
  const QSeries p = pochhammer(Monomial::w(-1, Q(1)), Q(1), std::nullopt, order);
  oracle::Poly expect = oracle::one();
  for (int j = 1; j < 12; ++j) expect = oracle::mul(expect, oracle::binomial(1, -2, Q(j)), order);
  EXPECT_EQ(oracle::from_series(p), expect);
}

TEST(ProductForm, DivisionMatchesGeometricOracle) {
  // 1 / ((wq; q)_inf) below q^10
  ProductForm f;
  f.times_pochhammer_infinite(Monomial::w(1, Q(1)), Q(1), -1);
  const LocalizedSeries s = f.expand(Q(10));
  EXPECT_FALSE(s.has_denominator());
  oracle::Poly expect = oracle::one();
  for (int j = 1; j < 10; ++j) expect = oracle::mul(expect, oracle::geometric(1, 2, Q(j), Q(10)), Q(10));
  EXPECT_EQ(oracle::from_series(s.num()), expect);
}

TEST(ProductForm, ZeroQFactorsNormalize) {
  ProductForm f;
  f.times_one_minus(Monomial::w(-1), -1);  // 1 / (1 - 1/w) = -w / (1 - w)
  const LocalizedSeries s = f.expand(Q(3));
  ASSERT_EQ(s.den().size(), 1u);
  EXPECT_EQ(s.den()[0].first.w_exp, 1);
  EXPECT_EQ(s.den()[0].second, 1);
  EXPECT_EQ(s.num().coeff(0), -w(1));
  ProductForm z;
  z.times_one_minus(Monomial::q(0));
  EXPECT_TRUE(z.is_zero());
  ProductForm bad;
  EXPECT_THROW(bad.times_one_minus(Monomial::q(0), -1), DomainError);
  EXPECT_THROW(bad.times_one_minus(Monomial{Cyclotomic(1L), 1, 0}), PreconditionError);
}

TEST(Theta, SumModeLeadingTerms) {
  const QSeries t = theta_sum(1, 0, 1, Q(3));
  // q^(1/8)(s - 1/s) - q^(9/8)(s^3 - s^-3)
  EXPECT_EQ(t.coeff(Rational(1, 8)), WLaurent::s_monomial(1) - WLaurent::s_monomial(-1));
  EXPECT_EQ(t.coeff(Rational(9, 8)), WLaurent::s_monomial(-3) - WLaurent::s_monomial(3));
  EXPECT_EQ(t.terms().size(), 2u);
}

TEST(Theta, VanishesAtOrigin) {
  EXPECT_TRUE(theta_sum(0, 0, 1, Q(30)).is_zero());
  EXPECT_TRUE(theta_sum(0, 0, 3, Q(30)).is_zero());
  EXPECT_TRUE(theta_product(0, 0, 2).is_zero());
}

TEST(Theta, SumEqualsProductForPaperShapes) {
  const std::int64_t order = Q(25);
  for (auto [l, m, k] : std::vector<std::tuple<int, int, int>>{{1, 0, 1}, {2, 0, 2}, {3, 0, 3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 1, 2}, {-2, 1, 3}}) {
    const LocalizedSeries s = theta(l, m, k, ThetaMode::kSum, order);
    const LocalizedSeries p = theta(l, m, k, ThetaMode::kProduct, order);
    const Verdict v = eq_upto(s, p, order);
    EXPECT_TRUE(v.pass) << l << "," << m << "," << k;
  }
}

TEST(Theta, SumMatchesNaiveTripleProduct) {
  // Independent oracle: -q^(1/8) s^-1 prod (1-q^n)(1-w q^(n-1))(1-q^n/w)
  const std::int64_t order = Q(10);
  oracle::Poly prod = oracle::one();
  for (int n = 1; n <= 10; ++n) {
    prod = oracle::mul(prod, oracle::binomial(1, 0, Q(n)), order);
    prod = oracle::mul(prod, oracle::binomial(1, 2, Q(n - 1)), order);
    prod = oracle::mul(prod, oracle::binomial(1, -2, Q(n)), order);
  }
  oracle::Poly expect;
  for (const auto& [k, c] : prod) {
    if (k.first + 3 < order) oracle::add(expect, k.first + 3, k.second - 1, -c);
  }
  EXPECT_EQ(oracle::from_series(theta_sum(1, 0, 1, order)), expect);
}

TEST(Theta, ExposedFactorIsLocalized) {
  const LocalizedSeries p = theta(2, 0, 2, ThetaMode::kProduct, Q(5));
  ASSERT_EQ(p.den().size(), 1u);
  EXPECT_EQ(p.den()[0].first.w_exp, 2);
  EXPECT_EQ(p.den()[0].second, -1);  // numerator factor (1 - w^2)
}

TEST(Lambert, PoleTermLocalized) {
  const LocalizedSeries l = lambert(-1, Rational(1, 2), Rational(1, 2), 1, 1, 0, Q(1));
  ASSERT_EQ(l.den().size(), 1u);
  EXPECT_EQ(l.den()[0].first.w_exp, 1);
  EXPECT_EQ(l.den()[0].second, 1);
  EXPECT_EQ(l.num().coeff(0), WLaurent(1L));
}

TEST(Lambert, ThetaQuotientExpansion) {
  for (std::int64_t n : {25, 40}) {
    const std::int64_t order = Q(n);
    const LocalizedSeries lhs = lambert(-1, Rational(1, 2), Rational(1, 2), 1, 1, 0, order);
    ProductForm rhs;
    rhs.times_pochhammer_infinite(Monomial::q(Q(1)), Q(1), 2);
    rhs.times_pochhammer_infinite(Monomial::w(1), Q(1), -1);
    rhs.times_pochhammer_infinite(Monomial::w(-1, Q(1)), Q(1), -1);
    EXPECT_TRUE(eq_upto(lhs, rhs.expand(order), order).pass) << n;
  }
}

TEST(Lambert, RejectsDegenerateParameters) {
  EXPECT_THROW(lambert(-1, Rational(1, 2), Rational(1, 2), 0, 1, 0, Q(5)), PreconditionError);
  EXPECT_THROW(lambert(-1, Rational(0), Rational(1, 2), 1, 1, 0, Q(5)), PreconditionError);
  EXPECT_THROW(lambert(-1, Rational(-1), Rational(1, 2), 1, 1, 0, Q(5)), PreconditionError);
}

TEST(Lambert, PrefixStable) {
  const LocalizedSeries lo = lambert(1, Rational(2), Rational(3), 1, 2, 1, Q(12));
  const LocalizedSeries hi = lambert(1, Rational(2), Rational(3), 1, 2, 1, Q(20));
  EXPECT_TRUE(eq_upto(lo, hi, Q(12)).pass);
}

TEST(Localized, SpecializeAvoidsPoles) {
  const LocalizedSeries l = lambert(-1, Rational(1, 2), Rational(1, 2), 1, 1, 0, Q(5));
  EXPECT_THROW(l.specialize(Cyclotomic(1L)), DomainError);
  EXPECT_NO_THROW(l.specialize(Cyclotomic::zeta(8)));
}

TEST(Localized, CommonDenominatorAddition) {
  const QSeries one(WLaurent(1L));
  const LocalizedSeries a = LocalizedSeries(one.truncated(Q(3))).over_one_minus(Cyclotomic(1L), 1);
  const LocalizedSeries b = LocalizedSeries(one.truncated(Q(3))).over_one_minus(Cyclotomic(-1L), 1);
  // 1/(1-w) + 1/(1+w) = 2/(1-w^2)
  const LocalizedSeries sum = a + b;
  const LocalizedSeries expect = LocalizedSeries(QSeries(WLaurent(2L)).truncated(Q(3))).over_one_minus(Cyclotomic(1L), 2);
  EXPECT_TRUE(eq_upto(sum, expect, Q(3)).pass);
}

TEST(Json, RoundTrip) {
  const QSeries t = theta_sum(1, 0, 1, Q(6)) * QSeries(WLaurent(Cyclotomic::zeta(3)));
  const auto j = to_json(t);
  EXPECT_EQ(j.at("denom"), 24);
  EXPECT_EQ(j.at("order"), "6");
  const QSeries back = series_from_json(j);
  EXPECT_TRUE(eq_upto(back, t, Q(6)).pass);
  EXPECT_EQ(to_json(QSeries(WLaurent(1L))).at("order"), "inf");
}
