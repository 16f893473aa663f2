#include <map>

#include "qmock/error.hpp"
#include "qmock/harness/harness.hpp"
#include "qmock/partitions/partitions.hpp"

namespace qmock::harness {

namespace {

using qlaurent::Monomial;
using qlaurent::ProductForm;
using qlaurent::QSeries;
using qlaurent::WLaurent;
using specfun::EulerianKind;
using specfun::MuArgs;
using specfun::RhoArgs;
using specfun::ThetaQuotient;

constexpr std::int64_t kQ = 24;

WLaurent w(int k, const Cyclotomic& c = Cyclotomic(1L)) { return WLaurent::w_monomial(k, c); }
WLaurent s(int k) { return WLaurent::s_monomial(k); }
Cyclotomic zeta3(int j) { return Cyclotomic::zeta(3, j); }
LocalizedSeries one(std::int64_t o) { return LocalizedSeries(QSeries(WLaurent(1L)).truncated(o)); }
std::int64_t up(std::int64_t o, std::int64_t d) { return qlaurent::order_add(o, d); }
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return exactring::ceil_div(a, b); }

LocalizedSeries eul(EulerianKind k, std::int64_t o) { return specfun::build_eulerian(k, o); }
LocalizedSeries tq(ThetaQuotient k, std::int64_t o) { return specfun::build_theta_quotient(k, o); }

// q^(shift/24) mu(args), valid below o.
LocalizedSeries mu_at(MuArgs a, std::int64_t shift, std::int64_t o) {
  return specfun::build_mu(a, up(o, -shift)).shifted(shift);
}

LocalizedSeries over(const LocalizedSeries& f, const Cyclotomic& c, int k) { return f.over_one_minus(c, k); }

// (q^3;q^3)_inf / (q;q)_inf
ProductForm p3_product() {
  ProductForm p;
  p.times_pochhammer_infinite(Monomial::q(3 * kQ), 3 * kQ);
  p.times_pochhammer_infinite(Monomial::q(kQ), kQ, -1);
  return p;
}

// (q;q^2)_inf / (q^2;q^2)_inf
ProductForm odd_even_product() {
  ProductForm p;
  p.times_pochhammer_infinite(Monomial::q(kQ), 2 * kQ);
  p.times_pochhammer_infinite(Monomial::q(2 * kQ), 2 * kQ, -1);
  return p;
}

// C(w; q^3) to order o.
LocalizedSeries crank_cubed_q(std::int64_t o) { return eul(EulerianKind::kCrank, ceil_div(o, 3)).rescaled(3); }

// sum_j f(zeta^j w) for f integral in w.
LocalizedSeries zeta3_orbit(const LocalizedSeries& f) {
  return f + f.substitute_w(zeta3(1)) + f.substitute_w(zeta3(2));
}

// sum_j R(zeta^j w) / (zeta^j w (1 - zeta^j w))
LocalizedSeries rank_orbit(std::int64_t o) {
  const LocalizedSeries r = eul(EulerianKind::kRank, o);
  LocalizedSeries sum;
  for (int j = 0; j < 3; ++j) {
    LocalizedSeries t = over(r.substitute_w(zeta3(j)), zeta3(j), 1) * w(-1, zeta3(-j));
    sum = j == 0 ? t : sum + t;
  }
  return sum;
}

// sum over m, n of (N(3m-1,n) + N(3m,n) + N(3m+1,n)) w^m q^n
LocalizedSeries rank_triples(std::int64_t o) {
  const LocalizedSeries r = eul(EulerianKind::kRank, o) * (w(-1) + WLaurent(1L) + w(1));
  return zeta3_orbit(r).w_root(3) * WLaurent(Cyclotomic(exactring::Rational(1, 3)));
}

LocalizedSeries crank_side(std::int64_t o) { return p3_product().expand(o) * crank_cubed_q(o); }

// (q^3;q^3)^2 / ((q;q) (-q^3;q^3)^2)
LocalizedSeries n6_product(std::int64_t o) {
  ProductForm p;
  p.times_pochhammer_infinite(Monomial::q(3 * kQ), 3 * kQ, 2);
  p.times_pochhammer_infinite(Monomial::q(kQ), kQ, -1);
  p.times_pochhammer_infinite({Cyclotomic(-1L), 0, 3 * kQ}, 3 * kQ, -2);
  return p.expand(o);
}

LocalizedSeries at_minus_one(const LocalizedSeries& f) { return LocalizedSeries(f.specialize(Cyclotomic::zeta(4))); }

// K1 / (1 - w) + (1 - 1/w) K2
LocalizedSeries k_combination(std::int64_t o) {
  return over(eul(EulerianKind::kK1, o), Cyclotomic(1L), 1) + eul(EulerianKind::kK2, o) * (WLaurent(1L) - w(-1));
}

// K' through its expansion with (1 + q^2n) q^(2n^2+n) / ((1 - q^2n/w)(1 - w q^2n)).
LocalizedSeries k1_expanded(std::int64_t o) {
  auto inner = [](std::int64_t oo) {
    auto term = [](long n) {
      ProductForm p(Monomial::q(kQ * (2 * n * n + n)));
      p.times_one_minus({Cyclotomic(-1L), 0, 2 * kQ * n});
      p.times_one_minus(Monomial::w(-1, 2 * kQ * n), -1);
      p.times_one_minus(Monomial::w(1, 2 * kQ * n), -1);
      return p;
    };
    return one(oo) + specfun::eulerian_sum(term, 1, oo) * ((WLaurent(1L) - w(1)) * (WLaurent(1L) - w(-1)));
  };
  return specfun::times_to_order(odd_even_product(), inner, o);
}

// K'' = -(q;q^2)/(q^2;q^2) sum (1 + q^(2n+1)) q^(2n^2+3n+1) / ((1 - q^(2n+1)/w)(1 - w q^(2n+1)))
LocalizedSeries k2_expanded(std::int64_t o) {
  auto inner = [](std::int64_t oo) {
    auto term = [](long n) {
      ProductForm p({Cyclotomic(-1L), 0, kQ * (2 * n * n + 3 * n + 1)});
      p.times_one_minus({Cyclotomic(-1L), 0, kQ * (2 * n + 1)});
      p.times_one_minus(Monomial::w(-1, kQ * (2 * n + 1)), -1);
      p.times_one_minus(Monomial::w(1, kQ * (2 * n + 1)), -1);
      return p;
    };
    return specfun::eulerian_sum(term, 0, oo);
  };
  return specfun::times_to_order(odd_even_product(), inner, o);
}

LocalizedSeries rho_difference(const RhoArgs& ab, std::int64_t o) {
  RhoArgs ba = ab;
  std::swap(ba.a, ba.b);
  return specfun::build_eulerian(EulerianKind::kRho, o, ab) - specfun::build_eulerian(EulerianKind::kRho, o, ba);
}

Check reciprocity_check(const std::string& label, const RhoArgs& args) {
  return {label, [args](std::int64_t o) { return rho_difference(args, o); },
          [args](std::int64_t o) { return specfun::reciprocity_rhs(args).expand(o); }};
}

// Bilateral sum of (alpha)_n / (beta)_n z^n and its product evaluation.
Check psi_check(const std::string& label, Monomial alpha, Monomial beta, Monomial z) {
  auto lhs = [=](std::int64_t o) {
    auto term = [&](long n) {
      ProductForm p;
      p.times_pochhammer(alpha, kQ, n);
      p.times_pochhammer(beta, kQ, n, -1);
      p.times(z.pow(static_cast<int>(n)));
      return p;
    };
    return specfun::bilateral_sum(term, o);
  };
  auto rhs = [=](std::int64_t o) {
    const Monomial q = Monomial::q(kQ);
    ProductForm p;
    p.times_pochhammer_infinite(beta * alpha.inverse(), kQ);
    p.times_pochhammer_infinite(alpha * z, kQ);
    p.times_pochhammer_infinite(q * (alpha * z).inverse(), kQ);
    p.times_pochhammer_infinite(q, kQ);
    p.times_pochhammer_infinite(q * alpha.inverse(), kQ, -1);
    p.times_pochhammer_infinite(beta * (alpha * z).inverse(), kQ, -1);
    p.times_pochhammer_infinite(beta, kQ, -1);
    p.times_pochhammer_infinite(z, kQ, -1);
    return p.expand(o);
  };
  return {label, lhs, rhs};
}

// The N -> infinity limit of the Watson-Whipple transformation.
Check watson_check(const std::string& label, Monomial al, Monomial be, Monomial ga, Monomial de, Monomial ep) {
  const Monomial q = Monomial::q(kQ);
  auto lhs = [=](std::int64_t o) {
    auto term = [&](long n) {
      ProductForm p;
      for (const Monomial& x : {al, be, ga, de, ep}) p.times_pochhammer(x, kQ, n);
      for (const Monomial& x : {al * q * be.inverse(), al * q * ga.inverse(), al * q * de.inverse(),
                                al * q * ep.inverse(), q}) {
        p.times_pochhammer(x, kQ, n, -1);
      }
      p.times_one_minus(al * Monomial::q(2 * kQ * n));
      p.times_one_minus(al, -1);
      p.times(Monomial::q(12 * n * (n + 3)));
      p.times((-(al * al * (be * ga * de * ep).inverse())).pow(static_cast<int>(n)));
      return p;
    };
    return specfun::eulerian_sum(term, 0, o);
  };
  auto rhs = [=](std::int64_t o) {
    ProductForm f;
    f.times_pochhammer_infinite(al * q, kQ);
    f.times_pochhammer_infinite(al * q * (de * ep).inverse(), kQ);
    f.times_pochhammer_infinite(al * q * de.inverse(), kQ, -1);
    f.times_pochhammer_infinite(al * q * ep.inverse(), kQ, -1);
    auto sum = [=](std::int64_t oo) {
      auto term = [&](long n) {
        ProductForm p;
        for (const Monomial& x : {de, ep, al * q * (be * ga).inverse()}) p.times_pochhammer(x, kQ, n);
        for (const Monomial& x : {al * q * be.inverse(), al * q * ga.inverse(), q}) p.times_pochhammer(x, kQ, n, -1);
        p.times((al * q * (de * ep).inverse()).pow(static_cast<int>(n)));
        return p;
      };
      return specfun::eulerian_sum(term, 0, oo);
    };
    return specfun::times_to_order(f, sum, o);
  };
  return {label, lhs, rhs};
}

// Watson-Whipple with epsilon -> infinity and q -> q^2.
Check einfty_check(const std::string& label, Monomial al, Monomial be, Monomial ga, Monomial de) {
  const std::int64_t step = 2 * kQ;
  const Monomial q2 = Monomial::q(step);
  auto lhs = [=](std::int64_t o) {
    auto term = [&](long n) {
      ProductForm p;
      p.times_pochhammer(al * q2, step, n - 1);
      for (const Monomial& x : {be, ga, de}) p.times_pochhammer(x, step, n);
      for (const Monomial& x : {al * q2 * be.inverse(), al * q2 * ga.inverse(), al * q2 * de.inverse(), q2}) {
        p.times_pochhammer(x, step, n, -1);
      }
      p.times_one_minus(al * Monomial::q(4 * kQ * n));
      p.times(Monomial::q(step * n * (n + 1)));
      p.times((al * al * (be * ga * de).inverse()).pow(static_cast<int>(n)));
      return p;
    };
    return one(o) + specfun::eulerian_sum(term, 1, o);
  };
  auto rhs = [=](std::int64_t o) {
    ProductForm f;
    f.times_pochhammer_infinite(al * q2, step);
    f.times_pochhammer_infinite(al * q2 * de.inverse(), step, -1);
    auto sum = [=](std::int64_t oo) {
      auto term = [&](long n) {
        ProductForm p;
        for (const Monomial& x : {de, al * q2 * (be * ga).inverse()}) p.times_pochhammer(x, step, n);
        for (const Monomial& x : {al * q2 * be.inverse(), al * q2 * ga.inverse(), q2}) p.times_pochhammer(x, step, n, -1);
        p.times(Monomial::q(kQ * n * (n + 1)));
        p.times((-(al * de.inverse())).pow(static_cast<int>(n)));
        return p;
      };
      return specfun::eulerian_sum(term, 0, oo);
    };
    return specfun::times_to_order(f, sum, o);
  };
  return {label, lhs, rhs};
}

LocalizedSeries lifted(const QSeries& f) { return LocalizedSeries(f); }

Check shadow_check(const Rational& alpha) {
  return {"alpha=" + alpha.get_str(),
          [alpha](std::int64_t o) { return lifted(specfun::build_shadow(specfun::ShadowKind::kEq37Lhs, alpha, o)); },
          [alpha](std::int64_t o) { return lifted(specfun::build_shadow(specfun::ShadowKind::kEq37Rhs, alpha, o)); }};
}

Check proportionality_check(const Rational& alpha) {
  return {"alpha=" + alpha.get_str(),
          [alpha](std::int64_t o) { return lifted(specfun::build_shadow(specfun::ShadowKind::kG3Shadow, alpha, o)); },
          [alpha](std::int64_t o) {
            return lifted(specfun::build_shadow(specfun::ShadowKind::kEq37Rhs, alpha, o)) * WLaurent(12L);
          }};
}

std::vector<IdentitySpec> build_registry() {
  const Monomial q = Monomial::q(kQ);
  const Monomial W = Monomial::w(1);
  std::vector<IdentitySpec> r;

  r.push_back({"lemma-3.1", "bilateral Lambert series equals (q)^2 / ((w)(q/w))", "Q", Rational(25), {},
               {{"", [](std::int64_t o) { return qlaurent::lambert(-1, Rational(1, 2), Rational(1, 2), 1, 1, 0, o); },
                 [](std::int64_t o) {
                   ProductForm p;
                   p.times_pochhammer_infinite(Monomial::q(kQ), kQ, 2);
                   p.times_pochhammer_infinite(Monomial::w(1), kQ, -1);
                   p.times_pochhammer_infinite(Monomial::w(-1, kQ), kQ, -1);
                   return p.expand(o);
                 }}}});

  for (auto [id, kind] : {std::pair{"g2-lambert", EulerianKind::kG2}, std::pair{"g3-lambert", EulerianKind::kG3},
                          std::pair{"rank-lambert", EulerianKind::kRank}}) {
    r.push_back({id, "Eulerian series equals its generalized Lambert form", "Q", Rational(25), {},
                 {{"", [kind](std::int64_t o) { return eul(kind, o); },
                   [kind](std::int64_t o) { return specfun::build_lambert(kind, o); }}}});
  }

  r.push_back({"g3-rank", "g3 = -1/w + R / (w (1 - w))", "Q", Rational(25), {},
               {{"", [](std::int64_t o) { return eul(EulerianKind::kG3, o); },
                 [](std::int64_t o) {
                   return LocalizedSeries(QSeries(-w(-1)).truncated(o)) +
                          over(eul(EulerianKind::kRank, o), Cyclotomic(1L), 1) * w(-1);
                 }}}});

  r.push_back({"thm-1.1", "w g2(w) = eta quotient over theta + w q^(-1/4) mu(2a, tau; 2tau)", "Q", Rational(25), {},
               {{"", [](std::int64_t o) { return eul(EulerianKind::kG2, o) * w(1); },
                 [](std::int64_t o) { return tq(ThetaQuotient::kEq16, o) + mu_at({2, 1, 2}, -6, o) * w(1); }}}});

  r.push_back({"thm-1.2", "w (g2(w) + g2(-w)) = 2 eta^4(2tau) / (eta^2(tau) theta(2a; 2tau))", "Q", Rational(25),
               {"w -> -w on g2"},
               {{"", [](std::int64_t o) {
                   const LocalizedSeries g2 = eul(EulerianKind::kG2, o);
                   return (g2 + g2.substitute_w(Cyclotomic(-1L))) * w(1);
                 },
                 [](std::int64_t o) { return tq(ThetaQuotient::kEq17, o); }}}});

  r.push_back({"thm-1.3", "w^(3/2) q^(-1/24) sum_j g3(zeta3^j w) = 3 eta^3(3tau) / (eta(tau) theta(3a; 3tau))",
               "Q(zeta_3)", Rational(25), {"w -> zeta3 w on g3", "w -> zeta3^2 w on g3"},
               {{"", [](std::int64_t o) { return zeta3_orbit(eul(EulerianKind::kG3, up(o, 1))).shifted(-1) * s(3); },
                 [](std::int64_t o) { return tq(ThetaQuotient::kEq18, o); }}}});

  auto rank_lhs = [](std::int64_t o) {
    return over(eul(EulerianKind::kRank, up(o, 1)), Cyclotomic(1L), 1).shifted(-1) * s(1);
  };
  r.push_back({"rank-decomp", "q^(-1/24) R(w) / (w^(-1/2) - w^(1/2)) as theta quotient plus two mu terms", "Q",
               Rational(25), {},
               {{"", rank_lhs, [](std::int64_t o) {
                   return tq(ThetaQuotient::kEq13, o) - mu_at({3, -1, 3}, -4, o) * w(-1) + mu_at({3, 1, 3}, -4, o) * w(1);
                 }}}});
  r.push_back({"rank-decomp-zagier", "the same decomposition without q^(-1/6) on the mu terms (asserted to differ)",
               "Q", Rational(25), {},
               {{"", rank_lhs, [](std::int64_t o) {
                   return tq(ThetaQuotient::kEq13, o) - mu_at({3, -1, 3}, 0, o) * w(-1) + mu_at({3, 1, 3}, 0, o) * w(1);
                 }}},
               true});

  r.push_back({"thm-3.3", "q^(-1/24) w^(3/2) g3(w) = theta quotient + q^(-1/6) w mu(3a, tau) + q^(-2/3) w^2 mu(3a, 2tau)",
               "Q", Rational(25), {},
               {{"", [](std::int64_t o) { return eul(EulerianKind::kG3, up(o, 1)).shifted(-1) * s(3); },
                 [](std::int64_t o) {
                   return tq(ThetaQuotient::kEq13, o) + mu_at({3, 1, 3}, -4, o) * w(1) + mu_at({3, 2, 3}, -16, o) * w(2);
                 }}}});

  r.push_back({"ann-rank", "w^(3/2) q^(-1/24) sum_j R(zeta^j w) / (zeta^j w (1 - zeta^j w)) = 3 eta quotient",
               "Q(zeta_3)", Rational(25), {"w -> zeta3 w on R", "w -> zeta3^2 w on R"},
               {{"", [](std::int64_t o) { return rank_orbit(up(o, 1)).shifted(-1) * s(3); },
                 [](std::int64_t o) { return tq(ThetaQuotient::kEq18, o); }}}});

  r.push_back({"rank-crank", "sum_j R(zeta^j w) / (zeta^j w (1 - zeta^j w)) = 3 (q^3;q^3) C(w^3; q^3) / ((q;q)(1 - w^3))",
               "Q(zeta_3)", Rational(25), {"w -> zeta3 w on R", "w -> zeta3^2 w on R", "w -> w^3, q -> q^3 on C"},
               {{"", rank_orbit, [](std::int64_t o) {
                   const LocalizedSeries c = eul(EulerianKind::kCrank, ceil_div(o, 3)).w_power(3).rescaled(3);
                   return over(p3_product().expand(o) * c * WLaurent(3L), Cyclotomic(1L), 3);
                 }}}});

  IdentitySpec thm41{"thm-4.1", "sum (N(3m-1,n) + N(3m,n) + N(3m+1,n)) w^m q^n = (q^3;q^3)/(q;q) C(w; q^3)",
                     "Q(zeta_3)", Rational(25), {"w -> zeta3^j w on R", "w^3 -> w", "q -> q^3 on C"},
                     {{"", rank_triples, crank_side}}};
  thm41.annotate = [](std::int64_t o) -> std::vector<std::string> {
    if (o <= 4 * kQ) return {};
    const WorkedExample ex = rank_crank_worked_example();
    return {"w^0 q^4: " + ex.series_coeff.get_str() + " = M(0,0) p3(4) + M(0,1) p3(1) = " + std::to_string(ex.m00) +
            "*" + std::to_string(ex.p3_4) + " + (" + std::to_string(ex.m01) + ")*" + std::to_string(ex.p3_1)};
  };
  r.push_back(thm41);

  r.push_back({"cor-n6", "sum N6(n) q^n = (q^3;q^3)/(q;q) sum M2(n) q^3n = (q^3;q^3)^2 / ((q;q)(-q^3;q^3)^2)", "Q",
               Rational(25), {"w -> -1"},
               {{"rank side", [](std::int64_t o) { return at_minus_one(rank_triples(o)); }, n6_product},
                {"crank side", [](std::int64_t o) { return at_minus_one(crank_side(o)); }, n6_product}}});

  r.push_back({"thm-1.5", "q^(-1/8) [K'/(w^(-1/2) - w^(1/2)) + (w^(1/2) - w^(-1/2)) K''] = eta^4(tau)/(eta^2(2tau) theta(a))",
               "Q", Rational(25), {},
               {{"theta quotient",
                 [](std::int64_t o) {
                   const std::int64_t oo = up(o, 3);
                   return (over(eul(EulerianKind::kK1, oo), Cyclotomic(1L), 1) * s(1) +
                           eul(EulerianKind::kK2, oo) * (s(1) - s(-1)))
                       .shifted(-3);
                 },
                 [](std::int64_t o) { return tq(ThetaQuotient::kEq19, o); }},
                {"product", k_combination, [](std::int64_t o) { return tq(ThetaQuotient::kEq58, o); }}}});

  r.push_back({"k1-lambert", "K' / (1 - w) as a level 2 Lambert series, and the intermediate expansion of K'", "Q",
               Rational(25), {},
               {{"lambert", [](std::int64_t o) { return eul(EulerianKind::kK1, o); },
                 [](std::int64_t o) { return specfun::build_lambert(EulerianKind::kK1, o); }},
                {"expansion", [](std::int64_t o) { return eul(EulerianKind::kK1, o); }, k1_expanded}}});

  r.push_back({"k2-lambert", "(1 - 1/w) K'' as a level 2 Lambert series, and the intermediate expansion of K''", "Q",
               Rational(25), {},
               {{"lambert", [](std::int64_t o) { return eul(EulerianKind::kK2, o); },
                 [](std::int64_t o) { return specfun::build_lambert(EulerianKind::kK2, o); }},
                {"expansion", [](std::int64_t o) { return eul(EulerianKind::kK2, o); }, k2_expanded}}});

  r.push_back({"k-sum-lambert", "K'/(1 - w) + (1 - 1/w) K'' = (q;q^2)/(q^2;q^2) sum (-1)^n q^(n(n+1)/2) / (1 - w q^n)",
               "Q", Rational(25), {},
               {{"", k_combination, [](std::int64_t o) {
                   return specfun::times_to_order(
                       odd_even_product(),
                       [](std::int64_t oo) { return qlaurent::lambert(-1, Rational(1, 2), Rational(1, 2), 1, 1, 0, oo); },
                       o);
                 }}}});

  r.push_back({"reciprocity-5.1", "rho(a,b,c) - rho(b,a,c) at formally convergent specializations", "Q", Rational(25),
               {},
               {reciprocity_check("a=w b=q c=q^2", {W, q, Monomial::q(2 * kQ)}),
                reciprocity_check("a=w b=-w c=-q", {W, -W, -q}),
                reciprocity_check("a=w b=q c=0", {W, q, q, 1, true}),
                reciprocity_check("q->q^2 a=-w b=-wq c=q", {-W, -(W * q), q, 2})}});

  r.push_back({"1psi1", "bilateral 1psi1 sum equals its product", "Q", Rational(25), {},
               {psi_check("alpha=w beta=wq^3 z=q", W, W * Monomial::q(3 * kQ), q),
                psi_check("alpha=-w beta=q^2 z=q/w", -W, Monomial::q(2 * kQ), q * W.inverse())}});

  r.push_back({"watson-3.1", "Watson-Whipple limit at two specializations", "Q", Rational(25), {},
               {watson_check("alpha=q beta=gamma=q delta=w epsilon=q/w", q, q, q, W, q * W.inverse()),
                watson_check("alpha=q beta=gamma=-q delta=w epsilon=q/w", q, -q, -q, W, q * W.inverse())}});

  r.push_back({"einfty-5.3", "Watson-Whipple with epsilon -> infinity in base q^2", "Q", Rational(25), {},
               {einfty_check("alpha=1 delta=q beta=w gamma=1/w", Monomial{}, W, W.inverse(), q),
                einfty_check("alpha=q^2 delta=q beta=wq gamma=q/w", Monomial::q(2 * kQ), W * q, q * W.inverse(), q)}});

  r.push_back({"shadow-3.7", "two forms of the g3 shadow agree", "Q(zeta_n)", Rational(10), {},
               {shadow_check(Rational(1, 2)), shadow_check(Rational(1, 3)), shadow_check(Rational(1, 5))}});

  r.push_back({"shadow-proportionality", "Kronecker-symbol shadow is 12 times the reindexed form", "Q(zeta_n)",
               Rational(25), {},
               {proportionality_check(Rational(1, 2)), proportionality_check(Rational(1, 3)),
                proportionality_check(Rational(1, 5))}});

  {
    const Rational a(1, 6), b(1, 5);
    auto g = [](Rational aa, Rational bb) {
      return [aa, bb](std::int64_t o) { return lifted(specfun::build_g_ab(aa, bb, 3, o)); };
    };
    r.push_back({"g-periodicity", "g_(a+1,b) = g_(a,b) = e(-a) g_(a,b+1) = -g_(-a,-b) at a = 1/6, b = 1/5, tau -> 3tau",
                 "Q(zeta_n)", Rational(25), {},
                 {{"a+1", g(a + 1, b), g(a, b)},
                  {"b+1", [=](std::int64_t o) { return g(a, b + 1)(o) * WLaurent(specfun::exp_2pi_i(-a)); }, g(a, b)},
                  {"-a,-b", [=](std::int64_t o) { return -g(-a, -b)(o); }, g(a, b)}}});
  }
  return r;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> reg = build_registry();
  return reg;
}

const IdentitySpec& lookup(const std::string& id) {
  for (const auto& spec : registry()) {
    if (spec.id == id) return spec;
  }
  throw LookupError("unknown identity id '" + id + "'");
}

WorkedExample rank_crank_worked_example() {
  const LocalizedSeries f = rank_triples(5 * kQ);
  const auto [num, den] = f.coeff(4 * kQ);
  if (!den.is_constant()) throw DomainError("worked example: unexpected denominator");
  const Cyclotomic c = num.coeff(0) / den.coeff(0);
  const auto table = partitions::stat_table(partitions::StatKind::kCrankConvention, 1);
  return {c.rational_value(), table.count(0, 0), partitions::p3(4), table.count(0, 1), partitions::p3(1)};
}

}  // namespace qmock::harness
