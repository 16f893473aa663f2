#include "qmock/harness/harness.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <regex>

#include "qmock/error.hpp"
#include "qmock/numerics/numerics.hpp"
#include "qmock/partitions/partitions.hpp"

namespace qmock::harness {

namespace {

using qlaurent::QSeries;
using cd = std::complex<double>;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

MismatchReport to_report(const qlaurent::Mismatch& m, const std::string& check, const std::string& point) {
  return {qlaurent::from_lattice(m.exp), m.lhs.to_string(), m.rhs.to_string(), check, point};
}

Rational parse_value(const std::string& text) { return exactring::parse_rational(text); }

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::kGeneric ? "generic" : "specialize"; }

Mode mode_from_string(const std::string& name) {
  if (name == "generic" || name == "generic-w") return Mode::kGeneric;
  if (name == "specialize") return Mode::kSpecialize;
  throw PreconditionError("unknown mode '" + name + "'");
}

Point parse_point(const std::string& text) {
  static const std::regex zeta_re(R"(([ws])=zeta\((\d+),(-?\d+)\))");
  static const std::regex rat_re(R"(([ws])=(-?\d+(?:/\d+)?))");
  std::smatch m;
  if (std::regex_match(text, m, zeta_re)) {
    const int n = std::stoi(m[2]);
    const long long j = std::stoll(m[3]);
    if (n <= 0) throw PreconditionError("bad root of unity in point '" + text + "'");
    // w = zeta_n^j has the square root s = zeta_2n^j.
    return {text, m[1] == "w" ? Cyclotomic::zeta(2 * n, j) : Cyclotomic::zeta(n, j)};
  }
  if (std::regex_match(text, m, rat_re)) {
    const Rational v = parse_value(m[2]);
    if (v == 0) throw PreconditionError("point '" + text + "' is zero");
    if (m[1] == "s") return {text, Cyclotomic(v)};
    if (v < 0) throw PreconditionError("w point '" + text + "' needs a rational square root");
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn != num || rd * rd != den) {
      throw PreconditionError("w point '" + text + "' is not a rational square");
    }
    return {text, Cyclotomic(Rational(rn, rd))};
  }
  throw PreconditionError("cannot parse point '" + text + "'");
}

std::vector<Point> default_points() {
  std::vector<Point> pts;
  for (const char* s : {"s=2", "s=1/3", "s=3/2", "s=5", "s=2/7"}) pts.push_back(parse_point(s));
  return pts;
}

VerifyReport verify(const IdentitySpec& spec, const Rational& order, Mode mode, const std::vector<Point>& points) {
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t o = qlaurent::to_lattice(order);
  if (o < 0) throw PreconditionError("order must be non-negative");
  VerifyReport rep;
  rep.id = spec.id;
  rep.order = order;
  rep.mode = mode;
  rep.expect_mismatch = spec.expect_mismatch;
  rep.equal = true;
  const std::vector<Point> pts = mode == Mode::kSpecialize && points.empty() ? default_points() : points;

  for (const Check& check : spec.checks) {
    const LocalizedSeries lhs = check.lhs(o);
    const LocalizedSeries rhs = check.rhs(o);
    if (mode == Mode::kGeneric) {
      const auto v = qlaurent::eq_upto(lhs, rhs, o);
      if (!v.pass) {
        rep.equal = false;
        rep.first_mismatch = to_report(*v.first_mismatch, check.label, "");
        break;
      }
      continue;
    }
    for (const Point& p : pts) {
      const auto v = qlaurent::eq_upto(lhs.specialize(p.s), rhs.specialize(p.s), o);
      if (!v.pass) {
        rep.equal = false;
        rep.first_mismatch = to_report(*v.first_mismatch, check.label, p.label);
        break;
      }
    }
    if (!rep.equal) break;
  }
  if (mode == Mode::kSpecialize) rep.notes.push_back("sampled");
  if (spec.annotate) {
    for (auto& line : spec.annotate(o)) rep.notes.push_back(std::move(line));
  }
  rep.ms = elapsed_ms(start);
  return rep;
}

VerifyReport verify(const std::string& id, const Rational& order, Mode mode, const std::vector<Point>& points) {
  return verify(lookup(id), order, mode, points);
}

Rational default_order(const IdentitySpec& spec, Mode mode) {
  return mode == Mode::kGeneric ? spec.default_order : Rational(60);
}

std::vector<VerifyReport> verify_ids(const std::vector<std::string>& ids, const std::optional<Rational>& order,
                                     Mode mode, const std::vector<Point>& points) {
  std::vector<const IdentitySpec*> specs;
  for (const auto& id : ids) specs.push_back(&lookup(id));
  const long n = static_cast<long>(specs.size());
  std::vector<VerifyReport> out(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const IdentitySpec& spec = *specs[i];
    try {
      out[i] = verify(spec, order.value_or(default_order(spec, mode)), mode, points);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<VerifyReport> verify_all(const std::optional<Rational>& order, Mode mode,
                                     const std::vector<Point>& points) {
  std::vector<std::string> ids;
  for (const auto& spec : registry()) ids.push_back(spec.id);
  return verify_ids(ids, order, mode, points);
}

CombinatorialReport verify_combinatorial(int max_n) {
  using namespace partitions;
  const auto start = std::chrono::steady_clock::now();
  CombinatorialReport rep;
  rep.max_n = max_n;
  const StatTable rank = stat_table(StatKind::kRank, max_n);
  const StatTable crank = stat_table(StatKind::kCrankConvention, max_n);
  auto fail = [&](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  for (int n = 0; n <= max_n; ++n) {
    for (int m = -(n + 1); m <= n + 1; ++m) {
      const long long lhs = rank.count(3 * m - 1, n) + rank.count(3 * m, n) + rank.count(3 * m + 1, n);
      long long rhs = 0;
      for (int k = 0; 3 * k <= n; ++k) rhs += crank.count(m, k) * p3(n - 3 * k);
      ++rep.checked;
      if (lhs != rhs) {
        fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + std::to_string(lhs) +
             " != " + std::to_string(rhs));
      }
    }
    long long conv = 0;
    for (int k = 0; 3 * k <= n; ++k) conv += m2(crank, k) * p3(n - 3 * k);
    ++rep.checked;
    if (n6(rank, n) != conv) {
      fail("N6(" + std::to_string(n) + "): " + std::to_string(n6(rank, n)) + " != " + std::to_string(conv));
    }
  }
  rep.pass = rep.first_failure.empty();
  rep.ms = elapsed_ms(start);
  return rep;
}

std::string to_string(ScanKind kind) { return kind == ScanKind::kM2Congruence ? "m2-congruence" : "n6-sign"; }

ScanKind scan_kind_from_string(const std::string& name) {
  if (name == "m2-congruence") return ScanKind::kM2Congruence;
  if (name == "n6-sign") return ScanKind::kN6Sign;
  throw LookupError("unknown scan '" + name + "'");
}

ScanReport scan(ScanKind kind, int max_n) {
  using namespace partitions;
  if (max_n < 0) throw PreconditionError("scan range must be non-negative");
  auto sign_of = [](long long v) { return v > 0 ? "+" : v < 0 ? "-" : "0"; };
  ScanReport rep;
  rep.kind = kind;
  rep.max_n = max_n;
  if (kind == ScanKind::kM2Congruence) {
    rep.asserted = true;
    const StatTable t = stat_table_counted(StatKind::kCrankConvention, max_n);
    for (int n = 4; n <= max_n; n += 5) {
      const long long v = m2(t, n);
      ScanRow row{n, v, sign_of(v), ""};
      if (v % 5 != 0) {
        row.flag = "not divisible by 5";
        rep.pass = false;
      }
      rep.rows.push_back(row);
    }
    return rep;
  }
  const StatTable t = stat_table_counted(StatKind::kRank, max_n);
  for (int n = 0; n <= max_n; ++n) {
    const long long v = n6(t, n);
    ScanRow row{n, v, sign_of(v), ""};
    if (n == 1) {
      row.flag = "exception: N6(1) > 0";
    } else if (n % 2 == 0 ? v <= 0 : v >= 0) {
      row.flag = n % 2 == 0 ? "deviation: expected > 0" : "deviation: expected < 0";
    }
    rep.rows.push_back(row);
  }
  return rep;
}

std::complex<double> evaluate_numeric(const LocalizedSeries& f, std::complex<double> tau, std::complex<double> s) {
  const QSeries num = f.expanded_num();
  const cd step = 2.0 * std::numbers::pi * cd(0, 1) * tau / static_cast<double>(f.denom());
  cd acc = 0;
  for (const auto& [e, c] : num.terms()) acc += c.evaluate(s) * std::exp(step * static_cast<double>(e));
  return acc / f.den_poly().evaluate(s);
}

CrossValidation cross_validate(const std::string& id, std::complex<double> tau, const Rational& alpha, double tol,
                               const Rational& order) {
  using namespace numerics;
  const IdentitySpec& spec = lookup(id);
  if (spec.checks.empty()) throw PreconditionError("identity '" + id + "' has no checks");
  const std::int64_t o = qlaurent::to_lattice(order);
  const double a = alpha.get_d();
  const cd i(0, 1);
  const double pi = std::numbers::pi;
  const cd s = std::exp(pi * i * a);
  const cd w = s * s;
  const double abs_q = std::exp(-2 * pi * tau.imag());
  if (abs_q >= 1) throw PreconditionError("cross-validation needs Im(tau) > 0");

  const LocalizedSeries lhs = spec.checks.front().lhs(o);
  const LocalizedSeries rhs = spec.checks.front().rhs(o);

  // Tail estimate: ten times the largest evaluated coefficient magnitude,
  // summed geometrically from the first omitted exponent.
  double big = 0;
  for (const LocalizedSeries* f : {&lhs, &rhs}) {
    const double den = std::abs(f->den_poly().evaluate(s));
    const QSeries num = f->expanded_num();
    for (const auto& [e, c] : num.terms()) big = std::max(big, std::abs(c.evaluate(s)) / den);
  }
  CrossValidation cv;
  cv.tail_bound = 10 * big * std::pow(abs_q, static_cast<double>(o) / 24) / (1 - abs_q);
  if (cv.tail_bound > tol / 2) {
    throw TruncationError("tail bound " + std::to_string(cv.tail_bound) + " exceeds half the tolerance at order " +
                          order.get_str());
  }

  const cd l = evaluate_numeric(lhs, tau, s);
  const cd r = evaluate_numeric(rhs, tau, s);
  cv.exact_gap = std::abs(l - r);
  cv.residual = cv.exact_gap;

  std::optional<cd> direct_lhs, direct_rhs;
  if (id == "thm-1.1") {
    direct_lhs = w * eval_g2(w, tau);
    direct_rhs = std::pow(eval_eta(2.0 * tau), 4) /
                     (std::pow(eval_eta(tau), 2) * eval_theta_normalized(2.0 * a, 2.0 * tau)) +
                 w * std::exp(-pi * i * tau / 2.0) * eval_mu(2.0 * a, tau, 2.0 * tau);
  } else if (id == "thm-1.3") {
    cd sum = 0;
    for (int j = 0; j < 3; ++j) sum += eval_g3(w * std::exp(2 * pi * i * (j / 3.0)), tau);
    direct_lhs = s * s * s * std::exp(-2 * pi * i * tau / 24.0) * sum;
    direct_rhs = 3.0 * std::pow(eval_eta(3.0 * tau), 3) / (eval_eta(tau) * eval_theta_normalized(3.0 * a, 3.0 * tau));
  }
  if (direct_lhs) {
    cv.lhs_vs_direct = std::abs(l - *direct_lhs);
    cv.rhs_vs_direct = std::abs(r - *direct_rhs);
    cv.residual = std::max({cv.residual, cv.lhs_vs_direct, cv.rhs_vs_direct, std::abs(*direct_lhs - *direct_rhs)});
  }
  return cv;
}

}  // namespace qmock::harness
