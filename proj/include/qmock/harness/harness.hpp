#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmock/specfun/specfun.hpp"

namespace qmock::harness {

using qlaurent::Cyclotomic;
using qlaurent::LocalizedSeries;
using qlaurent::Rational;

/// Builds one side of an identity, valid below the given lattice order.
using SideBuilder = std::function<LocalizedSeries(std::int64_t order)>;

struct Check {
  std::string label;
  SideBuilder lhs;
  SideBuilder rhs;
};

struct IdentitySpec {
  std::string id;
  std::string summary;
  /// Coefficient domain the sides live in: "Q", "Q(zeta_3)", "Q(zeta_n)".
  std::string domain = "Q";
  Rational default_order = Rational(25);
  /// Human-readable w-substitutions applied to sub-expressions.
  std::vector<std::string> substitutions;
  /// Every check must hold (or, for an erratum entry, at least one must fail).
  std::vector<Check> checks;
  /// Documents a misprinted variant: the asserted outcome is a mismatch.
  bool expect_mismatch = false;
  /// Extra report lines for a given lattice order (may be empty).
  std::function<std::vector<std::string>(std::int64_t order)> annotate;
};

const std::vector<IdentitySpec>& registry();
/// Throws LookupError for an unknown id.
const IdentitySpec& lookup(const std::string& id);

enum class Mode { kGeneric, kSpecialize };
std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);

/// An exact specialization point. The sides carry half-integral powers of
/// w, so a point fixes s = w^(1/2).
struct Point {
  std::string label;
  Cyclotomic s;
};

/// "w=p/q" (a rational square), "w=zeta(n,j)" (s = zeta_2n^j) or "s=p/q".
Point parse_point(const std::string& text);
/// Five fixed rational points used when specialize mode gets none.
std::vector<Point> default_points();

struct MismatchReport {
  Rational q_exp;
  std::string lhs;
  std::string rhs;
  std::string check;
  std::string point;  // empty in generic mode
};

struct VerifyReport {
  std::string id;
  Rational order;
  Mode mode = Mode::kGeneric;
  /// Whether both sides agreed on every check below the order.
  bool equal = false;
  bool expect_mismatch = false;
  std::optional<MismatchReport> first_mismatch;
  double ms = 0;
  std::vector<std::string> notes;

  /// The asserted outcome held (agreement, or mismatch for an erratum entry).
  bool ok() const { return equal != expect_mismatch; }
};

/// Exact verification below q^order. Generic mode compares Laurent
/// coefficients in w after cross-multiplying the localization
/// denominators; specialize mode substitutes each point first.
VerifyReport verify(const IdentitySpec& spec, const Rational& order, Mode mode = Mode::kGeneric,
                    const std::vector<Point>& points = {});
VerifyReport verify(const std::string& id, const Rational& order, Mode mode = Mode::kGeneric,
                    const std::vector<Point>& points = {});
/// Order used when none is given: the entry's default in generic mode, 60
/// in specialize mode.
Rational default_order(const IdentitySpec& spec, Mode mode);

/// Runs the given ids concurrently; the result keeps their order. A missing
/// order means default_order() per id.
std::vector<VerifyReport> verify_ids(const std::vector<std::string>& ids, const std::optional<Rational>& order,
                                     Mode mode, const std::vector<Point>& points = {});
/// verify_ids over the whole registry, in registry order.
std::vector<VerifyReport> verify_all(const std::optional<Rational>& order, Mode mode,
                                     const std::vector<Point>& points = {});

/// The w^0 q^4 coefficient of the rank side of the rank-crank theorem and
/// its combinatorial reading M(0,0) p3(4) + M(0,1) p3(1).
struct WorkedExample {
  Rational series_coeff;
  long long m00, p3_4, m01, p3_1;
};
WorkedExample rank_crank_worked_example();

/// Checks N(3m-1,n) + N(3m,n) + N(3m+1,n) = sum_k M(m,k) p3(n-3k) for all m
/// and n <= max_n, and the residue-class version N6(n) = sum_k M2(k) p3(n-3k),
/// on enumerated oracle tables.
struct CombinatorialReport {
  int max_n = 0;
  bool pass = false;
  long long checked = 0;
  std::string first_failure;
  double ms = 0;
};
CombinatorialReport verify_combinatorial(int max_n);

enum class ScanKind { kM2Congruence, kN6Sign };
std::string to_string(ScanKind kind);
ScanKind scan_kind_from_string(const std::string& name);

struct ScanRow {
  int n = 0;
  long long value = 0;
  /// "+", "-" or "0".
  std::string sign;
  /// Empty when the row is as expected.
  std::string flag;
};

struct ScanReport {
  ScanKind kind = ScanKind::kM2Congruence;
  int max_n = 0;
  /// Only the congruence scan asserts.
  bool asserted = false;
  bool pass = true;
  std::vector<ScanRow> rows;
};

/// Rows cover every n <= max_n (n = 5k + 4 only for the congruence scan).
/// Values come from counting tables, so max_n may exceed the enumeration cap.
ScanReport scan(ScanKind kind, int max_n);

/// Numeric cross-check of an exact identity at q = e^(2 pi i tau),
/// w = e^(2 pi i alpha).
struct CrossValidation {
  double residual = 0;       // max over all pairings below
  double exact_gap = 0;      // |exact lhs - exact rhs|
  double lhs_vs_direct = 0;  // exact lhs against the direct evaluator
  double rhs_vs_direct = 0;
  double tail_bound = 0;
};
/// Supported ids: thm-1.1, thm-1.3 and any id compared only against its own
/// truncation. Throws TruncationError when the tail bound at the exact order
/// exceeds tol / 2.
CrossValidation cross_validate(const std::string& id, std::complex<double> tau, const Rational& alpha, double tol,
                               const Rational& order = Rational(25));

/// Numeric value of an exact truncation at (tau, s).
std::complex<double> evaluate_numeric(const LocalizedSeries& f, std::complex<double> tau, std::complex<double> s);

}  // namespace qmock::harness
