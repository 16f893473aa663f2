#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmock/exactring/wlaurent.hpp"

namespace qmock::qlaurent {

using exactring::Cyclotomic;
using exactring::Rational;
using exactring::WLaurent;

/// Exponent lattice denominator: q^(e/24) is stored as the integer e.
inline constexpr int kDefaultDenom = 24;

/// Order of a series known exactly (a polynomial in q^(1/D)).
inline constexpr std::int64_t kExactOrder = std::numeric_limits<std::int64_t>::max() / 4;

/// Adds lattice offsets to an order, saturating at kExactOrder.
std::int64_t order_add(std::int64_t order, std::int64_t delta);

/// Converts a rational q-exponent to lattice units; throws PreconditionError
/// if r * denom is not an integer.
std::int64_t to_lattice(const Rational& r, int denom = kDefaultDenom);
Rational from_lattice(std::int64_t e, int denom = kDefaultDenom);

/// Truncated Laurent series in q^(1/D) with WLaurent coefficients.
///
/// All coefficients of q^(e/D) with e < order() are determined; terms at or
/// past the order are never stored. Every operation propagates the order
/// pessimistically, so an identity that compares equal below some order is a
/// sound claim about the untruncated series.
class QSeries {
 public:
  using Term = std::pair<std::int64_t, WLaurent>;

  QSeries() = default;
  explicit QSeries(const WLaurent& constant, int denom = kDefaultDenom);

  static QSeries monomial(const WLaurent& coeff, std::int64_t exp, int denom = kDefaultDenom);
  static QSeries zero(std::int64_t order, int denom = kDefaultDenom);
  /// Terms may be unsorted and may contain duplicates or zeros; terms at or
  /// beyond order are dropped.
  static QSeries from_terms(std::vector<Term> terms, std::int64_t order, int denom = kDefaultDenom);

  int denom() const { return denom_; }
  std::int64_t order() const { return order_; }
  bool is_exact() const { return order_ >= kExactOrder; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest stored exponent; for the zero series, the order itself (every
  /// known coefficient vanishes).
  std::int64_t valuation() const;

  /// Coefficient of q^(e/D). Throws TruncationError when e >= order().
  WLaurent coeff(std::int64_t e) const;
  WLaurent coeff(const Rational& exponent) const;

  QSeries truncated(std::int64_t order) const;
  /// q^(delta/D) * this.
  QSeries shifted(std::int64_t delta) const;
  QSeries shifted(const Rational& r) const;
  /// tau -> k tau.
  QSeries rescaled(int k) const;
  /// Multiplicative inverse. The leading coefficient must be a monomial unit
  /// in the Laurent ring. Exact inputs need a finite cap.
  QSeries inverse(std::int64_t cap = kExactOrder) const;

  QSeries map_coeffs(const std::function<WLaurent(const WLaurent&)>& fn) const;
  QSeries substitute_w(const Cyclotomic& unit) const;
  QSeries w_power(int k) const;
  QSeries w_root(int k) const;
  /// Evaluates every coefficient at s = s_value; the result has constant
  /// coefficients.
  QSeries specialize(const Cyclotomic& s_value) const;

  /// this * (1 - x)^(+-1) with x = c s^a q^(e/D), e > 0.
  QSeries times_one_minus(const Cyclotomic& c, int s_exp, std::int64_t q_exp) const;
  QSeries divided_by_one_minus(const Cyclotomic& c, int s_exp, std::int64_t q_exp) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const WLaurent& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const WLaurent& c) { return a *= c; }

  std::string to_string() const;

 private:
  void check_denom(const QSeries& o) const;
  int denom_ = kDefaultDenom;
  std::int64_t order_ = kExactOrder;
  std::vector<Term> terms_;
};

/// Structured equality verdict below an order.
struct Mismatch {
  std::int64_t exp = 0;
  WLaurent lhs;
  WLaurent rhs;
};

struct Verdict {
  bool pass = false;
  std::int64_t order = 0;
  std::optional<Mismatch> first_mismatch;
};

/// Exact comparison of all coefficients below order. Throws TruncationError
/// if either operand is not valid that far.
Verdict eq_upto(const QSeries& a, const QSeries& b, std::int64_t order);

}  // namespace qmock::qlaurent
