#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmock/qlaurent/qseries.hpp"

namespace qmock::qlaurent {

/// The polynomial 1 - c w^k with k > 0.
struct LocFactor {
  Cyclotomic c = Cyclotomic(1L);
  int w_exp = 1;

  WLaurent poly() const;
  /// Value at s = s_value (so w = s_value^2).
  Cyclotomic evaluate(const Cyclotomic& s_value) const;
  std::string to_string() const;
  friend bool operator==(const LocFactor& a, const LocFactor& b) { return a.w_exp == b.w_exp && a.c == b.c; }
};

/// A q-series divided by a product of factors (1 - c w^k)^m.
///
/// Multiplicities are signed: m > 0 puts the factor in the denominator,
/// m < 0 keeps a numerator factor in symbolic form (handy when a theta
/// product exposes (1 - w^l) and a later step divides by it again).
class LocalizedSeries {
 public:
  using Factor = std::pair<LocFactor, int>;

  LocalizedSeries() = default;
  LocalizedSeries(QSeries num);  // NOLINT(google-explicit-constructor)
  LocalizedSeries(QSeries num, std::vector<Factor> den);

  const QSeries& num() const { return num_; }
  const std::vector<Factor>& den() const { return den_; }
  int denom() const { return num_.denom(); }
  std::int64_t order() const { return num_.order(); }
  std::int64_t valuation() const { return num_.valuation(); }
  bool has_denominator() const;

  /// this / (1 - c w^k)^mult; k may be negative (normalized internally).
  LocalizedSeries over_one_minus(const Cyclotomic& c, int w_exp, int mult = 1) const;

  /// Product of the denominator factors (positive multiplicities).
  WLaurent den_poly() const;
  /// Numerator with every symbolic numerator factor multiplied in; the
  /// remaining denominator is den_poly().
  QSeries expanded_num() const;
  /// Coefficient of q^(e/D) as (numerator coefficient, denominator).
  std::pair<WLaurent, WLaurent> coeff(std::int64_t e) const;

  LocalizedSeries truncated(std::int64_t order) const;
  LocalizedSeries shifted(std::int64_t delta) const;
  LocalizedSeries rescaled(int k) const;
  /// w -> unit * w.
  LocalizedSeries substitute_w(const Cyclotomic& unit) const;
  /// w -> w^k.
  LocalizedSeries w_power(int k) const;
  /// Inverse of w_power; every exponent (series and factors) must divide.
  LocalizedSeries w_root(int k) const;
  /// Evaluates at s = s_value. Throws DomainError when a denominator factor
  /// vanishes there.
  QSeries specialize(const Cyclotomic& s_value) const;

  LocalizedSeries operator-() const;
  LocalizedSeries& operator+=(const LocalizedSeries& o);
  LocalizedSeries& operator-=(const LocalizedSeries& o);
  LocalizedSeries& operator*=(const LocalizedSeries& o);
  LocalizedSeries& operator*=(const WLaurent& c);
  friend LocalizedSeries operator+(LocalizedSeries a, const LocalizedSeries& b) { return a += b; }
  friend LocalizedSeries operator-(LocalizedSeries a, const LocalizedSeries& b) { return a -= b; }
  friend LocalizedSeries operator*(LocalizedSeries a, const LocalizedSeries& b) { return a *= b; }
  friend LocalizedSeries operator*(LocalizedSeries a, const WLaurent& c) { return a *= c; }

  std::string to_string() const;

  /// Rewrites both operands over the same factor multiset (the
  /// multiplicity-wise max) and returns the adjusted numerators.
  static std::pair<QSeries, QSeries> common_numerators(const LocalizedSeries& a, const LocalizedSeries& b,
                                                       std::vector<Factor>* common = nullptr);

 private:
  void add_factor(const LocFactor& f, int mult);
  QSeries num_;
  std::vector<Factor> den_;
};

/// Exact equality below order after cross-multiplication.
Verdict eq_upto(const LocalizedSeries& a, const LocalizedSeries& b, std::int64_t order);

}  // namespace qmock::qlaurent
