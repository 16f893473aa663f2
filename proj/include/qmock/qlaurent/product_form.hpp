#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmock/qlaurent/localized.hpp"

namespace qmock::qlaurent {

/// c * s^a * q^(e/D).
struct Monomial {
  Cyclotomic coef = Cyclotomic(1L);
  int s_exp = 0;
  std::int64_t q_exp = 0;

  static Monomial q(std::int64_t q_exp) { return {Cyclotomic(1L), 0, q_exp}; }
  static Monomial w(int w_exp, std::int64_t q_exp = 0) { return {Cyclotomic(1L), 2 * w_exp, q_exp}; }

  Monomial inverse() const { return {coef.inverse(), -s_exp, -q_exp}; }
  Monomial pow(int k) const { return {coef.pow(k), s_exp * k, q_exp * k}; }
  Monomial operator-() const { return {-coef, s_exp, q_exp}; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.coef * b.coef, a.s_exp + b.s_exp, a.q_exp + b.q_exp};
  }
  WLaurent coefficient() const { return WLaurent::s_monomial(s_exp, coef); }
};

/// A finite-or-infinite product of factors (1 - x)^(+-1), kept factored
/// until expand() is asked for a concrete order.
///
/// Factors whose q-exponent is not positive are normalized on entry: a
/// negative q-exponent is flipped with (1 - x) = -x (1 - 1/x); a w-only
/// factor becomes a symbolic localization factor; the constant factor
/// (1 - 1) makes the product zero (or throws when it would divide).
class ProductForm {
 public:
  ProductForm() = default;
  explicit ProductForm(const Monomial& prefactor) : prefactor_(prefactor) {}

  static ProductForm zero();

  bool is_zero() const { return zero_; }
  const Monomial& prefactor() const { return prefactor_; }
  /// q-exponent of the leading term (every factor starts with 1).
  std::int64_t valuation() const { return zero_ ? kExactOrder : prefactor_.q_exp; }

  ProductForm& times(const Monomial& m);
  ProductForm& times(const ProductForm& o);
  ProductForm& times_one_minus(const Monomial& x, int mult = 1);
  /// (a; q^step)_n with step in lattice units; n < 0 uses
  /// (a; q)_{-n} = 1 / prod_{i=1..n} (1 - a q^{-i}).
  ProductForm& times_pochhammer(const Monomial& a, std::int64_t step, long n, int mult = 1);
  /// (a; q^step)_inf. Leading factors with non-positive q-exponent are
  /// split off first; an infinite run of them (step <= 0) is rejected.
  ProductForm& times_pochhammer_infinite(const Monomial& a, std::int64_t step, int mult = 1);

  ProductForm inverse() const;

  /// Expansion valid for all q-exponents below order.
  LocalizedSeries expand(std::int64_t order, int denom = kDefaultDenom) const;

  std::string to_string() const;

 private:
  struct Finite {
    Monomial x;
    int mult;
  };
  struct Run {
    Monomial x;
    std::int64_t step;
    int mult;
  };

  bool zero_ = false;
  Monomial prefactor_;
  std::vector<Finite> finite_;
  std::vector<Run> runs_;
  std::vector<LocalizedSeries::Factor> loc_;  // signed: > 0 numerator here
};

inline ProductForm operator*(ProductForm a, const ProductForm& b) { return a.times(b); }

}  // namespace qmock::qlaurent
