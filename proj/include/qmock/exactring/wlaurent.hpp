#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmock/exactring/cyclotomic.hpp"

namespace qmock::exactring {

/// Laurent polynomial in the half-power variable s, where s^2 = w.
///
/// Exponents are s-exponents, so w^(3/2) is s^3 and w^-1 is s^-2. Terms are
/// kept sorted by exponent with no zero coefficients. A constant WLaurent is
/// how a plain rational or cyclotomic scalar travels through series code.
class WLaurent {
 public:
  using Term = std::pair<int, Cyclotomic>;

  WLaurent() = default;
  WLaurent(long value);  // NOLINT(google-explicit-constructor)
  WLaurent(const Rational& value);  // NOLINT(google-explicit-constructor)
  WLaurent(const Cyclotomic& value);  // NOLINT(google-explicit-constructor)

  static WLaurent s_monomial(int s_exp, const Cyclotomic& coeff = Cyclotomic(1L));
  static WLaurent w_monomial(int w_exp, const Cyclotomic& coeff = Cyclotomic(1L));
  /// Builds from (s-exponent, coefficient) pairs in any order; duplicates add.
  static WLaurent from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// All s-exponents even, i.e. an honest Laurent polynomial in w.
  bool integral_in_w() const;
  int min_s_exp() const;
  int max_s_exp() const;

  Cyclotomic coeff(int s_exp) const;

  /// Inverse of a monomial unit c*s^k. Throws DomainError otherwise.
  WLaurent inverse() const;

  /// w -> unit * w. Throws PreconditionError on an odd s-exponent, since
  /// unit^(1/2) has no canonical meaning.
  WLaurent substitute(const Cyclotomic& unit) const;
  /// w -> w^k (s -> s^k).
  WLaurent w_power(int k) const;
  /// Inverse of w_power: every s-exponent must be divisible by k.
  WLaurent w_root(int k) const;
  /// Multiplies by c * s^k.
  WLaurent times_monomial(int s_exp, const Cyclotomic& c) const;

  Cyclotomic evaluate(const Cyclotomic& s_value) const;
  std::complex<double> evaluate(std::complex<double> s_value) const;

  std::string to_string() const;

  WLaurent operator-() const;
  WLaurent& operator+=(const WLaurent& o);
  WLaurent& operator-=(const WLaurent& o);
  WLaurent& operator*=(const WLaurent& o);
  WLaurent& operator*=(const Cyclotomic& c);

  friend WLaurent operator+(WLaurent a, const WLaurent& b) { return a += b; }
  friend WLaurent operator-(WLaurent a, const WLaurent& b) { return a -= b; }
  friend WLaurent operator*(const WLaurent& a, const WLaurent& b);
  friend WLaurent operator*(WLaurent a, const Cyclotomic& c) { return a *= c; }
  friend bool operator==(const WLaurent& a, const WLaurent& b) { return a.terms_ == b.terms_; }

  /// acc += a * b.
  static void fma(WLaurent& acc, const WLaurent& a, const WLaurent& b);

 private:
  void add_scaled(const WLaurent& o, bool negate);
  std::vector<Term> terms_;
};

}  // namespace qmock::exactring
