#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "qmock/exactring/rational.hpp"

namespace qmock::exactring {

/// Largest conductor a Cyclotomic may carry. Defaults to 360, which covers
/// zeta_3, zeta_8, zeta_12, zeta_24 and the sin(pi n alpha) fields for
/// alpha with denominator up to 15. Process-wide; validated on set.
int conductor_cap();
void set_conductor_cap(int cap);

int euler_phi(int n);

/// Coefficients c_0..c_phi(n) of the n-th cyclotomic polynomial (monic).
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
/// reduced modulo the n-th cyclotomic polynomial.
///
/// Values whose coordinates are rational are stored with conductor 1, so
/// arithmetic that happens to land back in Q stays on the fast path. Mixed
/// conductors are promoted to their lcm; exceeding the cap throws.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k.
  static Cyclotomic zeta(int n, long long k = 1);

  /// Reduces sum_j poly[j] zeta_n^j into canonical form.
  static Cyclotomic reduce(int n, std::span<const Rational> poly);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return conductor_ == 1; }
  /// Throws DomainError if the value is not rational.
  const Rational& rational_value() const;

  /// Embeds into Q(zeta_m); requires conductor() | m.
  Cyclotomic promote(int m) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long long e) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// a += b * c without a temporary when the conductors already agree.
  static void fma(Cyclotomic& acc, const Cyclotomic& b, const Cyclotomic& c);

 private:
  Cyclotomic(int n, std::vector<Rational> coords);
  void normalize();

  int conductor_ = 1;
  std::vector<Rational> coords_;
};

int lcm_conductor(int a, int b);

}  // namespace qmock::exactring
