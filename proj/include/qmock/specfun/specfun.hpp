#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "qmock/qlaurent/constructors.hpp"

namespace qmock::specfun {

using qlaurent::Cyclotomic;
using qlaurent::LocalizedSeries;
using qlaurent::Monomial;
using qlaurent::ProductForm;
using qlaurent::QSeries;
using qlaurent::Rational;
using qlaurent::WLaurent;

/// Parameters of rho(a, b, c) with base q^base (base 2 means q -> q^2).
struct RhoArgs {
  Monomial a;
  Monomial b;
  Monomial c;
  int base = 1;
  bool c_is_zero = false;  // c = 0 drops the (c)_n factors
};

enum class EulerianKind { kG2, kG3, kRank, kCrank, kK1, kK2, kRho };

std::string to_string(EulerianKind kind);

/// Sum of ProductForm terms term(n) for n = first, first+1, ... Terms are
/// included while their q-valuation is below order; the scan requires the
/// valuations over the first 2*order+8 indices to be strictly increasing
/// once they pass order (zero terms are skipped). Throws PreconditionError
/// when that check fails.
LocalizedSeries eulerian_sum(const std::function<ProductForm(long)>& term, long first, std::int64_t order);

/// Bilateral version: n >= 0 via term(n), n < 0 via term(n) as well.
LocalizedSeries bilateral_sum(const std::function<ProductForm(long)>& term, std::int64_t order);

ProductForm eulerian_term(EulerianKind kind, long n, const std::optional<RhoArgs>& rho = std::nullopt);

/// Defining series. For kCrank this is the product generating function.
LocalizedSeries build_eulerian(EulerianKind kind, std::int64_t order, const std::optional<RhoArgs>& rho = std::nullopt);

/// The right-hand side of the three-variable reciprocity formula.
ProductForm reciprocity_rhs(const RhoArgs& args);

/// Generalized Lambert series forms (g2, g3, rank, K1, K2).
LocalizedSeries build_lambert(EulerianKind kind, std::int64_t order);

/// theta in the normalization used by mu and the theta quotients: the
/// negative of the bilateral sum (theta_sum), i.e. the printed triple product
/// q^(k/8) x^(-1/2) prod (1 - q^kn)(1 - x q^k(n-1))(1 - q^kn / x).
ProductForm theta_normalized(int l, int m, int k);

struct MuArgs {
  int r = 1;
  int m = 1;
  int k = 1;
};

/// mu(r alpha, m tau; k tau).
LocalizedSeries build_mu(const MuArgs& args, std::int64_t order);

enum class ThetaQuotient { kEq16, kEq13, kEq17, kEq18, kEq19, kEq58 };
ThetaQuotient theta_quotient_from_string(const std::string& name);
ProductForm theta_quotient_form(ThetaQuotient kind);
LocalizedSeries build_theta_quotient(ThetaQuotient kind, std::int64_t order);

/// Multiplies a product by a lazily built series so the result is valid
/// below order.
LocalizedSeries times_to_order(const ProductForm& f, const std::function<LocalizedSeries(std::int64_t)>& g,
                               std::int64_t order);

/// e^(2 pi i r) for rational r, exactly.
Cyclotomic exp_2pi_i(const Rational& r);
/// sin(pi r) for rational r as (e^(i pi r) - e^(-i pi r)) / (2i).
Cyclotomic sin_pi(const Rational& r);
/// Kronecker symbol (12/n).
int kronecker12(long n);

/// g_{a,b}(k tau) = sum_{nu in a+Z} nu q^(k nu^2 / 2) e^(2 pi i nu b).
QSeries build_g_ab(const Rational& a, const Rational& b, int k, std::int64_t order);

enum class ShadowKind { kG2Shadow, kG3Shadow, kEq37Lhs, kEq37Rhs, kZagierRankShadow };
ShadowKind shadow_from_string(const std::string& name);
/// For kG2Shadow the parameter is alpha with zeta = e^(2 pi i alpha); for
/// the others it is alpha itself.
QSeries build_shadow(ShadowKind kind, const Rational& alpha, std::int64_t order);

}  // namespace qmock::specfun
