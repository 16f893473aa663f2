#pragma once

#include <cstdint>
#include <optional>

#include "qmock/qlaurent/product_form.hpp"

namespace qmock::qlaurent {

/// (a; q^step)_n truncated below order, exponents in lattice units.
/// n = nullopt means the infinite product, which needs a.q_exp > 0.
QSeries pochhammer(const Monomial& a, std::int64_t step, std::optional<long> n, std::int64_t order,
                   int denom = kDefaultDenom);

/// eta(k tau)^power = q^(k power / 24) (q^k; q^k)_inf^power as a product.
ProductForm eta_product(int k, int power = 1);
QSeries eta(int k, std::int64_t order);

enum class ThetaMode { kSum, kProduct };

/// theta(l alpha + m tau; k tau) with w = e^(2 pi i alpha), normalized as the
/// bilateral sum  sum_n (-1)^n x^(n+1/2) q^(k n(n+1)/2 + k/8), x = w^l q^m.
QSeries theta_sum(int l, int m, int k, std::int64_t order);
/// The same function as a triple product. A zero-q factor (1 - w^l)
/// appears as a symbolic localization factor after expansion.
ProductForm theta_product(int l, int m, int k);
LocalizedSeries theta(int l, int m, int k, ThetaMode mode, std::int64_t order);

/// sum_n sign^n q^(A n^2 + B n) / (1 - w^r q^(k n + j)), A > 0, with the
/// pole of the n = -j/k term kept as the localization factor (1 - w^r).
LocalizedSeries lambert(int sign, const Rational& A, const Rational& B, int r, int k, int j, std::int64_t order,
                        int denom = kDefaultDenom);

}  // namespace qmock::qlaurent
