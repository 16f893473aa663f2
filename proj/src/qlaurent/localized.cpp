#include "qmock/qlaurent/localized.hpp"

#include <algorithm>
#include <ranges>
#include <sstream>

#include "qmock/error.hpp"

namespace qmock::qlaurent {

WLaurent LocFactor::poly() const { return WLaurent(1L) - WLaurent::w_monomial(w_exp, c); }

Cyclotomic LocFactor::evaluate(const Cyclotomic& s_value) const {
  return Cyclotomic(1L) - c * s_value.pow(2LL * w_exp);
}

std::string LocFactor::to_string() const { return "(" + poly().to_string() + ")"; }

namespace {

QSeries times_power(QSeries s, const WLaurent& p, int times) {
  for (int i = 0; i < times; ++i) s *= p;
  return s;
}

}  // namespace

LocalizedSeries::LocalizedSeries(QSeries num) : num_(std::move(num)) {}

LocalizedSeries::LocalizedSeries(QSeries num, std::vector<Factor> den) : num_(std::move(num)) {
  for (const auto& [f, m] : den) add_factor(f, m);
}

bool LocalizedSeries::has_denominator() const {
  return std::any_of(den_.begin(), den_.end(), [](const Factor& f) { return f.second > 0; });
}

void LocalizedSeries::add_factor(const LocFactor& f, int mult) {
  if (mult == 0) return;
  if (f.w_exp <= 0) throw PreconditionError("localization factor needs a positive w-exponent");
  if (f.c.is_zero()) return;
  for (auto it = den_.begin(); it != den_.end(); ++it) {
    if (it->first == f) {
      it->second += mult;
      if (it->second == 0) den_.erase(it);
      return;
    }
  }
  den_.emplace_back(f, mult);
}

LocalizedSeries LocalizedSeries::over_one_minus(const Cyclotomic& c, int w_exp, int mult) const {
  LocalizedSeries out = *this;
  if (w_exp == 0) {
    const Cyclotomic v = Cyclotomic(1L) - c;
    if (v.is_zero()) {
      if (mult > 0) throw DomainError("division by the zero factor (1 - 1)");
      return LocalizedSeries(QSeries::zero(order(), denom()));
    }
    out.num_ *= WLaurent(v.pow(-mult));
    return out;
  }
  if (w_exp < 0) {
    // 1 - c w^-k = -c w^-k (1 - c^-1 w^k)
    const WLaurent unit = WLaurent::w_monomial(w_exp, -c);
    WLaurent scale = mult > 0 ? unit.inverse() : unit;
    for (int i = 1; i < std::abs(mult); ++i) scale *= mult > 0 ? unit.inverse() : unit;
    out.num_ *= scale;
    out.add_factor(LocFactor{c.inverse(), -w_exp}, mult);
    return out;
  }
  out.add_factor(LocFactor{c, w_exp}, mult);
  return out;
}

WLaurent LocalizedSeries::den_poly() const {
  WLaurent p(1L);
  for (const auto& [f, m] : den_) {
    for (int i = 0; i < m; ++i) p *= f.poly();
  }
  return p;
}

QSeries LocalizedSeries::expanded_num() const {
  QSeries n = num_;
  for (const auto& [f, m] : den_) {
    if (m < 0) n = times_power(std::move(n), f.poly(), -m);
  }
  return n;
}

std::pair<WLaurent, WLaurent> LocalizedSeries::coeff(std::int64_t e) const {
  WLaurent c = num_.coeff(e);
  for (const auto& [f, m] : den_) {
    for (int i = 0; i < -m; ++i) c *= f.poly();
  }
  return {c, den_poly()};
}

LocalizedSeries LocalizedSeries::truncated(std::int64_t order) const {
  LocalizedSeries out = *this;
  out.num_ = num_.truncated(order);
  return out;
}

LocalizedSeries LocalizedSeries::shifted(std::int64_t delta) const {
  LocalizedSeries out = *this;
  out.num_ = num_.shifted(delta);
  return out;
}

LocalizedSeries LocalizedSeries::rescaled(int k) const {
  LocalizedSeries out = *this;
  out.num_ = num_.rescaled(k);
  return out;
}

LocalizedSeries LocalizedSeries::substitute_w(const Cyclotomic& unit) const {
  LocalizedSeries out(num_.substitute_w(unit));
  for (const auto& [f, m] : den_) out.add_factor(LocFactor{f.c * unit.pow(f.w_exp), f.w_exp}, m);
  return out;
}

LocalizedSeries LocalizedSeries::w_power(int k) const {
  if (k <= 0) throw PreconditionError("w_power needs a positive exponent");
  LocalizedSeries out(num_.w_power(k));
  for (const auto& [f, m] : den_) out.add_factor(LocFactor{f.c, f.w_exp * k}, m);
  return out;
}

LocalizedSeries LocalizedSeries::w_root(int k) const {
  if (k <= 0) throw PreconditionError("w_root needs a positive exponent");
  LocalizedSeries out(num_.w_root(k));
  for (const auto& [f, m] : den_) {
    if (f.w_exp % k != 0) throw PreconditionError("w_root: factor " + f.to_string() + " is not a polynomial in w^" + std::to_string(k));
    out.add_factor(LocFactor{f.c, f.w_exp / k}, m);
  }
  return out;
}

QSeries LocalizedSeries::specialize(const Cyclotomic& s_value) const {
  Cyclotomic scale(1L);
  for (const auto& [f, m] : den_) {
    const Cyclotomic v = f.evaluate(s_value);
    if (v.is_zero()) {
      if (m > 0) throw DomainError("specialization point is a zero of the denominator factor " + f.to_string());
      return QSeries::zero(order(), denom());
    }
    scale *= v.pow(-m);
  }
  QSeries out = num_.specialize(s_value);
  out *= WLaurent(scale);
  return out;
}

LocalizedSeries LocalizedSeries::operator-() const {
  LocalizedSeries out = *this;
  out.num_ = -num_;
  return out;
}

std::pair<QSeries, QSeries> LocalizedSeries::common_numerators(const LocalizedSeries& a, const LocalizedSeries& b,
                                                               std::vector<Factor>* common) {
  std::vector<Factor> target;
  auto mult_in = [](const std::vector<Factor>& v, const LocFactor& f) {
    for (const auto& [g, m] : v) {
      if (g == f) return m;
    }
    return 0;
  };
  for (const auto* side : {&a.den_, &b.den_}) {
    for (const auto& f : *side | std::views::keys) {
      if (std::any_of(target.begin(), target.end(), [&](const Factor& t) { return t.first == f; })) continue;
      target.emplace_back(f, std::max(mult_in(a.den_, f), mult_in(b.den_, f)));
    }
  }
  QSeries na = a.num_;
  QSeries nb = b.num_;
  for (const auto& [f, t] : target) {
    na = times_power(std::move(na), f.poly(), t - mult_in(a.den_, f));
    nb = times_power(std::move(nb), f.poly(), t - mult_in(b.den_, f));
  }
  if (common) {
    common->clear();
    for (const auto& fm : target) {
      if (fm.second != 0) common->push_back(fm);
    }
  }
  return {std::move(na), std::move(nb)};
}

LocalizedSeries& LocalizedSeries::operator+=(const LocalizedSeries& o) {
  std::vector<Factor> common;
  auto [na, nb] = common_numerators(*this, o, &common);
  na += nb;
  num_ = std::move(na);
  den_ = std::move(common);
  return *this;
}

LocalizedSeries& LocalizedSeries::operator-=(const LocalizedSeries& o) { return *this += -o; }

LocalizedSeries& LocalizedSeries::operator*=(const LocalizedSeries& o) {
  num_ = num_ * o.num_;
  for (const auto& [f, m] : o.den_) add_factor(f, m);
  return *this;
}

LocalizedSeries& LocalizedSeries::operator*=(const WLaurent& c) {
  num_ *= c;
  return *this;
}

std::string LocalizedSeries::to_string() const {
  std::ostringstream os;
  os << "(" << num_.to_string() << ")";
  for (const auto& [f, m] : den_) os << " * " << f.to_string() << "^" << -m;
  return os.str();
}

Verdict eq_upto(const LocalizedSeries& a, const LocalizedSeries& b, std::int64_t order) {
  auto [na, nb] = LocalizedSeries::common_numerators(a, b);
  return eq_upto(na, nb, order);
}

}  // namespace qmock::qlaurent
