#include "qmock/qlaurent/product_form.hpp"

#include <sstream>

#include "qmock/error.hpp"

namespace qmock::qlaurent {

ProductForm ProductForm::zero() {
  ProductForm p;
  p.zero_ = true;
  return p;
}

ProductForm& ProductForm::times(const Monomial& m) {
  if (m.coef.is_zero()) {
    zero_ = true;
    return *this;
  }
  prefactor_ = prefactor_ * m;
  return *this;
}

ProductForm& ProductForm::times(const ProductForm& o) {
  if (o.zero_) zero_ = true;
  prefactor_ = prefactor_ * o.prefactor_;
  finite_.insert(finite_.end(), o.finite_.begin(), o.finite_.end());
  runs_.insert(runs_.end(), o.runs_.begin(), o.runs_.end());
  for (const auto& [f, m] : o.loc_) loc_.emplace_back(f, m);
  return *this;
}

ProductForm& ProductForm::times_one_minus(const Monomial& x, int mult) {
  if (mult == 0 || x.coef.is_zero()) return *this;
  if (x.q_exp > 0) {
    finite_.push_back({x, mult});
    return *this;
  }
  if (x.q_exp < 0) {
    times((-x).pow(mult));
    return times_one_minus(x.inverse(), mult);
  }
  if (x.s_exp == 0) {
    const Cyclotomic v = Cyclotomic(1L) - x.coef;
    if (v.is_zero()) {
      if (mult < 0) throw DomainError("product divides by the vanishing factor (1 - 1)");
      zero_ = true;
      return *this;
    }
    prefactor_.coef *= v.pow(mult);
    return *this;
  }
  if (x.s_exp % 2 != 0) {
    throw PreconditionError("w-only factor with a half-integral power of w cannot be localized");
  }
  if (x.s_exp < 0) {
    times((-x).pow(mult));
    return times_one_minus(x.inverse(), mult);
  }
  loc_.emplace_back(LocFactor{x.coef, x.s_exp / 2}, mult);
  return *this;
}

ProductForm& ProductForm::times_pochhammer(const Monomial& a, std::int64_t step, long n, int mult) {
  if (n >= 0) {
    for (long i = 0; i < n; ++i) times_one_minus(a * Monomial::q(step * i), mult);
  } else {
    for (long i = 1; i <= -n; ++i) times_one_minus(a * Monomial::q(-step * i), -mult);
  }
  return *this;
}

ProductForm& ProductForm::times_pochhammer_infinite(const Monomial& a, std::int64_t step, int mult) {
  if (step <= 0) throw PreconditionError("infinite product needs a positive base exponent");
  Monomial x = a;
  while (x.q_exp <= 0) {
    times_one_minus(x, mult);
    x = x * Monomial::q(step);
  }
  if (mult != 0 && !x.coef.is_zero()) runs_.push_back({x, step, mult});
  return *this;
}

ProductForm ProductForm::inverse() const {
  if (zero_) throw DomainError("inverse of a vanishing product");
  ProductForm p;
  p.prefactor_ = prefactor_.inverse();
  for (const auto& f : finite_) p.finite_.push_back({f.x, -f.mult});
  for (const auto& r : runs_) p.runs_.push_back({r.x, r.step, -r.mult});
  for (const auto& [f, m] : loc_) p.loc_.emplace_back(f, -m);
  return p;
}

namespace {

void apply(QSeries& s, const Monomial& x, int mult) {
  for (int i = 0; i < mult; ++i) s = s.times_one_minus(x.coef, x.s_exp, x.q_exp);
  for (int i = 0; i < -mult; ++i) s = s.divided_by_one_minus(x.coef, x.s_exp, x.q_exp);
}

}  // namespace

LocalizedSeries ProductForm::expand(std::int64_t order, int denom) const {
  if (zero_) return LocalizedSeries(QSeries::zero(kExactOrder, denom));
  const std::int64_t rel = order - prefactor_.q_exp;
  QSeries s = QSeries(WLaurent(1L), denom).truncated(rel);
  if (rel > 0) {
    // Numerator factors first keeps intermediate series short.
    for (int pass = 0; pass < 2; ++pass) {
      const bool want_num = pass == 0;
      for (const auto& f : finite_) {
        if ((f.mult > 0) == want_num && f.x.q_exp < rel) apply(s, f.x, f.mult);
      }
      for (const auto& r : runs_) {
        if ((r.mult > 0) != want_num) continue;
        for (Monomial x = r.x; x.q_exp < rel; x = x * Monomial::q(r.step)) apply(s, x, r.mult);
      }
    }
  }
  s *= prefactor_.coefficient();
  LocalizedSeries out(s.shifted(prefactor_.q_exp));
  for (const auto& [f, m] : loc_) out = out.over_one_minus(f.c, f.w_exp, -m);
  return out;
}

std::string ProductForm::to_string() const {
  if (zero_) return "0";
  std::ostringstream os;
  os << prefactor_.coefficient().to_string() << "*q^(" << from_lattice(prefactor_.q_exp).get_str() << ")";
  auto mono = [](const Monomial& x) {
    return "[" + x.coefficient().to_string() + "]q^(" + from_lattice(x.q_exp).get_str() + ")";
  };
  for (const auto& f : finite_) os << " * (1 - " << mono(f.x) << ")^" << f.mult;
  for (const auto& r : runs_) {
    os << " * (" << mono(r.x) << "; q^(" << from_lattice(r.step).get_str() << "))_inf^" << r.mult;
  }
  for (const auto& [f, m] : loc_) os << " * " << f.to_string() << "^" << m;
  return os.str();
}

}  // namespace qmock::qlaurent
