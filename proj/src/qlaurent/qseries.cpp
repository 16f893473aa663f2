#include "qmock/qlaurent/qseries.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qmock/error.hpp"
#include "qmock/kernels/convolution.hpp"

namespace qmock::qlaurent {

std::int64_t order_add(std::int64_t order, std::int64_t delta) {
  if (order >= kExactOrder) return kExactOrder;
  const std::int64_t r = order + delta;
  return r >= kExactOrder ? kExactOrder : r;
}

std::int64_t to_lattice(const Rational& r, int denom) {
  const Rational scaled = r * denom;
  if (!exactring::is_integer(scaled)) {
    throw PreconditionError("exponent " + r.get_str() + " is off the 1/" + std::to_string(denom) + " lattice");
  }
  return exactring::to_int64(scaled);
}

Rational from_lattice(std::int64_t e, int denom) {
  Rational r(static_cast<long>(e), static_cast<unsigned long>(denom));
  r.canonicalize();
  return r;
}

QSeries::QSeries(const WLaurent& constant, int denom) : denom_(denom) {
  if (!constant.is_zero()) terms_.emplace_back(0, constant);
}

QSeries QSeries::monomial(const WLaurent& coeff, std::int64_t exp, int denom) {
  QSeries s;
  s.denom_ = denom;
  if (!coeff.is_zero()) s.terms_.emplace_back(exp, coeff);
  return s;
}

QSeries QSeries::zero(std::int64_t order, int denom) {
  QSeries s;
  s.denom_ = denom;
  s.order_ = order;
  return s;
}

QSeries QSeries::from_terms(std::vector<Term> terms, std::int64_t order, int denom) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  QSeries s;
  s.denom_ = denom;
  s.order_ = order;
  for (auto& t : terms) {
    if (t.first >= order) break;
    if (!s.terms_.empty() && s.terms_.back().first == t.first) {
      s.terms_.back().second += t.second;
    } else {
      s.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(s.terms_, [](const Term& t) { return t.second.is_zero(); });
  return s;
}

std::int64_t QSeries::valuation() const { return terms_.empty() ? order_ : terms_.front().first; }

WLaurent QSeries::coeff(std::int64_t e) const {
  if (e >= order_) {
    throw TruncationError("coefficient at q^(" + from_lattice(e, denom_).get_str() +
                          ") is beyond the truncation order " + from_lattice(order_, denom_).get_str());
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, std::int64_t v) { return t.first < v; });
  if (it != terms_.end() && it->first == e) return it->second;
  return {};
}

WLaurent QSeries::coeff(const Rational& exponent) const {
  const Rational scaled = exponent * denom_;
  if (exactring::is_integer(scaled)) return coeff(exactring::to_int64(scaled));
  if (!is_exact() && exponent >= from_lattice(order_, denom_)) {
    throw TruncationError("coefficient at q^(" + exponent.get_str() + ") is beyond the truncation order");
  }
  return {};
}

QSeries QSeries::truncated(std::int64_t order) const {
  if (order >= order_) return *this;
  QSeries s;
  s.denom_ = denom_;
  s.order_ = order;
  for (const auto& t : terms_) {
    if (t.first >= order) break;
    s.terms_.push_back(t);
  }
  return s;
}

QSeries QSeries::shifted(std::int64_t delta) const {
  QSeries s = *this;
  for (auto& t : s.terms_) t.first += delta;
  s.order_ = order_add(order_, delta);
  return s;
}

QSeries QSeries::shifted(const Rational& r) const { return shifted(to_lattice(r, denom_)); }

QSeries QSeries::rescaled(int k) const {
  if (k <= 0) throw PreconditionError("q_rescale needs a positive factor");
  QSeries s = *this;
  for (auto& t : s.terms_) t.first *= k;
  if (!is_exact()) {
    // Known below order: after tau -> k tau the gaps between multiples of k
    // are known zeros, so the first unknown exponent is k * order.
    s.order_ = order_ * k;
  }
  return s;
}

QSeries QSeries::inverse(std::int64_t cap) const {
  if (terms_.empty()) throw DomainError("inverse of the zero series (or of a series known to be 0 below its order)");
  const std::int64_t v = terms_.front().first;
  const WLaurent lead_inv = terms_.front().second.inverse();  // throws unless monomial unit
  std::int64_t out_order = is_exact() ? kExactOrder : order_ - 2 * v;
  out_order = std::min(out_order, cap);
  if (out_order >= kExactOrder) {
    if (terms_.size() == 1) return monomial(lead_inv, -v, denom_);
    throw PreconditionError("inverse of an exact non-monomial series needs a finite order cap");
  }
  // Normalized d = this / (lead q^v) = 1 + sum_{i>0} d_i q^i.
  std::vector<std::pair<std::int64_t, WLaurent>> d;
  std::int64_t stride = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    const std::int64_t off = terms_[i].first - v;
    d.emplace_back(off, terms_[i].second * lead_inv);
    stride = std::gcd(stride, off);
  }
  const std::int64_t rel = out_order + v;  // inverse is lead^-1 q^-v * (relative series below rel)
  std::vector<Term> out;
  if (rel > 0) {
    if (stride == 0) stride = rel;  // monomial: only the constant term
    const std::int64_t slots = (rel + stride - 1) / stride;
    std::vector<WLaurent> b(static_cast<std::size_t>(slots));
    b[0] = WLaurent(1L);
    for (std::int64_t j = 1; j < slots; ++j) {
      WLaurent acc;
      for (const auto& [off, c] : d) {
        const std::int64_t idx = off / stride;
        if (idx > j) break;
        if (!b[static_cast<std::size_t>(j - idx)].is_zero()) WLaurent::fma(acc, c, b[static_cast<std::size_t>(j - idx)]);
      }
      b[static_cast<std::size_t>(j)] = -acc;
    }
    for (std::int64_t j = 0; j < slots; ++j) {
      if (!b[static_cast<std::size_t>(j)].is_zero()) {
        out.emplace_back(j * stride - v, b[static_cast<std::size_t>(j)] * lead_inv);
      }
    }
  }
  return from_terms(std::move(out), out_order, denom_);
}

QSeries QSeries::map_coeffs(const std::function<WLaurent(const WLaurent&)>& fn) const {
  QSeries s;
  s.denom_ = denom_;
  s.order_ = order_;
  s.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    WLaurent v = fn(c);
    if (!v.is_zero()) s.terms_.emplace_back(e, std::move(v));
  }
  return s;
}

QSeries QSeries::substitute_w(const Cyclotomic& unit) const {
  return map_coeffs([&](const WLaurent& c) { return c.substitute(unit); });
}

QSeries QSeries::w_power(int k) const {
  return map_coeffs([&](const WLaurent& c) { return c.w_power(k); });
}

QSeries QSeries::w_root(int k) const {
  return map_coeffs([&](const WLaurent& c) { return c.w_root(k); });
}

QSeries QSeries::specialize(const Cyclotomic& s_value) const {
  return map_coeffs([&](const WLaurent& c) { return WLaurent(c.evaluate(s_value)); });
}

QSeries QSeries::times_one_minus(const Cyclotomic& c, int s_exp, std::int64_t q_exp) const {
  if (q_exp <= 0) throw PreconditionError("times_one_minus needs a positive q-exponent");
  if (c.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() * 2);
  auto a = terms_.begin();
  auto b = terms_.begin();  // b walks the shifted copy
  while (a != terms_.end() || b != terms_.end()) {
    const std::int64_t eb = b != terms_.end() ? b->first + q_exp : kExactOrder;
    if (eb >= order_) b = terms_.end();
    if (b == terms_.end() && a == terms_.end()) break;
    if (b == terms_.end() || (a != terms_.end() && a->first < eb)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || eb < a->first) {
      out.emplace_back(eb, -b->second.times_monomial(s_exp, c));
      ++b;
    } else {
      WLaurent v = a->second - b->second.times_monomial(s_exp, c);
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  QSeries s;
  s.denom_ = denom_;
  s.order_ = order_;
  s.terms_ = std::move(out);
  return s;
}

QSeries QSeries::divided_by_one_minus(const Cyclotomic& c, int s_exp, std::int64_t q_exp) const {
  if (q_exp <= 0) throw PreconditionError("divided_by_one_minus needs a positive q-exponent");
  if (c.is_zero()) return *this;
  if (is_exact()) throw PreconditionError("geometric expansion of an exact series needs a finite order");
  // b_i = a_i + x b_{i - e}; residue classes mod e are independent chains.
  std::map<std::int64_t, std::vector<const Term*>> classes;
  for (const auto& t : terms_) {
    std::int64_t r = t.first % q_exp;
    if (r < 0) r += q_exp;
    classes[r].push_back(&t);
  }
  std::vector<Term> out;
  for (const auto& [r, chain] : classes) {
    std::size_t idx = 0;
    WLaurent carry;
    for (std::int64_t e = chain.front()->first; e < order_; e += q_exp) {
      WLaurent v = carry.times_monomial(s_exp, c);
      if (idx < chain.size() && chain[idx]->first == e) {
        v += chain[idx]->second;
        ++idx;
      }
      if (!v.is_zero()) out.emplace_back(e, v);
      carry = std::move(v);
      if (carry.is_zero() && idx == chain.size()) break;
      if (carry.is_zero() && idx < chain.size()) {
        e = chain[idx]->first - q_exp;  // jump over a zero run
      }
    }
  }
  return from_terms(std::move(out), order_, denom_);
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

void QSeries::check_denom(const QSeries& o) const {
  if (denom_ != o.denom_) {
    throw PreconditionError("exponent denominator mismatch: " + std::to_string(denom_) + " vs " +
                            std::to_string(o.denom_));
  }
}

QSeries& QSeries::operator+=(const QSeries& o) {
  check_denom(o);
  const std::int64_t ord = std::min(order_, o.order_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  auto a_end = std::lower_bound(terms_.begin(), terms_.end(), ord,
                                [](const Term& t, std::int64_t v) { return t.first < v; });
  auto b_end = std::lower_bound(o.terms_.begin(), o.terms_.end(), ord,
                                [](const Term& t, std::int64_t v) { return t.first < v; });
  while (a != a_end || b != b_end) {
    if (b == b_end || (a != a_end && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == a_end || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      WLaurent v = std::move(a->second);
      v += b->second;
      if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  order_ = ord;
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const WLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_denom(b);
  // Known below min(order_a + val_b, order_b + val_a).
  const std::int64_t ord = std::min(order_add(a.order_, b.valuation()), order_add(b.order_, a.valuation()));
  QSeries s;
  s.denom_ = a.denom_;
  s.order_ = ord;
  s.terms_ = kernels::convolve(a.terms_, b.terms_, ord);
  return s;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]*q^(" << from_lattice(e, denom_).get_str() << ")";
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(q^(" << from_lattice(order_, denom_).get_str() << "))";
  return os.str();
}

Verdict eq_upto(const QSeries& a, const QSeries& b, std::int64_t order) {
  if (a.denom() != b.denom()) throw PreconditionError("exponent denominator mismatch");
  if (order > a.order() || order > b.order()) {
    throw TruncationError("requested order " + from_lattice(order, a.denom()).get_str() +
                          " exceeds operand validity (" + from_lattice(std::min(a.order(), b.order()), a.denom()).get_str() + ")");
  }
  Verdict v;
  v.order = order;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  while (true) {
    const std::int64_t xa = ia != ea ? ia->first : kExactOrder;
    const std::int64_t xb = ib != eb ? ib->first : kExactOrder;
    const std::int64_t x = std::min(xa, xb);
    if (x >= order) break;
    const WLaurent ca = xa == x ? ia->second : WLaurent();
    const WLaurent cb = xb == x ? ib->second : WLaurent();
    if (!(ca == cb)) {
      v.pass = false;
      v.first_mismatch = Mismatch{x, ca, cb};
      return v;
    }
    if (xa == x) ++ia;
    if (xb == x) ++ib;
  }
  v.pass = true;
  return v;
}

}  // namespace qmock::qlaurent
