#include "qmock/exactring/wlaurent.hpp"

#include <algorithm>
#include <sstream>

#include "qmock/error.hpp"

namespace qmock::exactring {

namespace {

// Integer power of a complex number without going through std::pow, which
// loses accuracy for large exponents on the unit circle.
std::complex<double> ipow(std::complex<double> z, int e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  std::complex<double> r = 1.0;
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

WLaurent::WLaurent(long value) : WLaurent(Cyclotomic(value)) {}

WLaurent::WLaurent(const Rational& value) : WLaurent(Cyclotomic(value)) {}

WLaurent::WLaurent(const Cyclotomic& value) {
  if (!value.is_zero()) terms_.emplace_back(0, value);
}

WLaurent WLaurent::s_monomial(int s_exp, const Cyclotomic& coeff) {
  WLaurent out;
  if (!coeff.is_zero()) out.terms_.emplace_back(s_exp, coeff);
  return out;
}

WLaurent WLaurent::w_monomial(int w_exp, const Cyclotomic& coeff) { return s_monomial(2 * w_exp, coeff); }

WLaurent WLaurent::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  WLaurent out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.second.is_zero(); });
  return out;
}

bool WLaurent::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

bool WLaurent::integral_in_w() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 == 0; });
}

int WLaurent::min_s_exp() const {
  if (terms_.empty()) throw DomainError("min exponent of zero polynomial");
  return terms_.front().first;
}

int WLaurent::max_s_exp() const {
  if (terms_.empty()) throw DomainError("max exponent of zero polynomial");
  return terms_.back().first;
}

Cyclotomic WLaurent::coeff(int s_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s_exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == s_exp) return it->second;
  return Cyclotomic();
}

WLaurent WLaurent::inverse() const {
  if (terms_.size() != 1) {
    throw DomainError("not a unit in the Laurent ring: " + to_string());
  }
  return s_monomial(-terms_[0].first, terms_[0].second.inverse());
}

WLaurent WLaurent::substitute(const Cyclotomic& unit) const {
  WLaurent out;
  out.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) {
      throw PreconditionError("w-substitution on half-integral power s^" + std::to_string(e) +
                              "; apply s-odd prefactors after substituting");
    }
    Cyclotomic v = c * unit.pow(e / 2);
    if (!v.is_zero()) out.terms_.emplace_back(e, std::move(v));
  }
  return out;
}

WLaurent WLaurent::w_power(int k) const {
  if (k == 0) throw PreconditionError("w_power needs k != 0");
  WLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_back(e * k, c);
  if (k < 0) std::reverse(out.terms_.begin(), out.terms_.end());
  return out;
}

WLaurent WLaurent::w_root(int k) const {
  if (k <= 0) throw PreconditionError("w_root needs k > 0");
  WLaurent out;
  for (const auto& [e, c] : terms_) {
    if (e % k != 0) throw PreconditionError("s-exponent " + std::to_string(e) + " not divisible by " + std::to_string(k));
    out.terms_.emplace_back(e / k, c);
  }
  return out;
}

WLaurent WLaurent::times_monomial(int s_exp, const Cyclotomic& c) const {
  if (c.is_zero()) return {};
  WLaurent out;
  out.terms_.reserve(terms_.size());
  for (const auto& [e, v] : terms_) out.terms_.emplace_back(e + s_exp, v * c);
  return out;
}

Cyclotomic WLaurent::evaluate(const Cyclotomic& s_value) const {
  if (terms_.empty()) return Cyclotomic();
  if (s_value.is_zero() && terms_.front().first < 0) throw DomainError("negative power of s at s = 0");
  Cyclotomic acc;
  for (const auto& [e, c] : terms_) acc += c * s_value.pow(e);
  return acc;
}

std::complex<double> WLaurent::evaluate(std::complex<double> s_value) const {
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) acc += c.to_complex() * ipow(s_value, e);
  return acc;
}

std::string WLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e != 0) os << "*s^" << e;
  }
  return os.str();
}

WLaurent WLaurent::operator-() const {
  WLaurent out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void WLaurent::add_scaled(const WLaurent& o, bool negate) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, negate ? -b->second : b->second);
      ++b;
    } else {
      Cyclotomic v = std::move(a->second);
      if (negate) {
        v -= b->second;
      } else {
        v += b->second;
      }
      if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

WLaurent& WLaurent::operator+=(const WLaurent& o) {
  add_scaled(o, false);
  return *this;
}

WLaurent& WLaurent::operator-=(const WLaurent& o) {
  add_scaled(o, true);
  return *this;
}

WLaurent& WLaurent::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

void WLaurent::fma(WLaurent& acc, const WLaurent& a, const WLaurent& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  if (!acc.terms_.empty()) {
    // Dense accumulation over the union range.
    const int lo2 = std::min(lo, acc.terms_.front().first);
    const int hi2 = std::max(hi, acc.terms_.back().first);
    std::vector<Cyclotomic> dense(static_cast<std::size_t>(hi2 - lo2 + 1));
    for (auto& [e, c] : acc.terms_) dense[static_cast<std::size_t>(e - lo2)] = std::move(c);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) Cyclotomic::fma(dense[static_cast<std::size_t>(ea + eb - lo2)], ca, cb);
    }
    acc.terms_.clear();
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (!dense[i].is_zero()) acc.terms_.emplace_back(lo2 + static_cast<int>(i), std::move(dense[i]));
    }
    return;
  }
  std::vector<Cyclotomic> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) Cyclotomic::fma(dense[static_cast<std::size_t>(ea + eb - lo)], ca, cb);
  }
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) acc.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
  }
}

WLaurent operator*(const WLaurent& a, const WLaurent& b) {
  WLaurent out;
  WLaurent::fma(out, a, b);
  return out;
}

WLaurent& WLaurent::operator*=(const WLaurent& o) {
  *this = *this * o;
  return *this;
}

}  // namespace qmock::exactring
