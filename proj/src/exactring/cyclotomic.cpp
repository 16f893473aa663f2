#include "qmock/exactring/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qmock/error.hpp"

namespace qmock::exactring {

namespace {

constexpr int kHardConductorLimit = 4096;

std::atomic<int> g_conductor_cap{360};

struct FieldData {
  int phi = 0;
  std::vector<Integer> poly;  // monic, size phi + 1
};

std::vector<Integer> poly_exact_div(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

using FieldCache = std::map<int, std::unique_ptr<FieldData>>;

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d. Caller holds the lock.
const FieldData& build_field_locked(int n, FieldCache& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_exact_div(std::move(p), build_field_locked(d, cache).poly);
  }
  auto fd = std::make_unique<FieldData>();
  fd->phi = static_cast<int>(p.size()) - 1;
  fd->poly = std::move(p);
  return *cache.emplace(n, std::move(fd)).first->second;
}

const FieldData& field(int n) {
  static std::mutex mu;
  static FieldCache cache;
  if (n < 1 || n > kHardConductorLimit) {
    throw DomainError("conductor " + std::to_string(n) + " out of range");
  }
  // Entries are never erased, so per-thread pointer memo skips the lock.
  thread_local std::vector<const FieldData*> memo(kHardConductorLimit + 1, nullptr);
  if (memo[static_cast<std::size_t>(n)] != nullptr) return *memo[static_cast<std::size_t>(n)];
  std::lock_guard<std::mutex> lock(mu);
  const FieldData& f = build_field_locked(n, cache);
  memo[static_cast<std::size_t>(n)] = &f;
  return f;
}

void check_cap(int n) {
  if (n > g_conductor_cap.load(std::memory_order_relaxed)) {
    throw DomainError("conductor overflow: " + std::to_string(n) + " exceeds cap " +
                      std::to_string(g_conductor_cap.load()));
  }
}

// Reduces poly (any length) modulo Phi_n in place and truncates to phi(n).
void reduce_in_place(int n, std::vector<Rational>& poly) {
  const FieldData& f = field(n);
  const std::size_t phi = static_cast<std::size_t>(f.phi);
  if (poly.size() > static_cast<std::size_t>(n)) {
    // Fold with x^n = 1 first so the division below stays short.
    for (std::size_t i = n; i < poly.size(); ++i) poly[i % n] += poly[i];
    poly.resize(n);
  }
  for (std::size_t i = poly.size(); i-- > phi;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j <= phi; ++j) {
      if (f.poly[j] != 0) poly[i - phi + j] -= c * f.poly[j];
    }
  }
  poly.resize(phi, Rational(0));
}

}  // namespace

int conductor_cap() { return g_conductor_cap.load(); }

void set_conductor_cap(int cap) {
  if (cap < 1 || cap > kHardConductorLimit) {
    throw PreconditionError("conductor cap must lie in [1, " + std::to_string(kHardConductorLimit) +
                            "], got " + std::to_string(cap));
  }
  g_conductor_cap.store(cap);
}

int euler_phi(int n) { return field(n).phi; }

const std::vector<Integer>& cyclotomic_polynomial(int n) { return field(n).poly; }

int lcm_conductor(int a, int b) {
  const long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (l > kHardConductorLimit) {
    throw DomainError("conductor overflow: lcm(" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  check_cap(static_cast<int>(l));
  return static_cast<int>(l);
}

Cyclotomic::Cyclotomic() : conductor_(1), coords_(1) {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coords_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coords_{value} { coords_[0].canonicalize(); }

Cyclotomic::Cyclotomic(int n, std::vector<Rational> coords) : conductor_(n), coords_(std::move(coords)) {
  normalize();
}

void Cyclotomic::normalize() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) return;
  }
  coords_.resize(1);
  conductor_ = 1;
}

Cyclotomic Cyclotomic::zeta(int n, long long k) {
  if (n < 1) throw PreconditionError("zeta order must be positive");
  check_cap(n);
  long long e = k % n;
  if (e < 0) e += n;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return reduce(n, poly);
}

Cyclotomic Cyclotomic::reduce(int n, std::span<const Rational> poly) {
  check_cap(n);
  std::vector<Rational> p(poly.begin(), poly.end());
  for (auto& c : p) c.canonicalize();
  if (p.empty()) p.emplace_back(0);
  reduce_in_place(n, p);
  return Cyclotomic(n, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return conductor_ == 1 && coords_[0] == 1; }

const Rational& Cyclotomic::rational_value() const {
  if (conductor_ != 1) throw DomainError("cyclotomic value " + to_string() + " is not rational");
  return coords_[0];
}

Cyclotomic Cyclotomic::promote(int m) const {
  if (m < 1 || m % conductor_ != 0) {
    throw DomainError("no embedding of Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" +
                      std::to_string(m) + ")");
  }
  check_cap(m);
  if (m == conductor_) return *this;
  const int step = m / conductor_;
  std::vector<Rational> poly(static_cast<std::size_t>(step) * coords_.size(), Rational(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) poly[j * step] = coords_[j];
  reduce_in_place(m, poly);
  Cyclotomic out;
  out.conductor_ = m;
  out.coords_ = std::move(poly);
  return out;  // deliberately not normalized: caller asked for conductor m
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ == o.conductor_) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  } else {
    const int m = lcm_conductor(conductor_, o.conductor_);
    Cyclotomic a = promote(m);
    const Cyclotomic b = o.promote(m);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
    *this = std::move(a);
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  if (o.conductor_ == 1) {
    for (auto& c : coords_) c *= o.coords_[0];
    normalize();
    return *this;
  }
  if (conductor_ == 1) {
    const Rational s = coords_[0];
    *this = o;
    for (auto& c : coords_) c *= s;
    normalize();
    return *this;
  }
  const int m = lcm_conductor(conductor_, o.conductor_);
  const Cyclotomic a = promote(m);
  const Cyclotomic b = o.promote(m);
  std::vector<Rational> prod(a.coords_.size() + b.coords_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) {
      if (sgn(b.coords_[j]) != 0) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  reduce_in_place(m, prod);
  conductor_ = m;
  coords_ = std::move(prod);
  normalize();
  return *this;
}

void Cyclotomic::fma(Cyclotomic& acc, const Cyclotomic& b, const Cyclotomic& c) {
  if (acc.conductor_ == 1 && b.conductor_ == 1 && c.conductor_ == 1) {
    acc.coords_[0] += b.coords_[0] * c.coords_[0];
    return;
  }
  acc += b * c;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inversion of zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coords_[0]);
  // Solve (a * x) = 1 for the coordinates of x: column j of the system is
  // a * zeta^j.
  const std::size_t phi = coords_.size();
  std::vector<std::vector<Rational>> mat(phi, std::vector<Rational>(phi + 1, Rational(0)));
  for (std::size_t j = 0; j < phi; ++j) {
    std::vector<Rational> poly(phi + j, Rational(0));
    for (std::size_t i = 0; i < phi; ++i) poly[i + j] = coords_[i];
    reduce_in_place(conductor_, poly);
    for (std::size_t i = 0; i < phi; ++i) mat[i][j] = poly[i];
  }
  mat[0][phi] = 1;
  for (std::size_t col = 0; col < phi; ++col) {
    std::size_t piv = col;
    while (piv < phi && sgn(mat[piv][col]) == 0) ++piv;
    if (piv == phi) throw DomainError("singular cyclotomic multiplication matrix");
    std::swap(mat[piv], mat[col]);
    const Rational p = mat[col][col];
    for (std::size_t k = col; k <= phi; ++k) mat[col][k] /= p;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == col || sgn(mat[r][col]) == 0) continue;
      const Rational f = mat[r][col];
      for (std::size_t k = col; k <= phi; ++k) mat[r][k] -= f * mat[col][k];
    }
  }
  std::vector<Rational> x(phi);
  for (std::size_t i = 0; i < phi; ++i) x[i] = mat[i][phi];
  return Cyclotomic(conductor_, std::move(x));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1L);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
  // Both normalized: a rational value never equals a non-rational one.
  if (a.conductor_ == 1 || b.conductor_ == 1) return false;
  const int m = lcm_conductor(a.conductor_, b.conductor_);
  return a.promote(m).coords_ == b.promote(m).coords_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (sgn(coords_[j]) == 0) continue;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / conductor_;
    acc += coords_[j].get_d() * std::polar(1.0, ang);
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return coords_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (sgn(coords_[j]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coords_[j].get_str() << ")";
    if (j > 0) os << "*z" << conductor_ << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace qmock::exactring
