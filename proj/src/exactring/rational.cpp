#include "qmock/exactring/rational.hpp"

#include <cctype>

#include "qmock/error.hpp"

namespace qmock::exactring {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw PreconditionError("malformed rational: '" + std::string(text) + "'");
  }
  auto strip = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
  Integer n(strip(num));
  Integer d(strip(den));
  if (d == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) {
    throw DomainError("rational " + r.get_str() + " is not a 64-bit integer");
  }
  return r.get_num().get_si();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace qmock::exactring
