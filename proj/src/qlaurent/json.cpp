#include "qmock/qlaurent/json.hpp"

#include "qmock/error.hpp"

namespace qmock::qlaurent {

using nlohmann::json;

json to_json(const Cyclotomic& c) {
  if (c.is_rational()) return {{"domain", "Q"}, {"value", c.rational_value().get_str()}};
  json coords = json::array();
  for (const auto& r : c.coords()) coords.push_back(r.get_str());
  return {{"domain", "Q(zeta_n)"}, {"n", c.conductor()}, {"coords", coords}};
}

json to_json(const WLaurent& p) {
  if (p.is_zero()) return to_json(Cyclotomic(0L));
  if (p.is_constant()) return to_json(p.coeff(0));
  json terms = json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back({{"s", k}, {"coeff", to_json(c)}});
  return {{"domain", "Q[s,1/s]"}, {"terms", terms}};
}

json to_json(const QSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"denom", s.denom()},
          {"order", s.is_exact() ? std::string("inf") : from_lattice(s.order(), s.denom()).get_str()},
          {"terms", terms}};
}

json to_json(const LocalizedSeries& s) {
  json out = to_json(s.num());
  json den = json::array();
  for (const auto& [f, m] : s.den()) den.push_back({{"c", to_json(f.c)}, {"w_exp", f.w_exp}, {"mult", m}});
  out["den"] = den;
  return out;
}

Cyclotomic cyclotomic_from_json(const json& j) {
  const std::string domain = j.at("domain").get<std::string>();
  if (domain == "Q") return Cyclotomic(exactring::parse_rational(j.at("value").get<std::string>()));
  if (domain == "Q(zeta_n)") {
    std::vector<Rational> coords;
    for (const auto& c : j.at("coords")) coords.push_back(exactring::parse_rational(c.get<std::string>()));
    return Cyclotomic::reduce(j.at("n").get<int>(), coords);
  }
  throw PreconditionError("not a scalar domain: " + domain);
}

WLaurent wlaurent_from_json(const json& j) {
  if (j.at("domain").get<std::string>() != "Q[s,1/s]") return WLaurent(cyclotomic_from_json(j));
  std::vector<WLaurent::Term> terms;
  for (const auto& t : j.at("terms")) terms.emplace_back(t.at("s").get<int>(), cyclotomic_from_json(t.at("coeff")));
  return WLaurent::from_terms(std::move(terms));
}

QSeries series_from_json(const json& j) {
  const int denom = j.at("denom").get<int>();
  const std::string ord = j.at("order").get<std::string>();
  const std::int64_t order = ord == "inf" ? kExactOrder : to_lattice(exactring::parse_rational(ord), denom);
  std::vector<QSeries::Term> terms;
  for (const auto& t : j.at("terms")) terms.emplace_back(t.at("exp").get<std::int64_t>(), wlaurent_from_json(t.at("coeff")));
  return QSeries::from_terms(std::move(terms), order, denom);
}

}  // namespace qmock::qlaurent
