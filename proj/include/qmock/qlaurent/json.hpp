#pragma once

#include <json.hpp>

#include "qmock/qlaurent/localized.hpp"

namespace qmock::qlaurent {

// Domain-tagged exact values:
//   {"domain":"Q","value":"p/q"}
//   {"domain":"Q(zeta_n)","n":n,"coords":["c0","c1",...]}
//   {"domain":"Q[s,1/s]","terms":[{"s":k,"coeff":<scalar>},...]}   (s^2 = w)
nlohmann::json to_json(const Cyclotomic& c);
nlohmann::json to_json(const WLaurent& p);
/// {"denom":D,"order":"p/q"|"inf","terms":[{"exp":e,"coeff":...}]}; exp is
/// the lattice integer, so q^(exp/denom).
nlohmann::json to_json(const QSeries& s);
/// Series JSON plus "den":[{"c":<scalar>,"w_exp":k,"mult":m}].
nlohmann::json to_json(const LocalizedSeries& s);

Cyclotomic cyclotomic_from_json(const nlohmann::json& j);
WLaurent wlaurent_from_json(const nlohmann::json& j);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace qmock::qlaurent
