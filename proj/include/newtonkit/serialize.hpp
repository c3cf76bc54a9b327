#pragma once

#include "newtonkit/hecke.hpp"
#include "newtonkit/kottwitz.hpp"
#include "newtonkit/muordinary.hpp"
#include "newtonkit/rootdata.hpp"

#include <json.hpp>

namespace newtonkit {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(std::span<const Rational> v);
Rational rational_from_json(const Json& j);
RatVec ratvec_from_json(const Json& j);

/// {"type":"C","rank":2,"sigma":[1,2]}; products carry a "factors" array instead.
Json to_json(const RootDatum& d);
RootDatum root_datum_from_json(const Json& j);

/// {"mu":[...],"mubar":[...],"elements":[{"nu":[...],"c":[...],"J":[...]}]},
/// J 1-based.
Json to_json(const KottwitzSet& ks);
KottwitzSet kottwitz_set_from_json(const Json& j);

/// {"slopes":[...],"mults":[...],"polarized":bool}.
Json to_json(const SlopeProfile& p);
SlopeProfile slope_profile_from_json(const Json& j);

/// {"t":[...],"s":"p/q","p":3}, plus "full" when the valuation is not of the
/// symplectic shape (t_1..t_n, s-t_n..s-t_1).
Json to_json(const HeckeValuation& v);
HeckeValuation hecke_valuation_from_json(const Json& j);

}  // namespace newtonkit
