#include "newtonkit/serialize.hpp"

namespace newtonkit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& zero_based) {
  std::vector<std::size_t> out;
  for (auto i : zero_based) out.push_back(i + 1);
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

RatVec ratvec_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of rationals, got " + j.dump());
  RatVec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json to_json(const RootDatum& d) {
  if (d.indecomposable()) {
    const auto& t = d.factors().front().type;
    return Json{{"type", std::string(1, static_cast<char>(t.family))},
                {"rank", t.rank},
                {"sigma", one_based(d.sigma())}};
  }
  Json factors = Json::array();
  for (const auto& f : d.factors()) {
    std::vector<std::size_t> local;
    for (std::size_t k = 0; k < static_cast<std::size_t>(f.type.rank); ++k) {
      local.push_back(d.sigma()[f.first_node + k] - f.first_node + 1);
    }
    factors.push_back(
        Json{{"type", std::string(1, static_cast<char>(f.type.family))}, {"rank", f.type.rank}, {"sigma", local}});
  }
  return Json{{"factors", factors}};
}

RootDatum root_datum_from_json(const Json& j) {
  if (j.is_object() && j.contains("factors")) {
    std::vector<RootDatum> parts;
    for (const auto& f : field(j, "factors")) parts.push_back(root_datum_from_json(f));
    if (parts.empty()) throw DomainError("\"factors\" is empty");
    return product(parts);
  }
  const auto& type = field(j, "type");
  if (!type.is_string()) throw DomainError("\"type\" must be a string");
  std::optional<int> rank;
  if (j.contains("rank")) {
    if (!j["rank"].is_number_integer()) throw DomainError("\"rank\" must be an integer");
    rank = j["rank"].get<int>();
  }
  SigmaSpec sigma;
  if (j.contains("sigma")) {
    const auto& s = j["sigma"];
    if (s.is_string()) {
      sigma = SigmaSpec::parse(s.get<std::string>());
    } else if (s.is_array()) {
      std::vector<std::size_t> perm;
      for (const auto& x : s) {
        if (!x.is_number_integer() || x.get<long>() < 1) throw DomainError("\"sigma\" entries must be positive integers");
        perm.push_back(x.get<std::size_t>());
      }
      sigma = SigmaSpec::permutation(std::move(perm));
    } else {
      throw DomainError("\"sigma\" must be an array or a string");
    }
  }
  return build_datum(type.get<std::string>(), rank, sigma);
}

Json to_json(const KottwitzSet& ks) {
  Json elements = Json::array();
  for (const auto& e : ks.elements) {
    elements.push_back(Json{{"nu", to_json(e.nu)}, {"c", to_json(e.c)}, {"J", one_based(e.zero_pairings)}});
  }
  return Json{{"mu", to_json(ks.mu)}, {"mubar", to_json(ks.mubar)}, {"elements", elements}};
}

KottwitzSet kottwitz_set_from_json(const Json& j) {
  KottwitzSet ks;
  ks.mu = ratvec_from_json(field(j, "mu"));
  ks.mubar = ratvec_from_json(field(j, "mubar"));
  for (const auto& e : field(j, "elements")) {
    KottwitzElement el;
    el.nu = ratvec_from_json(field(e, "nu"));
    el.c = ratvec_from_json(field(e, "c"));
    for (const auto& x : field(e, "J")) {
      if (!x.is_number_integer() || x.get<long>() < 1) throw DomainError("\"J\" entries must be positive integers");
      el.zero_pairings.push_back(x.get<std::size_t>() - 1);
    }
    ks.elements.push_back(std::move(el));
  }
  return ks;
}

Json to_json(const SlopeProfile& p) {
  return Json{{"slopes", to_json(p.slopes())}, {"mults", p.mults()}, {"polarized", p.polarized()}};
}

SlopeProfile slope_profile_from_json(const Json& j) {
  auto slopes = ratvec_from_json(field(j, "slopes"));
  std::vector<std::int64_t> mults;
  for (const auto& m : field(j, "mults")) {
    if (!m.is_number_integer()) throw DomainError("\"mults\" entries must be integers");
    mults.push_back(m.get<std::int64_t>());
  }
  bool polarized = false;
  if (j.contains("polarized")) {
    if (!j["polarized"].is_boolean()) throw DomainError("\"polarized\" must be a boolean");
    polarized = j["polarized"].get<bool>();
  }
  return SlopeProfile(std::move(slopes), std::move(mults), polarized);
}

Json to_json(const HeckeValuation& v) {
  Json out{{"t", to_json(v.t())}, {"s", to_json(v.s())}, {"p", v.p()}};
  if (!v.symplectic_shape()) out["full"] = to_json(v.full());
  return out;
}

HeckeValuation hecke_valuation_from_json(const Json& j) {
  const auto& p = field(j, "p");
  if (!p.is_number_integer()) throw DomainError("\"p\" must be an integer");
  const Rational s = rational_from_json(field(j, "s"));
  if (j.contains("full")) return HeckeValuation::from_full(ratvec_from_json(j["full"]), s, p.get<std::int64_t>());
  return HeckeValuation::from_torus(ratvec_from_json(field(j, "t")), s, p.get<std::int64_t>());
}

}  // namespace newtonkit
