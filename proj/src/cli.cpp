#include "newtonkit/cli.hpp"

#include "newtonkit/hecke.hpp"
#include "newtonkit/kottwitz.hpp"
#include "newtonkit/muordinary.hpp"
#include "newtonkit/rootdata.hpp"
#include "newtonkit/serialize.hpp"
#include "oracles.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace newtonkit::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::optional<int> rank;
  std::string sigma = "identity";
  std::string labeling = "bourbaki";
  std::string node;
  std::string mu;
  bool exclude_top = false;
  bool verify = false;
  std::string x;
  std::string y;
  std::string nu;
  std::optional<std::size_t> dim;
  std::string slopes;
  std::string mults;
  bool polarized = false;
  std::optional<std::size_t> split;
  std::optional<std::int64_t> dh;
  std::optional<std::size_t> index;
  std::string t;
  std::string full;
  std::string s;
  std::int64_t p = 3;
  std::string group;
  std::optional<std::int64_t> w;
  bool table = false;
  bool timing = false;
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("\"" + item + "\" is not an integer");
    }
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

std::size_t max_rank() {
  const char* env = std::getenv("NEWTONKIT_MAX_RANK");
  if (env == nullptr || *env == '\0') return 8;
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("NEWTONKIT_MAX_RANK must be a positive integer, got \"") + env + "\"");
  }
}

RootDatum datum_from(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  if (o.labeling != "bourbaki" && o.labeling != "paper") throw UsageError("--labeling must be bourbaki or paper");
  auto d = build_datum(o.type, o.rank, SigmaSpec::parse(o.sigma));
  if (d.rank() > max_rank()) {
    throw DomainError("rank " + std::to_string(d.rank()) + " exceeds NEWTONKIT_MAX_RANK=" + std::to_string(max_rank()));
  }
  return d;
}

// The alternative labels differ from Bourbaki only at the second fork node of D_n.
std::string node_label(const RootDatum& d, std::size_t i, const std::string& labeling) {
  const auto& type = d.factors().front().type;
  if (labeling == "paper" && type.family == Family::D && i + 1 == static_cast<std::size_t>(type.rank)) {
    return std::to_string(type.rank - 1) + "+";
  }
  return std::to_string(i + 1);
}

std::size_t parse_node(const RootDatum& d, const std::string& text, const std::string& labeling) {
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (node_label(d, i, labeling) == text) return i;
  }
  if (labeling == "paper") {
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (std::to_string(i + 1) == text) return i;
    }
  }
  throw DomainError("node \"" + text + "\" is not a " + labeling + " label of " + d.label());
}

Cocharacter mu_from(const RootDatum& d, const Options& o) {
  if (o.node.empty() == o.mu.empty()) throw UsageError("give exactly one of --node and --mu");
  if (!o.mu.empty()) return parse_rational_list(o.mu);
  return d.fundamental_coweights()[parse_node(d, o.node, o.labeling)];
}

SlopeProfile profile_from(const Options& o) {
  if (o.slopes.empty() || o.mults.empty()) throw UsageError("--slopes and --mults are required");
  return SlopeProfile(parse_rational_list(o.slopes), parse_int_list(o.mults), o.polarized);
}

Json matrix_json(const std::vector<RatVec>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

Json element_json(const KottwitzElement& e) {
  std::vector<std::size_t> j;
  for (auto i : e.zero_pairings) j.push_back(i + 1);
  return Json{{"nu", to_json(e.nu)}, {"c", to_json(e.c)}, {"J", j}};
}

Json degrees_json(const SlopeProfile& p) {
  const auto dd = degrees(p);
  return Json{{"profile", to_json(p)},
              {"heights", p.heights()},
              {"d", to_json(dd.d)},
              {"delta", dd.delta ? to_json(*dd.delta) : Json(nullptr)}};
}

struct Outcome {
  Json payload;
  bool verified = true;
};

Outcome cmd_datum(const Options& o) {
  const auto d = datum_from(o);
  Json payload{{"datum", to_json(d)},
               {"label", d.label()},
               {"ambient_dim", d.ambient_dim()},
               {"cartan", d.cartan()},
               {"simple_roots", matrix_json(d.simple_roots())},
               {"simple_coroots", matrix_json(d.simple_coroots())},
               {"fundamental_weights", matrix_json(d.fundamental_weights())},
               {"fundamental_coweights", matrix_json(d.fundamental_coweights())},
               {"positive_root_count", d.positive_roots().size()}};
  if (d.indecomposable()) {
    const auto hr = highest_root(d);
    payload["highest_root"] = Json{{"root", to_json(hr.root)}, {"coefficients", hr.coefficients}};
    Json special = Json::array();
    for (auto i : special_roots(d)) special.push_back(node_label(d, i, o.labeling));
    payload["special_roots"] = special;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < d.rank(); ++i) {
      nodes.push_back(Json{{"bourbaki", node_label(d, i, "bourbaki")}, {"paper", node_label(d, i, "paper")}});
    }
    Json labeling{{"scheme", o.labeling}, {"nodes", nodes}};
    const auto& type = d.factors().front().type;
    if (type.family == Family::E && type.rank == 7) {
      labeling["note"] = "the coefficient-one node of E7 is 7 in Bourbaki labels; some references call it alpha_1";
    }
    payload["labeling"] = labeling;
  }
  return {payload};
}

Outcome cmd_bgmu(const Options& o) {
  const auto d = datum_from(o);
  const auto ks = enumerate_bgmu(d, mu_from(d, o));
  Outcome out{to_json(ks)};
  out.payload["datum"] = to_json(d);
  out.payload["count"] = ks.elements.size();
  if (o.verify) {
    const auto grid = oracles::grid_enumerate_bgmu(d, ks.mubar, oracles::default_grid_spec(d, ks.mubar));
    std::set<RatVec, LexLess> fast;
    for (const auto& e : ks.elements) fast.insert(e.nu);
    out.verified = fast == grid;
    out.payload["verify"] = Json{{"oracle", "grid_enumerate_bgmu"}, {"oracle_count", grid.size()}, {"agrees", out.verified}};
  }
  return out;
}

Outcome cmd_maximal(const Options& o) {
  const auto d = datum_from(o);
  const auto ks = enumerate_bgmu(d, mu_from(d, o));
  Json maxima = Json::array();
  for (const auto& e : maximal_elements(d, ks, o.exclude_top)) maxima.push_back(element_json(e));
  return {Json{{"mu", to_json(ks.mu)},
               {"mubar", to_json(ks.mubar)},
               {"exclude_top", o.exclude_top},
               {"maximal", maxima},
               {"datum", to_json(d)}}};
}

Outcome cmd_leq(const Options& o) {
  const auto d = datum_from(o);
  if (o.x.empty() || o.y.empty()) throw UsageError("--x and --y are required");
  const auto x = parse_rational_list(o.x);
  const auto y = parse_rational_list(o.y);
  d.check_dim(x);
  d.check_dim(y);
  const RatVec diff = sub(y, x);
  Outcome out{Json{{"leq", newton_leq(d, x, y)},
                   {"c", to_json(d.coroot_coefficients(diff))},
                   {"central_difference", to_json(d.central_part(diff))}}};
  if (o.verify) {
    const bool hull = oracles::convex_hull_membership(d, x, y);
    out.verified = hull == out.payload["leq"].get<bool>();
    out.payload["verify"] = Json{{"oracle", "convex_hull_membership"}, {"oracle_value", hull}, {"agrees", out.verified}};
  }
  return out;
}

Outcome cmd_slopes(const Options& o) {
  if (o.nu.empty()) throw UsageError("--nu is required");
  const auto nu = parse_rational_list(o.nu);
  const auto p = profile_from_newton(nu, o.dim.value_or(2 * nu.size()));
  Json payload = to_json(p);
  payload["heights"] = p.heights();
  return {payload};
}

Outcome cmd_degrees(const Options& o) {
  const auto p = profile_from(o);
  Outcome out{degrees_json(p)};
  if (o.split.has_value() != o.dh.has_value()) throw UsageError("--split and --dh go together");
  if (o.split) {
    if (*o.split < 1) throw DomainError("--split is 1-based");
    const auto sp = next_to_max_profile(p, *o.split - 1, *o.dh);
    Json split = degrees_json(sp.profile);
    Json modified = Json::array();
    for (const auto& m : modified_degrees(sp)) {
      modified.push_back(Json{{"height", m.height}, {"value", to_json(m.value)}, {"label", m.label}});
    }
    split["modified_degrees"] = modified;
    out.payload["split"] = split;
  }
  if (o.verify) {
    const auto fold = oracles::fold_degrees(p);
    const auto dd = degrees(p);
    out.verified = fold.d == dd.d && fold.delta == dd.delta && fold.heights == p.heights();
    out.payload["verify"] = Json{{"oracle", "fold_degrees"}, {"agrees", out.verified}};
  }
  return out;
}

Outcome cmd_uniqueness(const Options& o) {
  const auto p = profile_from(o);
  const auto dd = degrees(p);
  std::vector<std::size_t> indices;
  if (o.index) {
    if (*o.index < 1) throw DomainError("--index is 1-based");
    indices.push_back(*o.index - 1);
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) indices.push_back(i);
  }
  Outcome out;
  Json results = Json::array();
  bool all = true;
  for (auto i : indices) {
    const auto u = check_uniqueness(dd, i);
    all = all && u.holds;
    Json row{{"i", i + 1},
             {"height", p.heights().at(i)},
             {"holds", u.holds},
             {"violating_height", u.violating_height ? Json(*u.violating_height) : Json(nullptr)}};
    if (o.verify) {
      const bool brute = oracles::uniqueness_bruteforce(p, i);
      row["oracle"] = brute;
      out.verified = out.verified && brute == u.holds;
    }
    results.push_back(row);
  }
  out.payload = Json{{"results", results}, {"all_hold", all}, {"delta", dd.delta ? to_json(*dd.delta) : Json(nullptr)}};
  return out;
}

HeckeValuation valuation_from(const Options& o) {
  if (o.t.empty() == o.full.empty()) throw UsageError("give exactly one of --t and --full");
  if (!o.t.empty()) {
    if (o.s.empty()) throw UsageError("--s is required with --t");
    return HeckeValuation::from_torus(parse_rational_list(o.t), parse_rational(o.s), o.p);
  }
  return HeckeValuation::from_full(parse_rational_list(o.full), o.s.empty() ? Rational(0) : parse_rational(o.s), o.p);
}

Json roots_json(const std::vector<TorusRoot>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(std::vector<std::size_t>{r.a + 1, r.b + 1});
  return out;
}

Outcome cmd_mepsilon(const Options& o) {
  const auto eps = valuation_from(o);
  const std::string group = o.group.empty() ? (o.t.empty() ? "gl" : "sp") : o.group;
  std::vector<TorusRoot> ambient;
  if (group == "gl") {
    ambient = gl_roots(eps.dim());
  } else if (group == "sp") {
    if (eps.dim() % 2 != 0) throw DomainError("symplectic valuations need an even number of entries");
    ambient = symplectic_roots(eps.dim() / 2);
  } else {
    throw UsageError("--group must be gl or sp");
  }
  const RatVec x = o.x.empty() ? eps.full() : parse_rational_list(o.x);
  const auto roots = parabolic_roots(x, ambient);
  const Rational v = m_epsilon_valuation(eps, roots);
  Outcome out{Json{{"valuation", to_json(eps)},
                   {"group", group},
                   {"roots", roots_json(roots)},
                   {"m_epsilon_valuation", to_json(v)},
                   {"x_epsilon_valuation", to_json(x_epsilon_valuation(eps, roots))},
                   {"m_epsilon", is_integer(v) && v >= 0 ? Json(materialize(eps.p(), v).get_str()) : Json(nullptr)}}};
  if (o.verify) {
    std::optional<oracles::UnipotentShape> shape;
    for (auto candidate : {oracles::UnipotentShape::gl2_upper, oracles::UnipotentShape::gl3_upper,
                           oracles::UnipotentShape::sp4_siegel_lower}) {
      auto expected = oracles::shape_roots(candidate);
      auto got = roots;
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      if (oracles::shape_size(candidate) == eps.dim() && expected == got) shape = candidate;
    }
    if (!shape) throw DomainError("no brute-force shape matches this parabolic");
    if (!is_integer(v)) throw DomainError("brute force needs integral valuations");
    Rational top = 0;
    for (const auto& r : roots) top = std::max(top, r.pair(eps));
    const auto brute = oracles::coset_count_bruteforce(eps, *shape, eps.p(), static_cast<int>(top.get_num().get_si()) + 1);
    out.verified = materialize(eps.p(), v) == brute;
    out.payload["verify"] = Json{{"oracle", "coset_count_bruteforce"}, {"oracle_value", brute}, {"agrees", out.verified}};
  }
  return out;
}

Outcome cmd_lambdag(const Options& o) {
  if (!o.slopes.empty()) {
    const auto p = profile_from(o);
    const auto dd = degrees(p);
    const auto dim = static_cast<std::size_t>(p.total_height());
    FiltrationSteps steps;
    const auto h = p.heights();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) steps.emplace_back(h[i], dd.d[i]);
    if (steps.empty()) throw DomainError("a single-slope profile has no canonical filtration steps");
    if (dim % 2 != 0) throw DomainError("total height must be even");
    RatVec x = zeros(dim);
    for (std::size_t j = 0; j < dim / 2; ++j) x[j] = 1;
    const auto roots = parabolic_roots(x, symplectic_roots(dim / 2));
    Json rows = Json::array();
    for (const auto& [hi, di] : steps) {
      const auto e = epsilon_prime_valuations(hi, di, HeckeValuation::filtration_element(hi, dim, o.p));
      rows.push_back(Json{{"height", hi},
                          {"degree", to_json(di)},
                          {"full", to_json(e.full())},
                          {"lambda_g_valuation", to_json(lambda_g_valuation(e))},
                          {"m_epsilon_valuation", to_json(m_epsilon_valuation(e, roots))}});
    }
    return {Json{{"profile", to_json(p)},
                 {"steps", rows},
                 {"n_g", to_json(n_g_constant(steps, dim, o.p))},
                 {"c_valuation", to_json(c_constant(steps, dim, roots, o.p))}}};
  }
  const auto eps = valuation_from(o);
  return {Json{{"valuation", to_json(eps)}, {"lambda_g_valuation", to_json(lambda_g_valuation(eps))}}};
}

Outcome cmd_hasse(const Options& o) {
  if (!o.w) throw UsageError("--w is required");
  const auto value = hasse_number(*o.w, o.p);
  Outcome out{Json{{"w", *o.w}, {"p", o.p}, {"value", value}}};
  if (o.verify) {
    const auto exponent = oracles::field_unit_exponent(o.p, static_cast<int>(*o.w));
    out.verified = exponent == value;
    out.payload["verify"] = Json{{"oracle", "field_unit_exponent"}, {"oracle_value", exponent}, {"agrees", out.verified}};
  }
  return out;
}

Outcome cmd_verify_all(const Options&) {
  Outcome out;
  Json checks = Json::array();
  for (const auto& c : verify::run_all_checks()) {
    out.verified = out.verified && c.passed;
    checks.push_back(Json{{"criterion", c.criterion},
                          {"name", c.name},
                          {"passed", c.passed},
                          {"cases", c.cases},
                          {"detail", c.detail},
                          {"note", c.note}});
  }
  out.payload = Json{{"checks", checks}, {"passed", out.verified}};
  return out;
}

// Table rendering.

std::string cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + cell(j[i]);
    return s + ")";
  }
  if (j.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      s += (first ? "" : ", ") + k + ": " + cell(v);
      first = false;
    }
    return s + "}";
  }
  return j.dump();
}

void render_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void render_table(std::ostream& out, const Json& result) {
  std::vector<std::vector<std::string>> scalars{{"status", cell(result["status"])}};
  std::vector<std::pair<std::string, Json>> tables;
  for (const auto& [k, v] : result["payload"].items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      tables.emplace_back(k, v);
    } else {
      scalars.push_back({k, cell(v)});
    }
  }
  if (result.contains("elapsed_ms")) scalars.push_back({"elapsed_ms", cell(result["elapsed_ms"])});
  render_rows(out, scalars);
  for (const auto& [name, rows] : tables) {
    out << "\n" << name << "\n";
    std::vector<std::string> header;
    for (const auto& row : rows) {
      for (const auto& [k, v] : row.items()) {
        if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
      }
    }
    std::vector<std::vector<std::string>> body{header};
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (const auto& k : header) line.push_back(row.contains(k) ? cell(row[k]) : "");
      body.push_back(std::move(line));
    }
    render_rows(out, body);
  }
}

// Expands --in FILE into --key=value arguments for options the command line
// does not already set.
std::vector<std::string> expand_input_file(const std::vector<std::string>& args, CLI::App& app) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--in") {
      if (i + 1 == args.size()) throw UsageError("--in needs a file name");
      path = args[++i];
    } else if (args[i].rfind("--in=", 0) == 0) {
      path = args[i].substr(5);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;

  CLI::App* sub = nullptr;
  for (const auto& a : rest) {
    if (a.empty() || a.front() == '-') continue;
    for (auto* candidate : app.get_subcommands([](CLI::App*) { return true; })) {
      if (candidate->get_name() == a) sub = candidate;
    }
    break;
  }
  if (sub == nullptr) throw UsageError("--in needs a subcommand");

  std::ifstream file(*path);
  if (!file) throw DomainError("cannot read input file " + *path);
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("invalid input JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("invalid input JSON: top level must be an object");

  for (const auto& [key, value] : doc.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (sub->get_option_no_throw(flag) == nullptr) {
      throw DomainError("invalid input JSON: field \"" + key + "\" is not an input of " + sub->get_name());
    }
    const bool given = std::any_of(rest.begin(), rest.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) rest.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string() && !value[i].is_number()) {
          throw DomainError("invalid input JSON: field \"" + key + "\" must hold scalars");
        }
        joined += (i ? "," : "") + (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
      }
      rest.push_back(flag + "=" + joined);
    } else if (value.is_string()) {
      rest.push_back(flag + "=" + value.get<std::string>());
    } else if (value.is_number()) {
      rest.push_back(flag + "=" + value.dump());
    } else {
      throw DomainError("invalid input JSON: field \"" + key + "\" has an unsupported type");
    }
  }
  return rest;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact root-datum, Kottwitz-set, slope and Hecke-valuation computations", "newtonkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--table", o.table, "Print an aligned table instead of JSON");
  app.add_flag("--timing", o.timing, "Include elapsed_ms in the result");
  std::string in_path;
  app.add_option("--in", in_path, "Read inputs from a JSON object whose keys are option names");

  const auto datum_opts = [&](CLI::App* s) {
    s->add_option("--type", o.type, "Cartan type letter, or a label such as E6")->required();
    s->add_option("--rank", o.rank, "Rank");
    s->add_option("--sigma", o.sigma, "identity, flip, or a 1-based permutation such as 3,2,1");
    s->add_option("--labeling", o.labeling, "Node labels: bourbaki (default) or paper");
  };
  const auto mu_opts = [&](CLI::App* s) {
    s->add_option("--node", o.node, "Use the fundamental coweight at this node");
    s->add_option("--mu", o.mu, "Cocharacter as a comma-separated list of rationals");
  };
  const auto profile_opts = [&](CLI::App* s) {
    s->add_option("--slopes", o.slopes, "Descending slopes, comma-separated");
    s->add_option("--mults", o.mults, "Multiplicities, comma-separated");
    s->add_flag("--polarized", o.polarized, "Require lambda_i + lambda_{r+1-i} = 1");
  };
  const auto valuation_opts = [&](CLI::App* s) {
    s->add_option("--t", o.t, "First-block valuations t_1..t_n");
    s->add_option("--full", o.full, "All diagonal valuations");
    s->add_option("--s", o.s, "Similitude valuation");
    s->add_option("--p", o.p, "Odd prime (default 3)");
  };

  auto* datum = app.add_subcommand("datum", "Cartan data, weights, coweights and special roots");
  datum_opts(datum);
  auto* bgmu = app.add_subcommand("bgmu", "Enumerate B(G, mu)");
  datum_opts(bgmu);
  mu_opts(bgmu);
  bgmu->add_flag("--verify", o.verify, "Cross-check with the grid oracle (rank <= 3)");
  auto* maximal = app.add_subcommand("maximal", "Maximal elements of B(G, mu)");
  datum_opts(maximal);
  mu_opts(maximal);
  maximal->add_flag("--exclude-top", o.exclude_top, "Remove mubar before taking maxima");
  auto* leq = app.add_subcommand("leq", "Newton order x <= y");
  datum_opts(leq);
  leq->add_option("--x", o.x, "Dominant cocharacter x");
  leq->add_option("--y", o.y, "Dominant cocharacter y");
  leq->add_flag("--verify", o.verify, "Cross-check with the convex-hull oracle (rank <= 3)");
  auto* slopes = app.add_subcommand("slopes", "Slope profile of a Newton point");
  slopes->add_option("--nu", o.nu, "Newton point, comma-separated");
  slopes->add_option("--dim", o.dim, "Dimension of the standard representation (default 2 * len(nu))");
  auto* degrees_cmd = app.add_subcommand("degrees", "Degrees d_i and delta, optionally of a split profile");
  profile_opts(degrees_cmd);
  degrees_cmd->add_option("--split", o.split, "1-based index of the slope pair to split");
  degrees_cmd->add_option("--dh", o.dh, "Height moved into the new slope");
  degrees_cmd->add_flag("--verify", o.verify, "Cross-check with the fold oracle");
  auto* uniq = app.add_subcommand("uniqueness", "Canonical-subgroup uniqueness margin");
  profile_opts(uniq);
  uniq->add_option("--index", o.index, "1-based index (default: all)");
  uniq->add_flag("--verify", o.verify, "Cross-check with the brute-force polygon");
  auto* meps = app.add_subcommand("mepsilon", "Valuation of the unipotent index m_eps");
  valuation_opts(meps);
  meps->add_option("--group", o.group, "gl or sp (default sp with --t, gl with --full)");
  meps->add_option("--x", o.x, "Cocharacter defining the parabolic (default: the valuation vector)");
  meps->add_flag("--verify", o.verify, "Cross-check with the coset-count oracle");
  auto* lambdag = app.add_subcommand("lambdag", "lambda_G valuation, or n_G and C of a slope profile");
  valuation_opts(lambdag);
  profile_opts(lambdag);
  auto* hasse = app.add_subcommand("hasse", "Hasse number p^w - 1");
  hasse->add_option("--w", o.w, "Splitting degree");
  hasse->add_option("--p", o.p, "Odd prime (default 3)");
  hasse->add_flag("--verify", o.verify, "Cross-check with the unit-group exponent (p^w <= 243)");
  auto* verify_all = app.add_subcommand("verify-all", "Run every oracle cross-check");

  const std::map<CLI::App*, Outcome (*)(const Options&)> handlers{
      {datum, cmd_datum},      {bgmu, cmd_bgmu},       {maximal, cmd_maximal}, {leq, cmd_leq},
      {slopes, cmd_slopes},    {degrees_cmd, cmd_degrees}, {uniq, cmd_uniqueness}, {meps, cmd_mepsilon},
      {lambdag, cmd_lambdag},  {hasse, cmd_hasse},     {verify_all, cmd_verify_all}};

  std::string command = "unknown";
  const auto emit = [&](const std::string& status, const Json& payload, std::optional<std::int64_t> elapsed) {
    Json result{{"schema", "newtonkit." + command + ".v1"}, {"status", status}, {"payload", payload}};
    if (elapsed) result["elapsed_ms"] = *elapsed;
    if (o.table) {
      render_table(out, result);
    } else {
      out << result.dump(2) << "\n";
    }
  };

  try {
    auto expanded = expand_input_file(args, app);
    std::reverse(expanded.begin(), expanded.end());
    app.parse(expanded);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    emit("error", Json{{"error", e.what()}}, std::nullopt);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    command = sub->get_name();
    try {
      const auto result = handler(o);
      std::optional<std::int64_t> elapsed;
      if (o.timing) {
        elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      }
      emit(result.verified ? "ok" : "error", result.payload, elapsed);
      if (!result.verified) err << "error: oracle disagreement\n";
      return result.verified ? 0 : 2;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return 1;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      emit("error", Json{{"error", e.what()}}, std::nullopt);
      return 2;
    }
  }
  err << "usage error: no subcommand\n";
  return 1;
}

}  // namespace newtonkit::cli
