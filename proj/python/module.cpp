#include "newtonkit/cli.hpp"
#include "newtonkit/hecke.hpp"
#include "newtonkit/kottwitz.hpp"
#include "newtonkit/muordinary.hpp"
#include "newtonkit/rootdata.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace newtonkit;

// Rationals cross the boundary as fractions.Fraction. int and "p/q" strings
// are accepted on input.
namespace pybind11::detail {

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = parse_rational(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      if (py::isinstance<py::int_>(src)) {
        value = mpq_class(py::str(src).cast<std::string>());
        return true;
      }
      if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator") && !py::isinstance<py::float_>(src)) {
        std::string num = py::str(src.attr("numerator")).cast<std::string>();
        std::string den = py::str(src.attr("denominator")).cast<std::string>();
        value = mpq_class(num + "/" + den);
        value.canonicalize();
        return true;
      }
    } catch (const DomainError&) {
      return false;
    } catch (const py::error_already_set&) {
      PyErr_Clear();
      return false;
    }
    return false;
  }

  static handle cast(const mpq_class& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ num(py::str(r.get_num().get_str()));
    py::int_ den(py::str(r.get_den().get_str()));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

py::dict element_dict(const KottwitzElement& e) {
  py::dict d;
  d["nu"] = e.nu;
  d["c"] = e.c;
  d["J"] = e.zero_pairings;
  return d;
}

std::vector<TorusRoot> resolve_roots(const RatVec& full, const std::optional<RatVec>& x, const std::string& group) {
  RatVec dir = x.value_or(full);
  if (group == "gl") return parabolic_roots(dir, gl_roots(full.size()));
  if (group == "sp") {
    if (full.size() % 2 != 0) throw DomainError("the symplectic group needs an even number of entries");
    return parabolic_roots(dir, symplectic_roots(full.size() / 2));
  }
  throw DomainError("group must be 'gl' or 'sp'");
}

}  // namespace

PYBIND11_MODULE(_newtonkit, m) {
  m.doc() = "Exact root-datum, Kottwitz-set, slope and Hecke-valuation computations.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<RootDatum>(m, "RootDatum")
      .def_property_readonly("label", &RootDatum::label)
      .def_property_readonly("rank", &RootDatum::rank)
      .def_property_readonly("ambient_dim", &RootDatum::ambient_dim)
      .def_property_readonly("simple_roots", &RootDatum::simple_roots)
      .def_property_readonly("simple_coroots", &RootDatum::simple_coroots)
      .def_property_readonly("cartan", &RootDatum::cartan)
      .def_property_readonly("sigma", &RootDatum::sigma)
      .def_property_readonly("positive_roots", &RootDatum::positive_roots)
      .def_property_readonly("fundamental_weights", &RootDatum::fundamental_weights)
      .def_property_readonly("fundamental_coweights", &RootDatum::fundamental_coweights)
      .def("coroot_coefficients", [](const RootDatum& d, const RatVec& v) { return d.coroot_coefficients(v); })
      .def("__repr__", [](const RootDatum& d) { return "<RootDatum " + d.label() + ">"; });

  m.def(
      "build_datum",
      [](const std::string& type, std::optional<int> rank, const std::string& sigma) {
        return build_datum(type, rank, SigmaSpec::parse(sigma));
      },
      py::arg("type"), py::arg("rank") = py::none(), py::arg("sigma") = "identity");
  m.def("product", &product, py::arg("parts"));
  m.def(
      "highest_root", [](const RootDatum& d) { return highest_root(d).root; }, py::arg("datum"));
  m.def("special_roots", &special_roots, py::arg("datum"), "0-based nodes with highest-root coefficient 1.");
  m.def("is_dominant", [](const RootDatum& d, const RatVec& v) { return is_dominant(d, v); });
  m.def("dominant_representative", &dominant_representative, py::arg("datum"), py::arg("v"));

  m.def("galois_average", &galois_average, py::arg("datum"), py::arg("mu"));
  m.def(
      "is_in_bgmu",
      [](const RootDatum& d, const RatVec& nu, const RatVec& mubar) {
        Membership r = is_in_bgmu(d, nu, mubar);
        py::dict out;
        out["member"] = r.member;
        out["c"] = r.c;
        out["J"] = r.zero_pairings;
        out["reason"] = r.reason;
        return out;
      },
      py::arg("datum"), py::arg("nu"), py::arg("mubar"));
  m.def(
      "enumerate_bgmu",
      [](const RootDatum& d, const RatVec& mu) {
        py::list out;
        for (const auto& e : enumerate_bgmu(d, mu).elements) out.append(element_dict(e));
        return out;
      },
      py::arg("datum"), py::arg("mu"));
  m.def("newton_leq", &newton_leq, py::arg("datum"), py::arg("x"), py::arg("y"));
  m.def(
      "maximal_elements",
      [](const RootDatum& d, const RatVec& mu, bool exclude_top) {
        py::list out;
        for (const auto& e : maximal_elements(d, enumerate_bgmu(d, mu), exclude_top)) out.append(element_dict(e));
        return out;
      },
      py::arg("datum"), py::arg("mu"), py::arg("exclude_top") = false);
  m.def("minuscule_coweights", &minuscule_coweights, py::arg("datum"));

  py::class_<SlopeProfile>(m, "SlopeProfile")
      .def(py::init<std::vector<Rational>, std::vector<std::int64_t>, bool>(), py::arg("slopes"), py::arg("mults"),
           py::arg("polarized") = false)
      .def_property_readonly("slopes", &SlopeProfile::slopes)
      .def_property_readonly("mults", &SlopeProfile::mults)
      .def_property_readonly("polarized", &SlopeProfile::polarized)
      .def_property_readonly("heights", &SlopeProfile::heights)
      .def_property_readonly("total_height", &SlopeProfile::total_height)
      .def("__eq__", [](const SlopeProfile& a, const SlopeProfile& b) { return a == b; })
      .def("__repr__", [](const SlopeProfile& p) {
        return "<SlopeProfile " + to_string(p.slopes()) + " x " + std::to_string(p.size()) + " parts>";
      });

  m.def("profile_from_newton", &profile_from_newton, py::arg("nu"), py::arg("embedding_dim"));
  m.def(
      "degrees",
      [](const SlopeProfile& p) {
        DegreeData dd = degrees(p);
        py::dict out;
        out["heights"] = p.heights();
        out["d"] = dd.d;
        out["delta"] = dd.delta ? py::cast(*dd.delta) : py::none();
        return out;
      },
      py::arg("profile"));
  m.def("max_degree_bound", &max_degree_bound, py::arg("profile"), py::arg("h"));
  m.def(
      "check_uniqueness", [](const SlopeProfile& p, std::size_t i) { return check_uniqueness(degrees(p), i).holds; },
      py::arg("profile"), py::arg("i"));
  m.def(
      "next_to_max_profile",
      [](const SlopeProfile& p, std::size_t i, std::int64_t dh) { return next_to_max_profile(p, i, dh).profile; },
      py::arg("profile"), py::arg("i"), py::arg("dh"));
  m.def(
      "modified_degrees",
      [](const SlopeProfile& p, std::size_t i, std::int64_t dh) {
        py::list out;
        for (const auto& s : modified_degrees(next_to_max_profile(p, i, dh))) {
          out.append(py::make_tuple(s.height, s.value, s.label));
        }
        return out;
      },
      py::arg("profile"), py::arg("i"), py::arg("dh"));

  m.def(
      "m_epsilon_valuation",
      [](const RatVec& full, const Rational& s, std::int64_t p, std::optional<RatVec> x, const std::string& group) {
        HeckeValuation eps = HeckeValuation::from_full(full, s, p);
        return m_epsilon_valuation(eps, resolve_roots(full, x, group));
      },
      py::arg("full"), py::arg("s"), py::arg("p") = 3, py::arg("x") = py::none(), py::arg("group") = "gl");
  m.def(
      "lambda_g_valuation",
      [](const RatVec& t, const Rational& s, std::int64_t p) {
        return lambda_g_valuation(HeckeValuation::from_torus(t, s, p));
      },
      py::arg("t"), py::arg("s"), py::arg("p") = 3);
  m.def(
      "epsilon_prime",
      [](std::int64_t h, const Rational& deg, std::size_t dim_v, std::int64_t p) {
        return epsilon_prime_valuations(h, deg, HeckeValuation::filtration_element(h, dim_v, p)).full();
      },
      py::arg("h"), py::arg("deg"), py::arg("dim_v"), py::arg("p") = 3);
  m.def("n_g_constant", &n_g_constant, py::arg("steps"), py::arg("dim_v"), py::arg("p") = 3);
  m.def("hasse_number", &hasse_number, py::arg("w"), py::arg("p"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI command line and returns (exit_code, stdout, stderr).");
}
