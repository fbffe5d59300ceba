// pybind11 bindings: the main operations, with rationals and rational
// functions crossing the boundary as strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "translatio/errors.hpp"
#include "translatio/finestructure.hpp"
#include "translatio/repweights.hpp"
#include "translatio/sl2oracle.hpp"
#include "translatio/triangle.hpp"

namespace py = pybind11;
using namespace translatio;

namespace {

Weight parse_weight(const RootSystem& rs, const std::string& s) {
  Weight w = weight_from_string(s);
  if (w.rank() != rs.rank()) throw ConfigError("weight arity does not match the rank");
  return w;
}

WeylElement parse_word(const RootSystem& rs, const std::string& text) {
  if (text == "e" || text.empty()) return WeylElement::identity(rs.rank());
  if (text == "w0") return rs.longest_element();
  std::vector<int> word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 's') throw ConfigError("bad Weyl word token '" + tok + "'");
    int idx = std::atoi(tok.c_str() + 1);
    if (idx < 1 || idx > rs.rank()) throw ConfigError("reflection index out of range in '" + tok + "'");
    word.push_back(idx - 1);
  }
  return rs.element_from_word(word);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact triangle functions for translation functors";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init<const std::string&>(), py::arg("label"))
      .def_property_readonly("label", &RootSystem::label)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("num_positive_roots",
                             [](const RootSystem& rs) { return rs.positive_roots().size(); })
      .def("weyl_order", &RootSystem::weyl_order)
      .def("positive_roots",
           [](const RootSystem& rs) {
             std::vector<std::pair<std::vector<long>, std::vector<long>>> out;
             for (const auto& alpha : rs.positive_roots()) out.emplace_back(alpha.root_coords, alpha.coroot_coords);
             return out;
           })
      .def("is_generic", [](const RootSystem& rs, const std::string& tau) {
        return rs.is_generic(parse_weight(rs, tau));
      });

  m.def("weyl_dimension", [](const std::string& system, const std::string& nu) {
    RootSystem rs(system);
    return weyl_dimension(rs, parse_weight(rs, nu));
  });

  m.def("weight_multiset", [](const std::string& system, const std::string& nu) {
    RootSystem rs(system);
    WeightMultiset ms = weight_multiset(rs, parse_weight(rs, nu));
    std::vector<std::pair<std::string, long>> out;
    for (const auto& [mu, mult] : ms.entries) out.emplace_back(weight_to_string(mu), mult);
    return out;
  });

  m.def("delta_nu", [](const std::string& system, const std::string& nu) {
    RootSystem rs(system);
    return fr_to_string(delta_nu(rs, parse_weight(rs, nu)), &rs);
  });

  m.def(
      "triangle_delta",
      [](const std::string& system, const std::string& mu, const std::string& nu, const std::string& x,
         const std::string& format) {
        RootSystem rs(system);
        TriangleSpec spec{parse_weight(rs, mu), parse_weight(rs, nu), parse_word(rs, x)};
        FormStyle style = format == "latex" ? FormStyle::Latex : FormStyle::Pretty;
        return fr_to_string(delta_closed(rs, spec), &rs, style);
      },
      py::arg("system"), py::arg("mu"), py::arg("nu"), py::arg("x") = "w0", py::arg("format") = "pretty");

  m.def("bernstein_delta", [](const std::string& system, const std::string& nu) {
    RootSystem rs(system);
    return fr_to_string(bernstein_delta(rs, parse_weight(rs, nu)), &rs);
  });

  m.def(
      "check_identity",
      [](const std::string& system, const std::string& identity, long bound, long trials,
         unsigned long long seed) {
        RootSystem rs(system);
        py::list out;
        for (const auto& report : check_identity(rs, identity, bound, trials, seed)) {
          py::dict d;
          d["identity"] = report.identity;
          d["instances"] = report.instances;
          d["failures"] = report.failures.size();
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("system"), py::arg("identity") = "all", py::arg("bound") = 2, py::arg("trials") = 50,
      py::arg("seed") = 0);

  m.def("oracle_delta", [](int m_, int n_) { return sl2::delta_direct(m_, n_).to_string(); });
  m.def("oracle_matches_closed", [](int m_, int n_) {
    RootSystem a1("A1");
    FactoredRational closed = delta_closed(a1, {Weight({Rat(m_)}), Weight({Rat(n_)}), a1.simple_reflection(0)});
    return sl2::delta_direct(m_, n_) == sl2::to_ratfunc(closed);
  });
  m.def("oracle_trace", [](int n_, bool at_w0) { return sl2::trace_direct(n_, at_w0).to_string(); },
        py::arg("n"), py::arg("at_w0") = true);
  m.def("verify_pole_theorem", [](int n_) { return sl2::verify_pole_theorem(n_); });

  m.attr("__version__") = "0.1.0";
}
