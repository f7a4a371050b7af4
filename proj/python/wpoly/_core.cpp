#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wpoly/family.hpp"
#include "wpoly/mahler.hpp"
#include "wpoly/twist.hpp"
#include "wpoly/wpoly.hpp"

namespace py = pybind11;
using namespace wpoly;

namespace {

// A family is either a built-in name or a (base, tangle) pair of JSON texts.
struct FamilyArgs {
  ColoredGraph base, tangle;
};

FamilyArgs family_args(const std::optional<std::string>& name,
                       const std::optional<std::string>& base,
                       const std::optional<std::string>& tangle) {
  if (name) {
    if (base || tangle) throw py::value_error("give either name or base/tangle, not both");
    const Family f = builtin_family(*name);
    return {f.base, f.tangle};
  }
  if (!base || !tangle) throw py::value_error("base and tangle are both required");
  return {parse_graph(*base), parse_graph(*tangle)};
}

py::dict form_dict(const FamilyForm& f) {
  py::dict d;
  d["lambda1"] = f.lambda1.to_string();
  d["lambda2"] = f.lambda2.to_string();
  d["coeff1"] = f.coeff1.to_string();
  d["coeff2"] = f.coeff2.to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "WpolyError", PyExc_ValueError);

  m.def("builtin_families", &builtin_family_names);

  m.def(
      "bracket",
      [](const std::string& graph, const std::string& formulation) {
        return kauffman_bracket(parse_graph(graph), parse_formulation(formulation)).to_string();
      },
      py::arg("graph"), py::arg("formulation") = "subset",
      "Bracket of a colored graph given as JSON text.");

  m.def(
      "jones",
      [](const std::string& bracket, int writhe) {
        return jones(LaurentPoly::parse(bracket), writhe).to_string('q');
      },
      py::arg("bracket"), py::arg("writhe"));

  m.def(
      "twist_polynomial",
      [](const std::string& graph) {
        py::dict out;
        const MultiPoly p = twist_polynomial(parse_graph(graph));
        for (const auto& [e, c] : p.terms()) out[py::tuple(py::cast(e))] = c.to_string();
        return out;
      },
      py::arg("graph"), "Exponent vector -> coefficient text.");

  m.def(
      "specialize_twist",
      [](const std::string& graph, const std::vector<int>& lengths) {
        const ColoredGraph g = parse_graph(graph);
        return specialize_twist(twist_polynomial(g), g, lengths).to_string();
      },
      py::arg("graph"), py::arg("lengths"));

  m.def(
      "family_form",
      [](std::optional<std::string> name, std::optional<std::string> base,
         std::optional<std::string> tangle) {
        const FamilyArgs a = family_args(name, base, tangle);
        return form_dict(family_closed_form(a.base, a.tangle));
      },
      py::arg("name") = py::none(), py::arg("base") = py::none(),
      py::arg("tangle") = py::none());

  m.def(
      "family_bracket",
      [](int n, std::optional<std::string> name, std::optional<std::string> base,
         std::optional<std::string> tangle) {
        if (n < 1) throw py::value_error("n must be positive");
        const FamilyArgs a = family_args(name, base, tangle);
        return family_bracket(family_closed_form(a.base, a.tangle), n).to_string();
      },
      py::arg("n"), py::arg("name") = py::none(), py::arg("base") = py::none(),
      py::arg("tangle") = py::none());

  m.def(
      "mahler",
      [](const std::string& poly, bool euclidean) {
        const LaurentPoly f = LaurentPoly::parse(poly);
        return euclidean ? euclidean_mahler(f) : mahler(f);
      },
      py::arg("poly"), py::arg("euclidean") = false);

  m.def(
      "roots",
      [](const std::string& poly) {
        std::vector<std::complex<double>> out;
        for (const Root& r : roots(LaurentPoly::parse(poly)).roots)
          out.emplace_back(static_cast<double>(r.value.real()),
                           static_cast<double>(r.value.imag()));
        return out;
      },
      py::arg("poly"));

  m.def(
      "certify",
      [](std::optional<std::string> name, std::optional<std::string> base,
         std::optional<std::string> tangle, const std::string& t_grid) {
        const FamilyArgs a = family_args(name, base, tangle);
        const Certificate c =
            divergence_certificate(family_closed_form(a.base, a.tangle), parse_t_grid(t_grid));
        py::dict d;
        d["verdict"] = std::string(verdict_name(c.verdict));
        d["reason"] = c.reason;
        d["points"] = c.points;
        d["max_modulus"] = static_cast<double>(c.max_modulus);
        if (c.witness) {
          d["t"] = c.witness->t.get_d();
          d["z"] = std::complex<double>(static_cast<double>(c.witness->z.real()),
                                        static_cast<double>(c.witness->z.imag()));
        }
        return d;
      },
      py::arg("name") = py::none(), py::arg("base") = py::none(),
      py::arg("tangle") = py::none(), py::arg("t_grid") = "default");
}
