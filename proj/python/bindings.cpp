#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "aubert/duality.hpp"
#include "aubert/jacquet.hpp"
#include "aubert/json_io.hpp"
#include "aubert/params.hpp"
#include "aubert/parse.hpp"
#include "aubert/segments.hpp"

namespace py = pybind11;
using namespace aubert;

namespace {

RhoSigmaContext context_for(const std::string& alpha) {
  return RhoSigmaContext::symbolic(HalfInt::parse(alpha));
}

py::object json_to_py(const nlohmann::json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Arthur/Langlands parameter and Jacquet-module calculator for SO(2n+1)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "a_to_l",
      [](const std::string& param, const std::string& alpha) {
        RhoSigmaContext ctx = context_for(alpha);
        return print(a_to_l(parse_a_parameter(param, ctx)));
      },
      py::arg("parameter"), py::arg("alpha") = "1/2");

  m.def(
      "swap_sl2",
      [](const std::string& param, const std::string& alpha) {
        RhoSigmaContext ctx = context_for(alpha);
        return print(swap_sl2_copies(parse_a_parameter(param, ctx)));
      },
      py::arg("parameter"), py::arg("alpha") = "1/2");

  m.def(
      "is_image_of_a",
      [](const std::string& lparam, const std::string& alpha) -> py::object {
        RhoSigmaContext ctx = context_for(alpha);
        auto psi = l_is_image_of_a(parse_l_parameter(lparam, ctx));
        if (!psi) return py::none();
        return py::str(print(*psi));
      },
      py::arg("l_parameter"), py::arg("alpha") = "1/2");

  m.def(
      "base_point",
      [](int k, const std::string& alpha) { return print(base_point(k, context_for(alpha))); },
      py::arg("k"), py::arg("alpha") = "1/2");

  m.def(
      "dual",
      [](int k, const std::string& alpha) { return print(theorem_dual(k, context_for(alpha))); },
      py::arg("k"), py::arg("alpha"));

  m.def(
      "dual_data",
      [](int k, const std::string& alpha) -> py::object {
        auto d = dual_langlands_data(k, context_for(alpha));
        if (!d) return py::none();
        return py::str(print(*d));
      },
      py::arg("k"), py::arg("alpha"));

  m.def(
      "symmetry",
      [](int k, const std::string& alpha) { return symmetry_verdict(k, context_for(alpha)); },
      py::arg("k"), py::arg("alpha"));

  m.def(
      "jacquet",
      [](const std::string& expr, const std::string& alpha, std::size_t max_terms) {
        RhoSigmaContext ctx = context_for(alpha);
        FormalSum s = full_jacquet(parse_expr(expr), ctx, max_terms);
        return json_to_py(to_json(s));
      },
      py::arg("expr"), py::arg("alpha") = "1/2", py::arg("max_terms") = 0);

  m.def(
      "jacquet_str",
      [](const std::string& expr, const std::string& alpha, std::size_t max_terms) {
        RhoSigmaContext ctx = context_for(alpha);
        return print(full_jacquet(parse_expr(expr), ctx, max_terms));
      },
      py::arg("expr"), py::arg("alpha") = "1/2", py::arg("max_terms") = 0);

  m.def(
      "multiplicity",
      [](const std::string& expr, const std::string& word, const std::string& alpha) {
        RhoSigmaContext ctx = context_for(alpha);
        FormalSum s = full_jacquet(parse_expr(expr), ctx);
        Int c = multiplicity(parse_word(word), s);
        return py::module_::import("builtins").attr("int")(c.str());
      },
      py::arg("expr"), py::arg("word"), py::arg("alpha") = "1/2");

  m.def(
      "closure",
      [](const std::string& word, const std::string& alpha) {
        RhoSigmaContext ctx = context_for(alpha);
        std::set<Word> closed = move_closure({parse_word(word)}, ctx);
        std::vector<std::string> out;
        for (const auto& w : closed) out.push_back(print(w));
        return out;
      },
      py::arg("word"), py::arg("alpha"));

  m.def(
      "verify",
      [](const std::string& alpha, int max_m, std::size_t max_terms, int threads) {
        VerifyReport rep =
            verify_multiplicity_claims(max_m, context_for(alpha), max_terms, threads);
        py::list out;
        for (const auto& c : rep.claims) out.append(json_to_py(to_json(c)));
        return out;
      },
      py::arg("alpha"), py::arg("max_m") = 3, py::arg("max_terms") = 0, py::arg("threads") = 1);
}
