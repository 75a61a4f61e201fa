#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cfdissect/dissection.hpp"
#include "cfdissect/grammar.hpp"
#include "cfdissect/omega.hpp"
#include "cfdissect/recognizers.hpp"
#include "cfdissect/words.hpp"

namespace py = pybind11;
using namespace cfdissect;

namespace {

// Python ints cross the boundary as decimal text so any size survives.
BigInt to_big(const py::int_& v) {
  const auto text = py::str(py::handle(v)).cast<std::string>();
  if (!text.empty() && text.front() == '-') throw py::value_error("length must be non-negative");
  return BigInt(text);
}

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

std::string dissect_json(const py::object& language, const std::string& c, const py::int_& cap,
                         std::size_t samples) {
  UnaryLanguage lang = [&] {
    if (py::isinstance<py::str>(language)) return UnaryLanguage::builtin(language.cast<std::string>());
    std::vector<BigInt> lengths;
    for (const auto& item : language) lengths.push_back(to_big(item.cast<py::int_>()));
    return UnaryLanguage::from_lengths(std::move(lengths));
  }();
  return to_json(dissect_geometric(lang, parse_rational(c), to_big(cap), samples)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Balanced extended non-associative words and unary dissection";

  py::register_exception<AlphabetError>(m, "AlphabetError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<GrowthCheckFailed>(m, "GrowthCheckFailed", PyExc_ValueError);
  py::register_exception<GrammarError>(m, "GrammarError", PyExc_ValueError);

  m.def("occur", [](const std::string& w, const std::string& t) { return occur(Word::parse(w), t); },
        py::arg("w"), py::arg("t"));
  m.def("replace", [](const std::string& w, const std::string& v, const std::string& u) {
    return replace(Word::parse(w), v, u).str();
  });
  m.def("height", [](const std::string& w) { return height(Word::parse(w)); });
  m.def("pi", [](const std::string& w) { return to_py(pi(Word::parse(w)).len); },
        "Number of letters z.");

  m.def("is_enw", [](std::string_view w) { return is_enw(w); });
  m.def("is_balanced", [](std::string_view w, bool strict) {
    return is_balanced(w, strict ? BalancedMode::strict : BalancedMode::grammar);
  }, py::arg("w"), py::arg("strict") = false);
  m.def("is_omega", [](std::string_view w) { return is_omega(w); });
  m.def("check_balanced_factors", [](std::string_view w) { return check_balanced_factors(w); });
  m.def("recognize", [](const std::string& grammar, const std::string& w) {
    if (grammar != "enw" && grammar != "balanced") throw py::value_error("grammar is 'enw' or 'balanced'");
    return recognize(grammar == "enw" ? enw_grammar() : balanced_grammar(), Word::parse(w)).accepted;
  }, py::arg("grammar"), py::arg("w"), "Chart recognizer over one of the two built-in grammars.");

  m.def("enumerate_enw", [](std::size_t leaves) { return strings(enumerate_enw(leaves)); });
  m.def("construct_omega", [](std::size_t n) { return construct_omega(n).str(); });
  m.def("enumerate_omega", [](std::size_t n) { return strings(enumerate_omega(n)); });
  m.def("omega_count", [](std::size_t n) { return to_py(omega_count_formula(n)); });
  m.def("feasible_heights", [](const py::int_& n) { return feasible_heights(to_big(n)); });

  m.def("image_membership", [](const py::int_& mm, std::uint64_t g) {
    return image_membership(to_big(mm), residue_dissector(g));
  }, py::arg("m"), py::arg("g"));
  m.def("witness", [](const py::int_& mm, std::uint64_t g) -> std::optional<std::string> {
    const auto w = witness(to_big(mm), residue_dissector(g));
    if (!w) return std::nullopt;
    return w->str();
  }, py::arg("m"), py::arg("g"));
  m.def("alpha_for", [](const std::string& c) { return alpha_for(parse_rational(c)); });
  m.def("_dissect_json", &dissect_json, py::arg("language"), py::arg("c"), py::arg("cap"),
        py::arg("samples") = 10);
}
