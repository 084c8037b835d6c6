#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bigmcg/cli.hpp"
#include "bigmcg/end_space.hpp"
#include "bigmcg/error.hpp"
#include "bigmcg/homology_rep.hpp"
#include "bigmcg/polish_lab.hpp"
#include "bigmcg/shifts_and_flux.hpp"
#include "bigmcg/suites.hpp"
#include "bigmcg/surface_model.hpp"
#include "bigmcg/verdict.hpp"

namespace py = pybind11;
using namespace bigmcg;

namespace {

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["text"] = to_string(v);
  if (const auto* ok = std::get_if<Verified>(&v)) {
    d["verdict"] = "Verified";
    d["window"] = ok->window;
  } else if (const auto* r = std::get_if<Refuted>(&v)) {
    d["verdict"] = "Refuted";
    d["witness"] = to_string(r->witness);
    d["detail"] = r->detail;
  } else {
    d["verdict"] = "Unknown";
    d["reason"] = std::get<Unknown>(v).reason;
  }
  return d;
}

Word checked_word(const std::string& text, int ends) {
  Word w = parse_word(text);
  require_in_range(w, ends);
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shadow verification for mapping class groups of S(n)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

  m.def("euler_characteristic", [](const std::string& sig) { return euler_characteristic(parse_signature(sig)); });
  m.def("generator_count", [](const std::string& sig) { return generator_count(parse_signature(sig)); });
  m.def("finite_homeomorphic", [](const std::string& a, const std::string& b) {
    return finite_homeomorphic(parse_signature(a), parse_signature(b));
  });
  m.def("compare_surfaces", [](const std::string& name_a, const std::string& name_b) {
    return to_string(compare(named_surface(parse_named_surface(name_a)), named_surface(parse_named_surface(name_b))));
  });
  m.def("normalize_end_code", [](const std::string& code) { return to_string(normalize(parse_end_code(code))); });

  m.def("parse_word", [](const std::string& text) { return render(parse_word(text)); },
        "Canonical rendering of a word literal");
  m.def("free_reduce", [](const std::string& text) { return render(free_reduce(parse_word(text))); });

  m.def("curve_image", [](const std::string& word, const std::string& curve, int ends, std::size_t budget) {
    const Atlas atlas(ends);
    return curve_image(atlas, checked_word(word, ends), CurveTerm(parse_curve(curve)), budget).render();
  }, py::arg("word"), py::arg("curve"), py::arg("ends") = 3, py::arg("budget") = kDefaultBudget);

  m.def("act", [](const std::string& word, const std::string& vector, int ends, int window) -> std::optional<std::string> {
    const Atlas atlas(ends);
    const auto image = act(atlas, checked_word(word, ends), parse_vector(vector, ends), window);
    if (!image) return std::nullopt;
    return to_string(*image);
  }, py::arg("word"), py::arg("vector"), py::arg("ends") = 3, py::arg("window") = 8);

  m.def("equal_up_to", [](const std::string& w1, const std::string& w2, int ends, int window, std::size_t budget) {
    const Atlas atlas(ends);
    return verdict_dict(equal_up_to(atlas, checked_word(w1, ends), checked_word(w2, ends), window, budget));
  }, py::arg("w1"), py::arg("w2"), py::arg("ends") = 3, py::arg("window") = 8, py::arg("budget") = kDefaultBudget);

  m.def("trivial_up_to", [](const std::string& w, int ends, int window, std::size_t budget) {
    const Atlas atlas(ends);
    return verdict_dict(trivial_up_to(atlas, checked_word(w, ends), window, budget));
  }, py::arg("word"), py::arg("ends") = 3, py::arg("window") = 8, py::arg("budget") = kDefaultBudget);

  m.def("end_permutation", [](const std::string& w, int ends) {
    const Atlas atlas(ends);
    return end_permutation(atlas, checked_word(w, ends)).cycles();
  }, py::arg("word"), py::arg("ends") = 3);

  m.def("phi", [](int end, const std::string& w, int ends, int window) {
    const Atlas atlas(ends);
    return phi(atlas, end, checked_word(w, ends), window);
  }, py::arg("end"), py::arg("word"), py::arg("ends") = 3, py::arg("window") = 8);

  m.def("flux_vector", [](const std::string& w, int ends, int window) {
    const Atlas atlas(ends);
    return flux_vector(atlas, checked_word(w, ends), window);
  }, py::arg("word"), py::arg("ends") = 3, py::arg("window") = 8);

  m.def("verify_suite", [](const std::string& name, int ends, int window) {
    const Report r = verify_suite(name, ends, window);
    py::dict d;
    d["passed"] = r.passed();
    d["text"] = r.text();
    py::list steps;
    for (const auto& s : r.steps) steps.append(py::make_tuple(std::string(to_string(s.status)), s.id, s.anchor, s.detail));
    d["steps"] = steps;
    return d;
  }, py::arg("name"), py::arg("ends") = 3, py::arg("window") = 8);
  m.def("suite_names", &suite_names);

  m.def("sym_generated", [](const std::vector<std::string>& cycles, int n) {
    std::vector<Perm> perms;
    for (const auto& c : cycles) perms.push_back(Perm::parse(c, n));
    return sym_generated(perms, n);
  });
  m.def("twist_point", &twist_point);
  m.def("model_shift_point", &model_shift_point);

  m.def("metric_shift_family", [](Vertex n, Vertex m, Vertex depth) {
    const Dyadic forward = metric_d(shift_example(n), shift_example(m), depth);
    const Dyadic backward = metric_d(inverse(shift_example(n)), inverse(shift_example(m)), depth);
    return py::make_tuple(forward.to_string(), backward.to_string());
  }, "d(g_n, g_m) and d(inv(g_n), inv(g_m)) as exact dyadic strings");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
