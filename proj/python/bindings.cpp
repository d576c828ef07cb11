#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxdatum/classical.hpp"
#include "coxdatum/cone.hpp"
#include "coxdatum/errors.hpp"
#include "coxdatum/io.hpp"

namespace py = pybind11;
using namespace coxdatum;

namespace {

// Structured results cross the boundary as JSON text; the Python side
// decodes them.
std::string dumps(const json& j) { return j.dump(); }

Vec to_vec(const CoxeterDatum& d, const std::vector<std::string>& values) {
  if (values.size() != d.rank()) throw Error(ErrorKind::Precondition, "vector length differs from rank");
  Vec out;
  for (const auto& v : values) out.push_back(d.field().parse(v));
  return out;
}

std::vector<std::string> to_strings(const Vec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_coxdatum, m) {
  m.doc() = "Coxeter data engine";

  static py::exception<Error> error(m, "CoxdatumError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<CoxeterDatum>(m, "Datum")
      .def_property_readonly("rank", &CoxeterDatum::rank)
      .def_property_readonly("generators", &CoxeterDatum::generators)
      .def_property_readonly("exact", [](const CoxeterDatum& d) { return d.field().mode() == Mode::Exact; })
      .def("coxeter_matrix", [](const CoxeterDatum& d) { return dumps(coxeter_to_json(d.coxeter())); })
      .def("to_json", [](const CoxeterDatum& d) { return dumps(to_json(d)); });

  m.def("parse_datum", [](const std::string& text) { return validated(parse_datum(std::string_view(text))); },
        py::arg("text"));
  m.def("load_datum", [](const std::string& path) { return validated(load_datum(path)); }, py::arg("path"));
  m.def("builtin_example", &builtin_example, py::arg("name"));
  m.def("validate", [](const std::string& text) {
    const CoxeterDatum d = parse_datum(std::string_view(text));
    return dumps(to_json(d, validate(d)));
  }, py::arg("text"));
  m.def("restrict", &restrict, py::arg("datum"), py::arg("labels"));

  m.def("apply_word", [](const CoxeterDatum& d, const std::vector<std::string>& word, int side,
                         const std::vector<std::string>& v) {
    return to_strings(apply_word(d, word_from_labels(d, word), side_from_number(side), to_vec(d, v)));
  }, py::arg("datum"), py::arg("word"), py::arg("side"), py::arg("vector"));
  m.def("reduce_word", [](const CoxeterDatum& d, const std::vector<std::string>& word) {
    const ReducedWord r = reduce_word(d, word_from_labels(d, word));
    return py::make_tuple(word_labels(d, r.word), r.length);
  }, py::arg("datum"), py::arg("word"));
  m.def("product_order", [](const CoxeterDatum& d, const std::string& s, const std::string& t, int side, long cap) {
    return product_order(d, d.index_of(s), d.index_of(t), side_from_number(side), cap);
  }, py::arg("datum"), py::arg("s"), py::arg("t"), py::arg("side") = 1, py::arg("cap") = 1000);
  m.def("enumerate_roots", [](const CoxeterDatum& d, int side, long max_depth, bool parallel) {
    EnumerateOptions opts;
    opts.parallel = parallel;
    const RootTable t = enumerate_roots(d, side_from_number(side), max_depth, opts);
    return dumps(to_json(d, t, scalar_chains(d, t)));
  }, py::arg("datum"), py::arg("side") = 1, py::arg("max_depth") = 4, py::arg("parallel") = false);
  m.def("depth", [](const CoxeterDatum& d, const std::vector<std::string>& v, int side) {
    const DepthResult r = depth(d, to_vec(d, v), side_from_number(side));
    return py::make_tuple(r.depth, word_labels(d, r.descent));
  }, py::arg("datum"), py::arg("coeffs"), py::arg("side") = 1);
  m.def("phi", [](const CoxeterDatum& d, const std::vector<std::string>& word, const std::string& simple) {
    return to_strings(apply_word(d, word_from_labels(d, word), Side::Two, simple_root(d, d.index_of(simple))));
  }, py::arg("datum"), py::arg("word"), py::arg("simple"));
  m.def("compare", [](const CoxeterDatum& d, long max_depth, bool pairs) {
    const RootTable t = enumerate_roots(d, Side::One, max_depth);
    const ComparisonReport r = compare_table(d, t, pairs);
    return py::make_tuple(r.violations(), t.roots.size());
  }, py::arg("datum"), py::arg("max_depth") = 4, py::arg("pairs") = true);
  m.def("tits_membership", [](const CoxeterDatum& d, const std::vector<std::string>& f, int side, long max_steps) {
    return dumps(to_json(d, tits_membership(d, make_functional(d, side_from_number(side), to_vec(d, f)), max_steps)));
  }, py::arg("datum"), py::arg("f"), py::arg("side") = 1, py::arg("max_steps") = 1000);
  m.def("dual_membership", [](const CoxeterDatum& d, const std::vector<std::string>& v, int side, long max_len) {
    return dumps(to_json(d, dual_membership(d, to_vec(d, v), side_from_number(side), max_len)));
  }, py::arg("datum"), py::arg("v"), py::arg("side") = 1, py::arg("max_len") = 10);
  m.def("dual_cone_rank2", [](const CoxeterDatum& d, const std::string& r, const std::string& s) {
    return dumps(to_json(d, dual_cone_rank2(d, d.index_of(r), d.index_of(s))));
  }, py::arg("datum"), py::arg("r"), py::arg("s"));
  m.def("refute", [](const CoxeterDatum& d, const std::vector<std::string>& v1, const std::vector<std::string>& v2) {
    return dumps(to_json(d, refute_positive_pairing(d, to_vec(d, v1), to_vec(d, v2))));
  }, py::arg("datum"), py::arg("v1"), py::arg("v2"));
  m.def("is_finite_group", [](const CoxeterDatum& d, long budget) {
    const FinitenessResult r = is_finite_group(d, budget);
    return py::make_tuple(r.finite, r.ray_count, r.frontier);
  }, py::arg("datum"), py::arg("budget") = 10);
}
