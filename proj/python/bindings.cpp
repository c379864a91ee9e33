#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pia/closure.hpp"
#include "pia/dataword.hpp"
#include "pia/emptiness.hpp"
#include "pia/errors.hpp"
#include "pia/fo2_automaton.hpp"
#include "pia/json_io.hpp"
#include "pia/regular.hpp"
#include "pia/run.hpp"

namespace py = pybind11;
using namespace pia;

// Structured values cross the boundary as JSON text; the Python package
// converts to and from dicts.
namespace {

Pia load_pia(const std::string& s) {
  Pia p = io::pia_from_json(io::parse(s));
  require_valid(p);
  return p;
}
NormalForm load_nf(const std::string& s) { return io::normal_form_from_json(io::parse(s)); }
template <class T>
std::string dump(const T& x) { return io::to_json(x).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pebble-intervals automata and FO2 over data words";

  auto base = py::register_exception<Error>(m, "PiaError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<AlphabetMismatch>(m, "AlphabetMismatch", base.ptr());
  py::register_exception<PartialMap>(m, "PartialMap", base.ptr());
  py::register_exception<NotUnidirectional>(m, "NotUnidirectional", base.ptr());
  py::register_exception<FreeVariable>(m, "FreeVariable", base.ptr());

  m.def("accepts", [](const std::string& p, const Word& w) { return accepts(load_pia(p), w); });
  m.def("enumerate_accepted", [](const std::string& p, int max_len) {
    const auto s = enumerate_accepted(load_pia(p), max_len);
    return std::vector<Word>(s.begin(), s.end());
  });
  m.def("is_empty", [](const std::string& p) { return is_empty(load_pia(p)); });
  m.def("witness", [](const std::string& p) { return witness(load_pia(p)); });

  m.def("union_of", [](const std::string& a, const std::string& b) { return dump(union_of(load_pia(a), load_pia(b))); });
  m.def("concat", [](const std::string& a, const std::string& b) { return dump(concat(load_pia(a), load_pia(b))); });
  m.def("shuffle", [](const std::string& a, const std::string& b) { return dump(shuffle(load_pia(a), load_pia(b))); });
  m.def("star", [](const std::string& a) { return dump(star(load_pia(a))); });
  m.def("shuffle_star", [](const std::string& a) { return dump(shuffle_star(load_pia(a))); });
  m.def("substitute", [](const std::string& a, const std::map<Letter, Letter>& h) { return dump(substitute(load_pia(a), h)); });

  m.def("nfa_to_pia", [](const std::string& n) { return dump(nfa_to_pia(io::nfa_from_json(io::parse(n)))); });
  m.def("pia_to_nfa", [](const std::string& p) { return dump(pia_to_nfa(load_pia(p))); });
  m.def("nfa_accepts", [](const std::string& n, const Word& w) { return nfa_accepts(io::nfa_from_json(io::parse(n)), w); });

  m.def("string_projection", [](const std::string& d) { return string_projection(io::dataword_from_json(io::parse(d))); });
  m.def("trim", [](const std::string& d) { return dump(trim(io::dataword_from_json(io::parse(d)))); });
  m.def("model_check", [](const std::string& d, const std::string& f) {
    return model_check(io::dataword_from_json(io::parse(d)), io::formula_from_json(io::parse(f)));
  });

  m.def("satisfiable", [](const std::string& nf) {
    const auto r = satisfiable(load_nf(nf));
    return py::make_tuple(r.satisfiable, r.witness);
  });
  m.def("projection_member", [](const std::string& nf, const Word& w) { return projection_member(load_nf(nf), w); });
  m.def("sentence_formula", [](const std::string& nf) { return dump(Sentence(load_nf(nf)).formula()); });

  m.def("catalog_names", &io::catalog_names);
  m.def("catalog", [](const std::string& name) {
    const auto j = io::catalog_entry(name);
    if (!j) throw py::key_error(name);
    return j->dump();
  });
}
