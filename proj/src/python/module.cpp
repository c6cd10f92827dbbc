#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dslice/commands.hpp"
#include "dslice/errors.hpp"
#include "dslice/expression.hpp"

namespace py = pybind11;

namespace {

template <class T>
T expect(const dslice::Expression& e, const char* what) {
  if (const T* v = std::get_if<T>(&e)) return *v;
  throw dslice::PreconditionError(std::string("expected ") + what);
}

}  // namespace

PYBIND11_MODULE(_dslice, m) {
  m.doc() = "JSON-returning entry points; the dslice package decodes them.";

  static py::exception<dslice::ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<dslice::PreconditionError> precondition_error(m, "PreconditionError", PyExc_ValueError);
  static py::exception<dslice::InternalInconsistency> internal_error(m, "InternalInconsistency", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dslice::ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const dslice::PreconditionError& e) {
      py::set_error(precondition_error, e.what());
    } catch (const dslice::InternalInconsistency& e) {
      py::set_error(internal_error, e.what());
    }
  });

  m.def("sfs", [](const std::string& text) {
    return dslice::run_sfs(expect<dslice::SeifertInvariants>(dslice::parse_expression(text), "an S2 space")).dump();
  });
  m.def("montesinos", [](const std::string& text) {
    const auto e = dslice::parse_expression(text);
    if (const auto* p = std::get_if<dslice::PretzelParams>(&e)) return dslice::run_montesinos(p->link()).dump();
    return dslice::run_montesinos(expect<dslice::MontesinosLink>(e, "a Montesinos link")).dump();
  });
  m.def("pretzel", [](const std::string& text) {
    return dslice::run_pretzel(expect<dslice::PretzelParams>(dslice::parse_expression(text), "a pretzel link")).dump();
  });
  m.def("evaluate", [](const std::string& text) { return dslice::run_expression(dslice::parse_expression(text)).dump(); });
  m.def(
      "lattice_search",
      [](const std::string& input, std::optional<std::size_t> dim, unsigned threads) {
        dslice::LatticeRequest req;
        req.m = dim;
        req.threads = threads;
        if (!input.empty() && input.front() == '{')
          req.matrix = dslice::matrix_from_json(dslice::Json::parse(input));
        else
          req.space = expect<dslice::SeifertInvariants>(dslice::parse_expression(input), "an S2 space");
        py::gil_scoped_release release;
        return dslice::run_lattice_search(req).dump();
      },
      py::arg("input"), py::arg("m") = py::none(), py::arg("threads") = 1u);
  m.def("partitions", [](const std::string& doc) {
    return dslice::run_partitions(dslice::link_data_from_json(dslice::Json::parse(doc))).dump();
  });
  m.def(
      "batch",
      [](const std::vector<std::string>& lines, unsigned jobs) {
        std::vector<dslice::Json> out;
        {
          py::gil_scoped_release release;
          out = dslice::run_batch(lines, jobs);
        }
        std::vector<std::string> dumped;
        for (const auto& j : out) dumped.push_back(j.dump());
        return dumped;
      },
      py::arg("lines"), py::arg("jobs") = 1u);
}
