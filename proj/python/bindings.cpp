#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "knotdom/alexander.hpp"
#include "knotdom/cli.hpp"

namespace py = pybind11;
using namespace knotdom;

namespace {

// Runs the command-line front end and returns stdout; exit status 1 raises.
std::string cli_json(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (code == kExitError) throw std::runtime_error(err.str().empty() ? out.str() : err.str());
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_knotdom, m) {
  m.doc() = "exact knot invariants and 1-domination verdicts";
  m.attr("DEFAULT_CORPUS") = KNOTDOM_DEFAULT_CORPUS;

  py::register_exception<PolyParseError>(m, "PolyParseError", PyExc_ValueError);
  py::register_exception<DiagramError>(m, "DiagramError", PyExc_ValueError);
  py::register_exception<CorpusError>(m, "CorpusError", PyExc_ValueError);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init<>())
      .def(py::init<long>())
      .def_static("parse", &LaurentPoly::parse)
      .def_static("monomial", [](long c, int e) { return LaurentPoly::monomial(c, e); })
      .def("is_zero", &LaurentPoly::is_zero)
      .def("min_degree", &LaurentPoly::min_degree)
      .def("max_degree", &LaurentPoly::max_degree)
      .def("coefficient", [](const LaurentPoly& p, int e) { return p.coefficient(e).get_str(); })
      .def("terms",
           [](const LaurentPoly& p) {
             std::vector<std::pair<int, std::string>> out;
             for (const auto& [e, c] : p.terms()) out.emplace_back(e, c.get_str());
             return out;
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; });

  m.def("normalize", &normalize);
  m.def("exact_div", &exact_div, "normalized quotient, or None when not divisible");
  m.def("is_prime_power", [](long n) { return is_prime_power(n); });
  m.def("alexander_polynomial", [](const std::string& pd) { return alexander_polynomial(parse_pd(pd)); });
  m.def(
      "jones_polynomial", [](const std::string& pd, unsigned threads) { return jones_polynomial(parse_pd(pd), threads); },
      py::arg("pd"), py::arg("threads") = 1);
  m.def("braid_to_pd", [](const std::string& braid) { return braid_to_pd(parse_braid(braid)).to_string(); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
  m.def("check_json", [](const std::string& corpus, const std::string& a, const std::string& b) {
    return cli_json({"--corpus", corpus, "--json", "check", a, b});
  });
  m.def("invariants_json", [](const std::string& corpus, const std::string& target) {
    return cli_json({"--corpus", corpus, "--json", "invariants", target});
  });
  m.def("poset_json", [](const std::string& corpus, unsigned threads) {
    return cli_json({"--corpus", corpus, "--json", "--threads", std::to_string(threads), "poset"});
  });
  m.def("verify_json", [](const std::string& corpus) { return cli_json({"--corpus", corpus, "--json", "verify-paper"}); });
}
