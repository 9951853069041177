#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "pong/errors.hpp"
#include "pong/io.hpp"
#include "pong/pong_algebra.hpp"
#include "pong/suites.hpp"

namespace py = pybind11;
using namespace pong;

namespace {

using Exponents = std::vector<int>;
using Terms = std::vector<std::pair<py::object, std::vector<Exponents>>>;

template <class Gen>
Terms terms_of(const Element<Gen>& a) {
  Terms out;
  for (const auto& [g, p] : a.terms()) {
    std::vector<Exponents> monos;
    for (const Monomial& mono : p.monomials()) monos.push_back(mono.exponents());
    out.emplace_back(py::cast(g), std::move(monos));
  }
  return out;
}

std::vector<std::pair<int, int>> crossing_pairs(const std::vector<Crossing>& cs) {
  std::vector<std::pair<int, int>> out;
  for (const Crossing& c : cs) out.emplace_back(c.i, c.j);
  return out;
}

template <class Gen>
std::optional<std::pair<Gen, Exponents>> product(const Gen& f, const Gen& g) {
  if (f.context() != g.context()) throw InvalidArgument("operands from different algebras");
  auto t = multiply_generators(f, g);
  if (!t) return std::nullopt;
  return std::make_pair(t->generator, t->monomial.exponents());
}

template <class Gen>
void bind_generator(py::module_& m, const char* name) {
  py::class_<Gen>(m, name)
      .def(py::init([](int m_, std::vector<int> domain, std::vector<int> values) {
             const int k = static_cast<int>(domain.size());
             return Gen({m_, k}, std::move(domain), std::move(values));
           }),
           py::arg("m"), py::arg("domain"), py::arg("values"))
      .def_property_readonly("m", [](const Gen& f) { return f.context().m; })
      .def_property_readonly("k", [](const Gen& f) { return f.context().k; })
      .def_property_readonly("domain", &Gen::domain)
      .def_property_readonly("values", &Gen::values)
      .def("__call__", &Gen::evaluate)
      .def("crossing_count", [](const Gen& f) { return crossing_count(f); })
      .def("crossings", [](const Gen& f) { return crossing_pairs(crossings(f)); })
      .def("weight_doubled", [](const Gen& f) { return weight_vector(f).doubled; })
      .def("diff", [](const Gen& f) { return terms_of(differentiate_generator(f)); })
      .def("__mul__", [](const Gen& f, const Gen& g) { return product(f, g); })
      .def("__eq__", [](const Gen& a, const Gen& b) { return a == b; })
      .def("__lt__", [](const Gen& a, const Gen& b) { return a < b; })
      .def("__hash__", &Gen::hash)
      .def("__repr__", &Gen::to_string);
}

}  // namespace

PYBIND11_MODULE(_pongalg, m) {
  m.doc() = "Pong and asteroids algebras over F_2[v_1, ..., v_m]";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  bind_generator<LiftedPermutation>(m, "LiftedPermutation");
  bind_generator<CyclicLiftedPermutation>(m, "CyclicLiftedPermutation");

  m.def("enumerate_generators",
        [](int m_, int k, int max_disp) { return enumerate_generators(make_pong_context(m_, k), max_disp); },
        py::arg("m"), py::arg("k"), py::arg("max_disp"));
  m.def("a_enumerate_generators",
        [](int m_, int k, int max_disp) { return a_enumerate_generators(make_asteroids_context(m_, k), max_disp); },
        py::arg("m"), py::arg("k"), py::arg("max_disp"));

  // JSON in, JSON out, in the same record formats as the command-line tool.
  m.def(
      "diff_json",
      [](const std::string& text, const std::string& algebra) {
        const Json doc = parse_json(text);
        if (element_algebra(doc, algebra) == "asteroids") return to_json(diff(asteroids_element_from_json(doc))).dump();
        return to_json(diff(pong_element_from_json(doc))).dump();
      },
      py::arg("element"), py::arg("algebra") = "pong");
  m.def(
      "mul_json",
      [](const std::string& left, const std::string& right, const std::string& algebra) {
        const Json a = parse_json(left);
        const Json b = parse_json(right);
        const std::string alg = element_algebra(a, algebra);
        if (alg != element_algebra(b, algebra)) throw InvalidArgument("operands from different algebras");
        if (alg == "asteroids") {
          return to_json(mu2(asteroids_element_from_json(a), asteroids_element_from_json(b))).dump();
        }
        return to_json(mu2(pong_element_from_json(a), pong_element_from_json(b))).dump();
      },
      py::arg("left"), py::arg("right"), py::arg("algebra") = "pong");
  m.def(
      "verify_json",
      [](const std::string& suite, int m_, int k, int max_disp, int jobs) {
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, {m_, k}, max_disp, jobs);
        }
        return to_json(r).dump();
      },
      py::arg("suite"), py::arg("m"), py::arg("k"), py::arg("max_disp"), py::arg("jobs") = 1);
  m.attr("suite_names") = suite_names();
}
