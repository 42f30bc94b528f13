#include <map>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anglebis/galois.hpp"
#include "anglebis/inverse_solver.hpp"
#include "anglebis/reproduce.hpp"
#include "anglebis/wolff.hpp"

namespace py = pybind11;
using namespace anglebis;

namespace {

// Exact values cross the boundary as "num/den" strings; the Python layer
// turns them into fractions.Fraction.
Rational rational(const std::string& s) { return Rational::parse(s); }

PolyQ polynomial(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(rational(s));
  return PolyQ(c);
}

std::vector<std::string> coefficient_strings(const PolyQ& f) {
  std::vector<std::string> out;
  for (int i = 0; i <= f.degree(); ++i) out.push_back(f.coeff(i).to_string());
  return out;
}

py::dict metrics_dict(const Triangle& t) {
  auto m = metrics(t);
  py::dict d;
  d["sides"] = t.sides();
  d["semiperimeter"] = m.semiperimeter;
  d["area"] = m.area;
  d["inradius"] = m.inradius;
  d["angles"] = m.angles;
  d["medians"] = m.medians;
  d["altitudes"] = m.altitudes;
  d["bisectors"] = m.bisectors;
  return d;
}

const char* const kErrorKinds[] = {"DivisionByZero",  "ParseError",       "BadPrime",         "NotPrime",
                                   "NotSquarefree",   "DegreeDropped",    "InvalidTriangle",  "InvalidMedians",
                                   "InvalidAltitudes", "NonPositiveInput", "NoConvergence",    "NonPositiveRatio",
                                   "NoRootInRange",   "NonPositiveRoots", "InvalidArgument"};

}  // namespace

PYBIND11_MODULE(_anglebis, m) {
  m.doc() = "Native core of the anglebis package";

  static PyObject* base = PyErr_NewException("anglebis.AnglebisError", PyExc_ValueError, nullptr);
  m.attr("AnglebisError") = py::handle(base);
  static std::map<std::string, PyObject*> kinds;
  for (const char* kind : kErrorKinds) {
    std::string qualified = std::string("anglebis.") + kind;
    PyObject* cls = PyErr_NewException(qualified.c_str(), base, nullptr);
    kinds[kind] = cls;
    m.attr(kind) = py::handle(cls);
  }
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      auto it = kinds.find(e.kind());
      PyErr_SetString(it != kinds.end() ? it->second : base, e.what());
    }
  });

  m.def("forward", [](double a, double b, double c) { return metrics_dict(make_triangle(a, b, c)); },
        py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "solve",
      [](double la, double lb, double lc, double tolerance) {
        SolverConfig cfg;
        cfg.tolerance = tolerance;
        SolveResult res = [&] {
          py::gil_scoped_release release;
          return solve_from_bisectors(la, lb, lc, cfg);
        }();
        py::dict d = metrics_dict(res.triangle);
        d["residual"] = res.residual;
        d["iterations"] = res.iterations;
        d["start_used"] = res.start_used;
        return d;
      },
      py::arg("la"), py::arg("lb"), py::arg("lc"), py::arg("tolerance") = 1e-12);

  m.def(
      "isosceles",
      [](double rho) {
        auto s = isosceles_solve(rho);
        py::dict d;
        d["x"] = s.x;
        d["alpha"] = s.alpha;
        d["beta"] = s.beta;
        d["area_factor"] = s.area_factor;
        return d;
      },
      py::arg("rho"));

  m.def(
      "wolff",
      [](const std::string& la, const std::string& lb, const std::string& lc) {
        auto data = wolff_data(rational(la), rational(lb), rational(lc));
        py::dict d;
        d["a2"] = data.invariants.a2.to_string();
        d["a3"] = data.invariants.a3.to_string();
        d["a4"] = data.invariants.a4.to_string();
        d["W"] = coefficient_strings(data.W);
        d["U"] = coefficient_strings(data.U);
        d["V"] = coefficient_strings(data.V);
        return d;
      },
      py::arg("la"), py::arg("lb"), py::arg("lc"));

  m.def("recover_bisectors", [](const std::string& la, const std::string& lb, const std::string& lc) {
    return recover_bisectors(symmetric_invariants(rational(la), rational(lb), rational(lc)));
  });

  m.def(
      "galois_json",
      [](const std::vector<std::string>& coeffs, std::uint64_t prime_bound) {
        return to_json(symmetric_group_certificate(polynomial(coeffs), prime_bound)).dump();
      },
      py::arg("coeffs"), py::arg("prime_bound") = kDefaultPrimeBound);

  m.def(
      "constructible_json",
      [](const std::vector<std::string>& coeffs, std::uint64_t prime_bound) {
        return to_json(constructibility_verdict(polynomial(coeffs), prime_bound)).dump();
      },
      py::arg("coeffs"), py::arg("prime_bound") = kDefaultPrimeBound);

  m.def(
      "radical_json",
      [](const std::string& la, const std::string& lb, const std::string& lc, std::uint64_t prime_bound) {
        return to_json(radical_solvability_report(rational(la), rational(lb), rational(lc), prime_bound)).dump();
      },
      py::arg("la"), py::arg("lb"), py::arg("lc"), py::arg("prime_bound") = kDefaultPrimeBound);

  m.def(
      "reproduce_json",
      [](std::uint64_t seed, std::optional<std::size_t> corpus, std::uint64_t prime_bound, double tolerance) {
        ReproduceOptions o;
        o.seed = seed;
        o.corpus = corpus;
        o.prime_bound = prime_bound;
        o.solver_tolerance = tolerance;
        Report r = [&] {
          py::gil_scoped_release release;
          return reproduce_paper(o);
        }();
        return to_json(r).dump();
      },
      py::arg("seed") = ReproduceOptions{}.seed, py::arg("corpus") = py::none(),
      py::arg("prime_bound") = kDefaultPrimeBound, py::arg("tolerance") = 1e-12);
}
