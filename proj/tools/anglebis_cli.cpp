// anglebis: triangles from angle bisectors, the Wolff polynomial and
// Galois-theoretic certificates from the command line.
//
// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.

#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anglebis/highprec.hpp"
#include "anglebis/inverse_solver.hpp"
#include "anglebis/reproduce.hpp"
#include "anglebis/wolff.hpp"

namespace {

using namespace anglebis;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  bool json = false;
  double tolerance = 1e-12;
  std::uint64_t prime_bound = kDefaultPrimeBound;
  std::optional<std::size_t> corpus;
  std::uint64_t seed = ReproduceOptions{}.seed;
  std::optional<unsigned> precision;  // unset: double geometry, 50-digit oracle
};

bool looks_rational(const std::string& s) {
  return s.find_first_of(".eE") == std::string::npos;
}

// "n/d" and integers parse exactly; decimals parse as doubles.
double parse_real(const std::string& s) {
  if (looks_rational(s)) return Rational::parse(s).to_double();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

HighReal parse_high(const std::string& s) {
  if (looks_rational(s)) {
    Rational q = Rational::parse(s);
    return HighReal(q.numerator().get_str()) / HighReal(q.denominator().get_str());
  }
  try {
    return HighReal(s);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
}

Rational parse_exact(const std::string& s) {
  if (!looks_rational(s))
    throw UsageError("'" + s + "' must be an exact rational (integer or num/den) for exact algebra");
  try {
    return Rational::parse(s);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

PolyQ parse_poly(const std::string& s) {
  try {
    return PolyQ::parse(s);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

Json envelope(const std::string& command, Json inputs, Json outputs, Json evidence) {
  return Json{{"schema", kReportSchema},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"evidence", std::move(evidence)}};
}

std::string fmt(double v, int digits = 15) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

Json triple(const std::array<double, 3>& v) { return Json::array({v[0], v[1], v[2]}); }

template <typename Real>
Json metrics_json(const BasicMetrics<Real>& m, int digits) {
  auto s = [digits](const Real& x) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
  };
  auto t = [&](const std::array<Real, 3>& v) { return Json::array({s(v[0]), s(v[1]), s(v[2])}); };
  return Json{{"semiperimeter", s(m.semiperimeter)}, {"area", s(m.area)},   {"inradius", s(m.inradius)},
              {"angles", t(m.angles)},              {"medians", t(m.medians)}, {"altitudes", t(m.altitudes)},
              {"bisectors", t(m.bisectors)}};
}

void print_metrics_text(const Json& m) {
  for (const auto& [key, value] : m.items()) {
    std::cout << std::left << std::setw(14) << key << ' ';
    if (value.is_array()) {
      for (const auto& x : value) std::cout << x.get<std::string>() << "  ";
    } else {
      std::cout << value.get<std::string>();
    }
    std::cout << '\n';
  }
}

int cmd_forward(const std::vector<std::string>& args, const GlobalFlags& g) {
  Json outputs;
  if (g.precision) {
    PrecisionScope scope(*g.precision);
    auto t = make_triangle(parse_high(args[0]), parse_high(args[1]), parse_high(args[2]));
    outputs = metrics_json(metrics(t), static_cast<int>(*g.precision));
    auto res = vrf_residuals(t);
    outputs["incircle_relation_residuals"] = Json::array({fmt(static_cast<double>(res[0]), 3),
                                                          fmt(static_cast<double>(res[1]), 3)});
  } else {
    auto t = make_triangle(parse_real(args[0]), parse_real(args[1]), parse_real(args[2]));
    outputs = metrics_json(metrics(t), 17);
    auto res = vrf_residuals(t);
    outputs["incircle_relation_residuals"] = Json::array({fmt(res[0], 3), fmt(res[1], 3)});
  }
  if (g.json) {
    std::cout << envelope("forward", Json{{"sides", args}, {"precision", g.precision ? Json(*g.precision) : Json(nullptr)}}, outputs, Json::object())
                     .dump(2)
              << '\n';
  } else {
    print_metrics_text(outputs);
  }
  return 0;
}

int cmd_solve(const std::vector<std::string>& args, const GlobalFlags& g) {
  SolverConfig cfg;
  cfg.tolerance = g.tolerance;
  auto res = solve_from_bisectors(parse_real(args[0]), parse_real(args[1]), parse_real(args[2]), cfg);
  auto m = metrics(res.triangle);
  Json outputs{{"sides", triple(res.triangle.sides())},
               {"angles", triple(m.angles)},
               {"area", m.area},
               {"semiperimeter", m.semiperimeter},
               {"inradius", m.inradius}};
  Json evidence{{"residual", res.residual}, {"iterations", res.iterations}, {"start_used", res.start_used},
                {"tolerance", cfg.tolerance}};
  if (g.json) {
    std::cout << envelope("solve", Json{{"bisectors", args}}, outputs, evidence).dump(2) << '\n';
  } else {
    std::cout << "sides      " << fmt(res.triangle.a()) << "  " << fmt(res.triangle.b()) << "  "
              << fmt(res.triangle.c()) << '\n'
              << "angles     " << fmt(m.angles[0]) << "  " << fmt(m.angles[1]) << "  " << fmt(m.angles[2]) << '\n'
              << "area       " << fmt(m.area) << '\n'
              << "perimeter  " << fmt(2 * m.semiperimeter) << '\n'
              << "inradius   " << fmt(m.inradius) << '\n'
              << "residual   " << fmt(res.residual, 3) << " (start " << res.start_used << ", " << res.iterations
              << " iterations)\n";
  }
  return 0;
}

int cmd_wolff(const std::vector<std::string>& args, const GlobalFlags& g) {
  Rational la = parse_exact(args[0]), lb = parse_exact(args[1]), lc = parse_exact(args[2]);
  WolffData data = wolff_data(la, lb, lc);
  SolverConfig cfg;
  cfg.tolerance = g.tolerance;
  double residual = check_incircle_root(la.to_double(), lb.to_double(), lc.to_double(), cfg);
  Json coeffs = Json::array();
  for (const auto& c : data.W.coefficients()) coeffs.push_back(c.to_string());
  Json outputs{{"a2", data.invariants.a2.to_string()},
               {"a3", data.invariants.a3.to_string()},
               {"a4", data.invariants.a4.to_string()},
               {"W", coeffs},
               {"U", data.U.to_coefficient_list()},
               {"V", data.V.to_coefficient_list()}};
  Json evidence{{"incircle_root_residual", residual}};
  if (g.json) {
    std::cout << envelope("wolff", Json{{"bisectors", args}}, outputs, evidence).dump(2) << '\n';
  } else {
    std::cout << "a2 = " << data.invariants.a2 << "  a3 = " << data.invariants.a3 << "  a4 = " << data.invariants.a4
              << '\n';
    std::cout << "W(t) coefficients, constant first:\n";
    for (int i = 0; i <= 10; ++i) std::cout << "  t^" << i << ": " << data.W.coeff(i) << '\n';
    std::cout << "U(t) = " << data.U.to_string() << '\n'
              << "V(t) = " << data.V.to_string() << '\n'
              << "|W(1/(2r))| normalised = " << fmt(residual, 3) << '\n';
  }
  return 0;
}

int cmd_galois(const std::string& poly_text, const GlobalFlags& g) {
  PolyQ f = parse_poly(poly_text);
  auto cert = symmetric_group_certificate(f, g.prime_bound);
  if (g.json) {
    std::cout << envelope("galois", Json{{"polynomial", poly_text}, {"prime_bound", g.prime_bound}},
                          Json{{"verdict", to_string(cert.verdict)}}, to_json(cert))
                     .dump(2)
              << '\n';
  } else {
    std::cout << "f(t) = " << f.to_string() << '\n' << "verdict: " << to_string(cert.verdict) << '\n';
    for (const auto& line : cert.reasoning) std::cout << "  - " << line << '\n';
    std::cout << "discriminant: " << cert.discriminant << (cert.discriminant_is_square ? " (square)" : " (not a square)")
              << '\n';
  }
  return 0;
}

int cmd_constructible(const std::string& poly_text, const GlobalFlags& g) {
  PolyQ f = parse_poly(poly_text);
  auto v = constructibility_verdict(f, g.prime_bound);
  if (g.json) {
    std::cout << envelope("constructible", Json{{"polynomial", poly_text}, {"prime_bound", g.prime_bound}},
                          Json{{"verdict", to_string(v.value)}, {"degree", v.degree}}, to_json(v))
                     .dump(2)
              << '\n';
  } else {
    std::cout << to_string(v.value) << " (degree " << v.degree << ")\n  " << v.reason << '\n';
  }
  return 0;
}

int cmd_radical(const std::vector<std::string>& args, const GlobalFlags& g) {
  auto rep = radical_solvability_report(parse_exact(args[0]), parse_exact(args[1]), parse_exact(args[2]),
                                        g.prime_bound);
  if (g.json) {
    std::cout << envelope("radical", Json{{"bisectors", args}, {"prime_bound", g.prime_bound}},
                          Json{{"status", to_string(rep.status)}}, to_json(rep))
                     .dump(2)
              << '\n';
  } else {
    std::cout << "r, S, p: " << to_string(rep.status) << '\n';
    for (const auto& line : rep.argument) std::cout << "  - " << line << '\n';
  }
  return 0;
}

int cmd_reproduce(const GlobalFlags& g) {
  ReproduceOptions opt;
  opt.solver_tolerance = g.tolerance;
  opt.prime_bound = g.prime_bound;
  opt.corpus = g.corpus;
  opt.seed = g.seed;
  opt.precision = g.precision.value_or(opt.precision);
  Report report = reproduce_paper(opt);
  if (g.json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << to_table(report);
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangles from angle bisectors: geometry, the Wolff polynomial and Galois certificates"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--tolerance", g.tolerance, "Inverse solver tolerance (relative)")->check(CLI::PositiveNumber);
  app.add_option("--prime-bound", g.prime_bound, "Largest prime sampled for certificates");
  app.add_option("--corpus", g.corpus, "Override every random corpus size (reproduce-paper)");
  app.add_option("--seed", g.seed, "Corpus seed (reproduce-paper)");
  app.add_option("--precision", g.precision, "Decimal digits (forward output and high-precision oracle)")
      ->check(CLI::Range(1u, 10000u));

  std::vector<std::string> sides, bis_solve, bis_wolff, bis_radical;
  std::string poly_galois, poly_constr;

  auto* forward = app.add_subcommand("forward", "Metrics of the triangle with sides a b c");
  forward->add_option("sides", sides, "a b c")->expected(3)->required();
  auto* solve = app.add_subcommand("solve", "Triangle with bisector lengths l_a l_b l_c");
  solve->add_option("bisectors", bis_solve, "l_a l_b l_c")->expected(3)->required();
  auto* wolff = app.add_subcommand("wolff", "Invariants and W(t), U(t), V(t) for rational bisectors");
  wolff->add_option("bisectors", bis_wolff, "l_a l_b l_c (integers or num/den)")->expected(3)->required();
  auto* galois = app.add_subcommand("galois", "S_n certificate for a polynomial over Q");
  galois->add_option("polynomial", poly_galois, "coefficients, constant first, e.g. 6,-3,-12,4")->required();
  auto* constructible = app.add_subcommand("constructible", "Ruler-and-compass verdict for a root");
  constructible->add_option("polynomial", poly_constr, "coefficients, constant first")->required();
  auto* radical = app.add_subcommand("radical", "Radical expressibility of r, S, p for rational bisectors");
  radical->add_option("bisectors", bis_radical, "l_a l_b l_c (integers or num/den)")->expected(3)->required();
  auto* reproduce = app.add_subcommand("reproduce-paper", "Run every reproduction check and report");
  for (auto* sub : {forward, solve, wolff, galois, constructible, radical, reproduce}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*forward) return cmd_forward(sides, g);
    if (*solve) return cmd_solve(bis_solve, g);
    if (*wolff) return cmd_wolff(bis_wolff, g);
    if (*galois) return cmd_galois(poly_galois, g);
    if (*constructible) return cmd_constructible(poly_constr, g);
    if (*radical) return cmd_radical(bis_radical, g);
    if (*reproduce) return cmd_reproduce(g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
  return 2;
}
