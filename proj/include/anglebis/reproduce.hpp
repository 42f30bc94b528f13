#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "anglebis/galois.hpp"

namespace anglebis {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);

struct Check {
  int id = 0;
  std::string name;
  std::string claim;
  std::string reference;
  CheckStatus status = CheckStatus::Fail;
  Json evidence = Json::object();
  double runtime_ms = 0;
};

struct ReproduceOptions {
  double solver_tolerance = 1e-12;
  std::uint64_t prime_bound = kDefaultPrimeBound;
  std::optional<std::size_t> corpus;  // overrides every per-check corpus size
  std::uint64_t seed = 20210601;
  unsigned precision = 50;            // decimal digits of the high-precision oracle
};

struct Report {
  ReproduceOptions options;
  std::vector<Check> checks;

  bool all_passed() const;
};

/// Runs every reproduction check in a fixed order. Deterministic for a
/// fixed seed apart from the recorded runtimes.
Report reproduce_paper(const ReproduceOptions& options = {});

Json to_json(const Report& report);
std::string to_table(const Report& report);

// JSON views shared by the CLI and the Python bindings.
Json to_json(const IrreducibilityResult& r);
Json to_json(const CycleType& c);
Json to_json(const GaloisCertificate& c);
Json to_json(const ConstructibilityVerdict& v);
Json to_json(const RadicalReport& r);

}  // namespace anglebis
