#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "splitoct/algebra.hpp"
#include "splitoct/numeric.hpp"

namespace splitoct::cli {

enum class Format { Text, Json };

struct RunConfig {
  AlgebraKind algebra = AlgebraKind::SplitOctonion;
  std::uint64_t seed = 42;
  std::size_t points = 1000;
  std::size_t trials = 1000;
  double tolerance = 1e-10;
  double discrimination_floor = 0.1;
  double domain_lo = -10.0;
  double domain_hi = 10.0;
  bool with_S = false;
  bool with_F0 = false;
  Format format = Format::Text;
  Vec3 k = {0, 0, 1};
  Vec3 eps = {1, 0, 0};
  bool zero_field = false;
  bool finite_difference = false;
  bool expect_associativity = false;
  /// Negative-control hook: flip the sign of table entry (i, j).
  std::optional<std::pair<int, int>> corrupt_entry;

  /// Throws ValidationError when counts or tolerances are out of range.
  void validate() const;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Machine-readable result of one subcommand.
struct Report {
  static constexpr int kSchema = 1;

  int schema = kSchema;
  std::string command;
  std::string algebra;
  nlohmann::json config = nlohmann::json::object();
  std::vector<Check> checks;
  std::optional<nlohmann::json> residuals;
  std::optional<std::size_t> dimension;
  /// Command-specific top-level fields (table, decompositions, basis, ...).
  nlohmann::json extra = nlohmann::json::object();

  bool all_passed() const;
  int exit_code() const { return all_passed() ? 0 : 1; }

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
Report report_from_json(const nlohmann::json& j);

struct CommandOutput {
  Report report;
  std::string text;
};

CommandOutput cmd_table(const RunConfig& config);
CommandOutput cmd_identities(const RunConfig& config);
CommandOutput cmd_expand(const RunConfig& config);
CommandOutput cmd_planewave(const RunConfig& config);
CommandOutput cmd_derivations(const RunConfig& config);

/// JSON form of a symbolic decomposition: component -> [{sign, magnitude, var, field}].
nlohmann::json decomposition_to_json(const MaxwellDecomposition& d);

/// Full command-line entry point. Exit codes: 0 pass, 1 check failed,
/// 2 usage or precondition error. Output is written once at the end.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitoct::cli
