#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mrt::cli {

struct Check {
  std::string id;
  /// Human-readable name of the relation being tested.
  std::string paper_ref;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  /// Perturbed/valid residual ratio, for finite-difference checks on suspect data.
  std::optional<double> ratio;
};

struct Report {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  /// Command-specific payload (values, fitted coefficients); JSON only.
  nlohmann::ordered_json data;

  bool passed() const;
};

/// "exact" for a zero residual, otherwise "pass" or "fail".
std::string status(const Check& c);

nlohmann::ordered_json to_json(const Report& r);
/// command,id,paper_ref,max_residual,tol,pass,status,ratio
std::string to_csv(const Report& r);

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsageError = 2 };

/// Full command line without the program name, e.g. {"range-check", "--random", "--m", "1"}.
/// Reports go to `out` (or the --out file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrt::cli
