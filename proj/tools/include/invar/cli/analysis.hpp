#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invar/cli/report.hpp"
#include "invar/cli/spec_file.hpp"
#include "invar/errors.hpp"
#include "invar/gaction.hpp"

namespace invar::cli {

enum class MethodChoice { both, constructive, bruteforce };

struct AnalysisOptions {
  MethodChoice method = MethodChoice::both;
  /// Declared sequence; overrides the one stored in the spec and skips the search.
  std::optional<std::vector<unsigned>> sequence;
  std::optional<unsigned> degree_bound;
  bool verify = true;
  std::size_t closure_cap = kDefaultClosureCap;
  bool timing = false;
};

/// A library error together with the pipeline stage that raised it.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const Error& cause)
      : std::runtime_error(stage + ": " + cause.what()), stage_(std::move(stage)), code_(cause.code()) {}
  const std::string& stage() const noexcept { return stage_; }
  ErrorCode code() const noexcept { return code_; }

 private:
  std::string stage_;
  ErrorCode code_;
};

struct AnalysisOutcome {
  AnalysisReport report;
  /// 0 success, 2 structural refusal, 4 internal assertion failure.
  int exit_code = 0;
};

/// Runs closure, triangularization, structure detection, both Hilbert ideal
/// computations and the verdicts. Stages that refuse leave a marked section;
/// errors that stop the pipeline entirely raise StageError.
AnalysisOutcome analyze(const GroupSpec& spec, const AnalysisOptions& options = {});

/// Closure cap from INVAR_CLOSURE_CAP, or the default.
std::size_t closure_cap_from_env();

}  // namespace invar::cli
