#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cli/json_io.hpp"
#include "spinc/error.hpp"

namespace spinc::cli {

struct RunConfig {
  std::string command;
  std::filesystem::path complex;
  std::filesystem::path sub;
  std::filesystem::path w2;
  std::filesystem::path bundle;
  std::filesystem::path corpus;
  int degree = 0;
  std::string coeff = "Z";
  std::optional<std::string> twist;  // JSON element literal
  bool strict = false;
  bool json = false;
  bool basis = false;
  std::optional<std::uint64_t> seed;
};

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kInternalError = 3,
  kInapplicable = 4,
  kHypothesisFailure = 5,
  kIncompatibleLifts = 6,
};

struct Report {
  int exit_code = kOk;
  Json body;
};

Report cmd_cohomology(const RunConfig& cfg);
Report cmd_charclasses(const RunConfig& cfg);
Report cmd_structures(const RunConfig& cfg);
Report cmd_transport(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);

int exit_code_for(ErrorCode code);

/// Dispatches on cfg.command and turns exceptions into an error report.
Report run(const RunConfig& cfg);

/// Plain-text rendering of a report body.
std::string render(const Json& body);

}  // namespace spinc::cli
