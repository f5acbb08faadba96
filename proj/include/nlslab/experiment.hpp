#ifndef NLSLAB_EXPERIMENT_HPP
#define NLSLAB_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace nlslab {

/// One experiment: a subcommand plus its parameters. `parameters` uses the
/// CLI flag names without dashes (e.g. {"p": 1, "m": 0, "q": 3}).
struct ExperimentConfig {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::filesystem::path output_dir = ".";
  std::uint64_t seed = 0;
  /// Written into metadata headers; empty means the current UTC time.
  std::string timestamp;

  static ExperimentConfig from_json(const nlohmann::json& j);
  /// Everything that determines the outputs (the timestamp is excluded).
  nlohmann::json to_json() const;
};

struct RunOutcome {
  std::vector<std::filesystem::path> files;
  /// Short human-readable summary, printed by the CLI.
  std::string summary;
};

/// Validates parameters, runs the command and writes its artifacts into
/// output_dir. Throws ValidationError for bad input and NumericalError for
/// failed computations; an integration failure first writes
/// last_good_state.json and names it in the message.
RunOutcome run(const ExperimentConfig& config);

/// The seven command names.
const std::vector<std::string>& experiment_commands();

}  // namespace nlslab

#endif  // NLSLAB_EXPERIMENT_HPP
