#pragma once

// Command dispatch behind the twinbeam executable and the Python module.

#include "twinbeam/fock.hpp"
#include "twinbeam/serialize.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace twinbeam::cli {

enum class Command { OnOff, Homodyne, SweepSqueezing, Teleport, WignerMap, Oracle, Reproduce };
enum class Format { Json, Csv };

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

struct RunConfig {
  Command command;
  // Numeric parameters by flag name without dashes, e.g. "N", "eta", "max-n".
  std::map<std::string, double> params;
  // Text parameters: "name" (oracle), "params" (oracle JSON), "eta-grid", "N-list", "input",
  // "state", "out-dir", "state-csv".
  std::map<std::string, std::string> options;
  // Empty: <default_output_dir>/<command>.<ext>. "-": the stream passed to execute.
  std::filesystem::path output;
  std::optional<Format> format;
};

enum ExitCode : int { kOk = 0, kFailure = 1, kValidation = 2, kConvergence = 3 };

// $TWINBEAM_OUTPUT_DIR when set, else the working directory.
std::filesystem::path default_output_dir();

// Throws PreconditionError for invalid configurations and the numerical errors of the
// underlying modules. Returns the files written.
std::vector<std::filesystem::path> execute(const RunConfig& config, std::ostream& out);

// execute with errors reported on err and mapped to an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int exit_code_for_current_exception(std::ostream& err);

// Numeric parameters accepted by a command (text options are checked separately).
const std::vector<std::string>& parameter_names(Command c);

// "a:b:n" -> n evenly spaced points including both ends.
std::vector<double> parse_grid(const std::string& spec);
// "1,2,5"
std::vector<double> parse_list(const std::string& spec);

// vacuum | fock:n | coherent:re[,im] | squeezed:r | thermal:n | onoff:N[,eta] |
// homodyne:N,eta,x
FockOperator parse_state(const std::string& spec, double tail_tolerance = kDefaultTailTolerance);

// Oracle evaluation by name with a JSON parameter object.
json evaluate_oracle(const std::string& name, const json& params);
std::vector<std::string> oracle_names();

}  // namespace twinbeam::cli
