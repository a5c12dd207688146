#ifndef GRADPLATE_CLI_HPP
#define GRADPLATE_CLI_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradplate {

// Invocation problems: unknown subcommand or option, malformed value, missing
// required option, unreadable config file.  run_cli maps these (and any
// std::invalid_argument raised while reading inputs) to exit code 2; engine
// domain and runtime errors map to exit code 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One resolved invocation.  material, out and seed are lifted out of the map
// because every subcommand carries them in its report metadata; params holds
// the remaining options as canonical text (numbers reformatted to their
// shortest round-trip form), so equality of RunConfig means equality of runs.
struct RunConfig {
  std::string subcommand;
  std::string material;  // empty when the subcommand takes no material file
  std::string out;       // output file or prefix
  unsigned long long seed = 1;
  std::map<std::string, std::string> params;

  bool operator==(const RunConfig&) const = default;
};

// args = subcommand followed by --key value / --key=value tokens.  --config
// FILE merges key = value lines ('#' comments) at lower precedence: a key
// given both in the file and on the command line keeps the command-line value
// and warns on diag.  Unknown keys, wherever they come from, raise UsageError
// naming the key.  Values are validated and canonicalized so that
// parse_config(config_args(...)) reproduces the RunConfig exactly.
RunConfig parse_config(const std::vector<std::string>& args, std::ostream* diag = nullptr);

// Flat key -> value echo of a resolved run (what the JSON summaries embed)
// and its inverse, an argument vector that re-parses to the same RunConfig.
std::map<std::string, std::string> config_echo(const RunConfig& cfg);
std::vector<std::string> config_args(const std::string& subcommand,
                                     const std::map<std::string, std::string>& echo);

// Parses, dispatches and writes the run's reports.  Returns 0 on success,
// 2 on usage errors, 3 on numerical or I/O failure.  out receives the
// human-readable result lines, diag the warnings and error messages.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag);
int run_cli(int argc, const char* const argv[]);

}  // namespace gradplate

#endif
