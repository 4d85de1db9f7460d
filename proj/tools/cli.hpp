#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace twh::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kCapExceeded = 3,
};

struct RunConfig {
  std::string subcommand;
  int genus = 0;
  std::string mu;
  std::string nu;
  std::string lambda;
  std::string engine = "tropical";  // brute | tropical | both
  std::string format = "text";      // text | json | dot
  bool disconnected = false;
  bool labeled = false;
  bool prune = false;
  int max_2n = 12;
  int max_b = 8;
  int threads = 1;
  std::string shape;  // "m,n"
  std::string chamber;
  std::string wall;
  int points = 3;
  int bound = 16;
  std::string formula = "corrected";  // corrected | published
  bool near_wall = false;
  bool all_pairs = false;
};

/// Defaults for the caps, taken from HURWITZ_MAX_2N and HURWITZ_MAX_B when set.
RunConfig default_config();

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_graphs(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_poly(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_wallcross(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_btilde(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.subcommand and maps library errors to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. argv[0] is the program name.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twh::cli
