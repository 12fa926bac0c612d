#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kemeny/chain_matrices.hpp"
#include "kemeny/graph.hpp"

namespace kemeny::cli {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string command;  // compute, matrices, closed-form, sweep, census, generate
  ScalarMode scalar_mode = ScalarMode::automatic;
  double tolerance = 1e-9;
  std::optional<OutputFormat> output;  // unset: the command's default
  std::string input;                   // graph6 file, "-" for stdin, empty for none
  std::size_t exact_cap = 64;

  std::optional<std::size_t> n;  // sweep, census
  std::string kind = "P";        // matrices
  bool no_nb = false;            // compute
  bool general = false;          // sweep
  std::size_t threads = 0;       // census
};

struct RunHooks {
  /// Applied to every transition matrix before the routes run.
  std::function<void(ChainMatrix&)> matrix_hook;
  /// Replaces std::cin for --input -.
  std::istream* stdin_stream = nullptr;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 1;
inline constexpr int cross_check = 2;
}  // namespace exit_code

/// Graph from a generator spec (complete:5, bipartite:2,3, barbell:3,4,6,
/// petersen, ...) or a graph6 string.
Graph parse_graph_spec(std::string_view spec);

/// Executes an already parsed invocation; args are the positional operands.
int run(const RunConfig& config, const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const RunHooks& hooks = {});

/// Parses argv (without the program name) and dispatches to run().
int run_command_line(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
                     const RunHooks& hooks = {});

}  // namespace kemeny::cli
