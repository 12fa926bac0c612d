#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kemeny/generators.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

enum class DiffSign { nb_smaller, equal, nb_larger_or_equal };

std::string_view to_string(DiffSign sign);

struct CensusRecord {
  std::string graph_id;  // canonical graph6
  std::size_t n = 0;
  std::size_t m = 0;
  double k_e = 0;
  double k_nb = 0;
  DiffSign diff_sign = DiffSign::nb_smaller;
  /// Set when the values were close enough to be settled exactly.
  std::optional<Rational> exact_e;
  std::optional<Rational> exact_nb;

  bool nb_ge_e() const { return diff_sign != DiffSign::nb_smaller; }
};

struct CensusError {
  std::size_t line = 0;  // 1-based input line, 0 for built-in sources
  std::string input;
  std::string message;
};

struct CensusOptions {
  /// Retain every record; otherwise only the graphs with K_nb >= K_e.
  bool keep_records = true;
  /// |K_nb - K_e| within this counts as equal.
  double equal_tol = 1e-9;
  /// Pairs closer than this are re-evaluated in exact arithmetic.
  double exact_window = 1e-6;
  /// Worker threads for the parallel map; 0 picks the hardware count.
  std::size_t threads = 0;
  std::size_t batch = 4096;
};

struct CensusResult {
  std::optional<std::size_t> n;  // common order, when uniform
  std::size_t total = 0;         // graphs evaluated
  std::size_t count_nb_ge_e = 0;
  std::vector<std::string> equal_list;
  std::vector<std::string> nb_ge_e_list;  // includes the equal ones
  std::vector<CensusRecord> records;      // sorted by graph_id
  std::vector<CensusError> rejected;      // well-formed but inadmissible
  std::vector<CensusError> errors;        // malformed or failed
};

/// Why g is not admissible (disconnected, min degree < 2, cycle), or nullopt.
std::optional<std::string> census_rejection(const Graph& g);

/// K_e from the vertex spectrum and the edge identity, K_nb from the trace
/// of the fundamental matrix of P_nb. Near ties are settled exactly.
CensusRecord census_record(const Graph& g, const CensusOptions& options = {});

/// Every admissible graph on n vertices, 4 <= n <= 8.
CensusResult census_nb_vs_edge(std::size_t n, const CensusOptions& options = {});

/// graph6 lines; blank lines are skipped, bad lines become errors.
CensusResult census_nb_vs_edge(std::istream& graph6_lines, const CensusOptions& options = {});

void write_census_csv(std::ostream& out, const CensusResult& result);
nlohmann::json census_summary(const CensusResult& result);

struct SweepRow {
  std::size_t k = 0, a = 0, b = 0;
  Rational k_e;
  Rational k_nb;
  /// "closed_form", or "engine" for k = 1 where K_nb has no closed form.
  std::string nb_source = "closed_form";
};

struct SweepResult {
  std::size_t n = 0;
  std::vector<SweepRow> rows;
  std::vector<std::string> notes;
};

/// k = 2 .. n-4 with a = b = (n-k+2)/2; k without an integral split is
/// skipped with a note.
SweepResult barbell_sweep(std::size_t n);

/// Every CB(k, a, b) with a >= b >= 3, k >= 1 and a + b + k - 2 = n.
SweepResult barbell_sweep_general(std::size_t n);

/// Header k,a,b,k_e,k_nb,k_e_float,k_nb_float,nb_source.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

}  // namespace kemeny
