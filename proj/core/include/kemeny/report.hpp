#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kemeny/chain_matrices.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

enum class Route { mfpt, spectrum, charpoly, resistance };

std::string_view to_string(Route route);

struct ChainSummary {
  ChainKind kind = ChainKind::vertex;
  std::size_t states = 0;
  std::map<Route, double> routes;
  std::optional<Rational> exact;
  double value = 0;         // exact value when known, else the spectral route
  double residual = 0;      // max pairwise route disagreement
  double kappa_spread = 0;  // max kappa_i - min kappa_i
  std::vector<std::string> failures;  // routes that could not be evaluated
};

struct KemenyReport {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;

  ChainSummary vertex;
  ChainSummary edge;
  std::optional<ChainSummary> nb;
  std::string nb_omitted_reason;

  double identity_residual = 0;  // |K_e - K_v - (2m - n)|
  bool identity_exact = false;   // zero in rational arithmetic

  double tolerance = 1e-9;
  bool passed = true;
  std::vector<std::string> failures;

  double k_vertex() const { return vertex.value; }
  double k_edge() const { return edge.value; }
  std::optional<double> k_nb() const {
    return nb ? std::optional<double>(nb->value) : std::nullopt;
  }
};

struct TripleOptions {
  ScalarPolicy scalars;
  /// Route residuals must stay within tolerance * max(1, |K|).
  double tolerance = 1e-9;
  /// When false a graph without P_nb yields a report with nb omitted;
  /// when true it is an error.
  bool require_nb = false;
  bool include_nb = true;
  /// Applied to every transition matrix after construction. Test hook.
  std::function<void(ChainMatrix&)> matrix_hook;
};

/// K_v, K_e and (when defined) K_nb, each by every route. Throws on
/// construction errors; route disagreement marks the report failed.
KemenyReport kemeny_triple(const Graph& g, const TripleOptions& options = {});

/// Rounds to 12 significant digits.
double round12(double x);

/// Exact entries print as "p/q" strings, floats with 12 significant digits.
nlohmann::json to_json(const KemenyReport& report);
nlohmann::json to_json(const ChainSummary& chain);

}  // namespace kemeny
