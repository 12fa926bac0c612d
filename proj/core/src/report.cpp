#include "kemeny/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "kemeny/error.hpp"
#include "kemeny/graph6.hpp"
#include "kemeny/kemeny.hpp"

namespace kemeny {

namespace {

void fill_residual(ChainSummary& c) {
  double worst = 0;
  for (auto a = c.routes.begin(); a != c.routes.end(); ++a)
    for (auto b = std::next(a); b != c.routes.end(); ++b)
      worst = std::max(worst, std::abs(a->second - b->second));
  c.residual = worst;
}

template <class F>
void attempt(ChainSummary& c, Route route, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    c.failures.push_back(std::string(to_string(c.kind)) + " " + std::string(to_string(route)) +
                         " route failed: " + e.what());
  }
}

ChainSummary summarize(ChainMatrix p, const Graph* resistance_graph, const TripleOptions& options) {
  if (options.matrix_hook) options.matrix_hook(p);
  ChainSummary c;
  c.kind = p.kind();
  c.states = p.order();
  if (!p.is_row_stochastic(1e-12))
    c.failures.push_back(std::string(to_string(c.kind)) + " matrix is not row-stochastic");
  attempt(c, Route::mfpt, [&] {
    const auto mf = kemeny_mfpt(p);
    c.kappa_spread = mf.spread;
    c.routes[Route::mfpt] = mf.value;
  });
  attempt(c, Route::spectrum, [&] { c.routes[Route::spectrum] = kemeny_spectrum(p); });
  attempt(c, Route::charpoly, [&] {
    const auto cp = kemeny_charpoly(p);
    c.routes[Route::charpoly] = cp.value;
    c.exact = cp.exact;
  });
  if (resistance_graph)
    attempt(c, Route::resistance, [&] { c.routes[Route::resistance] = kemeny_resistance(*resistance_graph); });
  if (c.exact) {
    c.value = to_double(*c.exact);
  } else if (auto it = c.routes.find(Route::spectrum); it != c.routes.end()) {
    c.value = it->second;
  } else {
    c.value = c.routes.empty() ? std::nan("") : c.routes.begin()->second;
  }
  fill_residual(c);
  return c;
}

void check(KemenyReport& r, const ChainSummary& c) {
  if (!c.failures.empty()) {
    r.passed = false;
    r.failures.insert(r.failures.end(), c.failures.begin(), c.failures.end());
  }
  const double scale = std::max(1.0, std::abs(c.value));
  if (!(c.residual <= r.tolerance * scale)) {
    r.passed = false;
    r.failures.push_back(std::string(to_string(c.kind)) + " routes disagree by " +
                         std::to_string(c.residual));
  }
  if (!(c.kappa_spread <= r.tolerance * scale)) {
    r.passed = false;
    r.failures.push_back(std::string(to_string(c.kind)) + " kappa not constant (spread " +
                         std::to_string(c.kappa_spread) + ")");
  }
  if (!std::isfinite(c.value) || c.value <= 0) {
    r.passed = false;
    r.failures.push_back(std::string(to_string(c.kind)) + " value not finite and positive");
  }
}

nlohmann::json scalar(double value, const std::optional<Rational>& exact) {
  if (exact) return to_string(*exact);
  return round12(value);
}

}  // namespace

std::string_view to_string(Route route) {
  switch (route) {
    case Route::mfpt: return "mfpt";
    case Route::spectrum: return "spectrum";
    case Route::charpoly: return "charpoly";
    case Route::resistance: return "resistance";
  }
  return "?";
}

KemenyReport kemeny_triple(const Graph& g, const TripleOptions& options) {
  if (!(options.tolerance > 0)) throw ValidationError("tolerance must be positive");
  if (!is_connected(g)) throw ReducibleChainError("graph is disconnected; every walk is reducible");
  KemenyReport r;
  r.graph6 = g.order() <= kGraph6MaxOrder ? to_graph6(g) : std::string();
  r.n = g.order();
  r.m = g.size();
  r.tolerance = options.tolerance;

  const OrientedEdgeIndex idx(g);
  r.vertex = summarize(vertex_transition(g, options.scalars), &g, options);
  r.edge = summarize(edge_transition(g, idx, options.scalars), nullptr, options);

  if (options.include_nb) {
    if (auto why = nb_unavailable_reason(g)) {
      if (options.require_nb) throw ChainError(*why);
      r.nb_omitted_reason = *why;
    } else {
      r.nb = summarize(nb_transition(g, idx, options.scalars), nullptr, options);
    }
  } else {
    r.nb_omitted_reason = "not requested";
  }

  const double shift = 2.0 * static_cast<double>(r.m) - static_cast<double>(r.n);
  if (r.vertex.exact && r.edge.exact) {
    const Rational diff = *r.edge.exact - *r.vertex.exact - Rational(static_cast<long>(2 * r.m) -
                                                                     static_cast<long>(r.n));
    r.identity_exact = diff == 0;
    r.identity_residual = std::abs(to_double(diff));
  } else {
    r.identity_residual = std::abs(r.edge.value - r.vertex.value - shift);
  }

  check(r, r.vertex);
  check(r, r.edge);
  if (r.nb) check(r, *r.nb);
  const bool identity_ok = (r.vertex.exact && r.edge.exact)
                               ? r.identity_exact
                               : r.identity_residual <= r.tolerance * std::max(1.0, r.edge.value);
  if (!identity_ok) {
    r.passed = false;
    r.failures.push_back("K_e - K_v - (2m - n) = " + std::to_string(r.identity_residual));
  }
  return r;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::json to_json(const ChainSummary& c) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(c.kind));
  j["states"] = c.states;
  j["mode"] = c.exact ? "exact" : "float";
  j["value"] = scalar(c.value, c.exact);
  nlohmann::json routes = nlohmann::json::object();
  for (const auto& [route, v] : c.routes) routes[std::string(to_string(route))] = round12(v);
  j["routes"] = routes;
  j["residual"] = c.residual;
  j["kappa_spread"] = c.kappa_spread;
  return j;
}

nlohmann::json to_json(const KemenyReport& r) {
  nlohmann::json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k_vertex"] = scalar(r.vertex.value, r.vertex.exact);
  j["k_edge"] = scalar(r.edge.value, r.edge.exact);
  j["k_nb"] = r.nb ? scalar(r.nb->value, r.nb->exact) : nlohmann::json(nullptr);
  if (!r.nb) j["k_nb_omitted"] = r.nb_omitted_reason;
  nlohmann::json chains;
  chains["vertex"] = to_json(r.vertex);
  chains["edge"] = to_json(r.edge);
  if (r.nb) chains["non_backtracking"] = to_json(*r.nb);
  j["chains"] = chains;
  j["identity_residual"] = r.identity_residual;
  if (r.vertex.exact && r.edge.exact) j["identity_exact"] = r.identity_exact;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["failures"] = r.failures;
  return j;
}

}  // namespace kemeny
