#include "kemeny/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "kemeny/canonical.hpp"
#include "kemeny/error.hpp"
#include "kemeny/graph6.hpp"

namespace kemeny {

namespace {

struct Node {
  Graph graph;                         // canonically labelled
  std::vector<Permutation> generators;  // automorphisms in that labelling
};

Node make_node(const CanonicalForm& cf) {
  Node node{cf.graph, {}};
  node.generators.reserve(cf.generators.size());
  const std::size_t n = cf.labeling.size();
  for (const auto& g : cf.generators) {
    Permutation conj(n);
    for (Vertex x = 0; x < n; ++x) conj[cf.labeling[x]] = cf.labeling[g[x]];
    node.generators.push_back(std::move(conj));
  }
  return node;
}

/// Subsets of the vertex set, one per orbit under the generators.
std::vector<std::uint32_t> subset_representatives(std::size_t k, const std::vector<Permutation>& gens) {
  const std::uint32_t count = std::uint32_t{1} << k;
  std::vector<std::uint32_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      std::uint32_t image = 0;
      for (Vertex v = 0; v < k; ++v)
        if (mask >> v & 1u) image |= 1u << g[v];
      std::uint32_t a = find(mask), b = find(image);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> reps;
  for (std::uint32_t mask = 0; mask < count; ++mask)
    if (find(mask) == mask) reps.push_back(mask);
  return reps;
}

template <class Emit>
void extend(const Node& parent, Emit&& emit) {
  const std::size_t k = parent.graph.order();
  std::vector<std::pair<Vertex, Vertex>> base;
  base.reserve(parent.graph.size() + k);
  for (const auto& e : parent.graph.edges()) base.emplace_back(e.u, e.v);
  for (std::uint32_t mask : subset_representatives(k, parent.generators)) {
    auto edges = base;
    for (Vertex v = 0; v < k; ++v)
      if (mask >> v & 1u) edges.emplace_back(v, static_cast<Vertex>(k));
    const Graph child = Graph::from_edge_list(k + 1, edges);
    CanonicalForm cf = canonical_form(child);
    Vertex last = 0;
    while (cf.labeling[last] != k) ++last;
    const auto orbit = orbits(k + 1, cf.generators);
    if (orbit[k] == orbit[last]) emit(cf);
  }
}

void require_enumerable(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw DomainError("built-in enumeration supports 1 <= n <= " +
                      std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n) +
                      "; supply larger orders as graph6");
}

std::vector<Graph> sorted_by_graph6(std::vector<Graph> graphs) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) keys.emplace_back(to_graph6(graphs[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Graph> out;
  out.reserve(graphs.size());
  for (const auto& [key, i] : keys) out.push_back(std::move(graphs[i]));
  return out;
}

}  // namespace

void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  require_enumerable(n);
  std::vector<Node> level{Node{Graph::from_edge_list(1, {}), {}}};
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::vector<Node> next;
    for (const auto& parent : level)
      extend(parent, [&](const CanonicalForm& cf) { next.push_back(make_node(cf)); });
    level = std::move(next);
  }
  if (n == 1) {
    visit(level.front().graph);
    return;
  }
  for (const auto& parent : level) extend(parent, [&](const CanonicalForm& cf) { visit(cf.graph); });
}

std::vector<Graph> enumerate_all_graphs(std::size_t n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
  return sorted_by_graph6(std::move(out));
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) {
    if (is_connected(g)) out.push_back(g);
  });
  return sorted_by_graph6(std::move(out));
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t min_degree, bool exclude_cycles) {
  if (n < kMinCensusOrder || n > kMaxCensusOrder)
    throw DomainError("built-in generation supports 4 <= n <= 8, got n = " + std::to_string(n) +
                      "; for other orders pipe a graph6 corpus through --input");
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) {
    if (!is_connected(g) || g.min_degree() < min_degree) return;
    if (exclude_cycles && g.size() == n && g.max_degree() == 2) return;
    out.push_back(g);
  });
  return sorted_by_graph6(std::move(out));
}

}  // namespace kemeny
