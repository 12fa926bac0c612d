#include "kemeny/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "kemeny/error.hpp"

namespace kemeny {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph Graph::from_edge_list(std::size_t n,
                            std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (n == 0) throw ValidationError("graph must have at least one vertex");

  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw ValidationError("vertex out of range in pair " + pair_text(a, b) +
                            " for n = " + std::to_string(n));
    }
    if (a == b) throw ValidationError("self-loop " + pair_text(a, b));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw ValidationError("duplicate edge " + pair_text(dup->u, dup->v));
  }

  g.degrees_.assign(n, 0);
  g.adjacency_.assign(n, {});
  for (const auto& e : g.edges_) {
    ++g.degrees_[e.u];
    ++g.degrees_[e.v];
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::min_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::max_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  for (Vertex start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    auto& row = dist[s];
    row[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == -1) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

StructuralProfile profile(const Graph& g) {
  StructuralProfile p;
  const std::size_t n = g.order();
  p.connected = is_connected(g);
  p.min_degree = g.min_degree();

  const auto& deg = g.degrees();
  std::set<std::size_t> distinct(deg.begin(), deg.end());
  if (distinct.size() == 1) p.regular_degree = *distinct.begin();

  auto coloring = two_coloring(g);
  p.bipartite = coloring.has_value();

  p.is_cycle = p.connected && n >= 3 && p.regular_degree == std::size_t{2};

  // A connected bipartite graph has a unique bipartition, so biregularity is
  // well defined only in that case.
  if (p.bipartite && p.connected && g.size() > 0) {
    std::set<std::size_t> side_deg[2];
    std::size_t side_count[2] = {0, 0};
    for (Vertex v = 0; v < n; ++v) {
      side_deg[(*coloring)[v]].insert(deg[v]);
      ++side_count[(*coloring)[v]];
    }
    if (side_deg[0].size() == 1 && side_deg[1].size() == 1) {
      std::size_t c = *side_deg[0].begin();
      std::size_t d = *side_deg[1].begin();
      std::size_t r = side_count[0];
      std::size_t s = side_count[1];
      if (c > d || (c == d && r < s)) {
        std::swap(c, d);
        std::swap(r, s);
      }
      p.biregular = Biregular{c, d, r, s};
    }
  }
  return p;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " m=" << g.size() << " edges=[";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) os << ",";
    first = false;
    os << e.u << "-" << e.v;
  }
  os << "]";
  return os.str();
}

}  // namespace kemeny
