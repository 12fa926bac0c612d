#include "kemeny/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "kemeny/error.hpp"

namespace kemeny {

namespace {

using PairList = std::vector<std::pair<Vertex, Vertex>>;

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

Graph gen_complete(std::size_t n) {
  if (n < 1) throw DomainError("complete graph needs n >= 1");
  PairList pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(vx(i), vx(j));
  return Graph::from_edge_list(n, pairs);
}

Graph gen_complete_bipartite(std::size_t c, std::size_t d) {
  if (c < 1 || d < 1) throw DomainError("complete bipartite graph needs both parts >= 1");
  PairList pairs;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < d; ++j) pairs.emplace_back(vx(i), vx(c + j));
  return Graph::from_edge_list(c + d, pairs);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs n >= 3, got " + std::to_string(n));
  PairList pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(vx(i), vx((i + 1) % n));
  return Graph::from_edge_list(n, pairs);
}

Graph gen_path(std::size_t k) {
  if (k < 1) throw DomainError("path needs k >= 1");
  PairList pairs;
  for (std::size_t i = 0; i + 1 < k; ++i) pairs.emplace_back(vx(i), vx(i + 1));
  return Graph::from_edge_list(k, pairs);
}

Graph gen_star(std::size_t leaves) { return gen_complete_bipartite(1, leaves); }

Graph gen_petersen() {
  PairList pairs;
  for (std::size_t i = 0; i < 5; ++i) {
    pairs.emplace_back(vx(i), vx((i + 1) % 5));          // outer 5-cycle
    pairs.emplace_back(vx(i), vx(i + 5));                // spokes
    pairs.emplace_back(vx(5 + i), vx(5 + (i + 2) % 5));  // inner pentagram
  }
  return Graph::from_edge_list(10, pairs);
}

Graph gen_hypercube(std::size_t dim) {
  if (dim < 1 || dim > 6) throw DomainError("hypercube dimension must be in 1..6");
  const std::size_t n = std::size_t{1} << dim;
  PairList pairs;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) pairs.emplace_back(vx(v), vx(w));
    }
  return Graph::from_edge_list(n, pairs);
}

Graph gen_necklace(std::size_t beads) {
  if (beads < 2) {
    throw DomainError("necklace needs at least 2 beads, got " + std::to_string(beads));
  }
  PairList pairs;
  std::size_t next = 0;

  // Returns the apex, the bead's single attachment vertex.
  auto end_bead = [&]() {
    const std::size_t a = next, b = next + 1, c = next + 2, e = next + 3, apex = next + 4;
    next += 5;
    for (auto [x, y] : {std::pair{a, b}, {b, c}, {e, a}, {a, c}, {b, e}, {c, apex}, {e, apex}})
      pairs.emplace_back(vx(x), vx(y));
    return apex;
  };

  std::size_t prev = end_bead();
  for (std::size_t i = 0; i + 2 < beads; ++i) {
    const std::size_t entry = next, top = next + 1, exit = next + 2, bottom = next + 3;
    next += 4;
    for (auto [x, y] : {std::pair{entry, top}, {top, exit}, {exit, bottom}, {bottom, top},
                        {entry, bottom}})
      pairs.emplace_back(vx(x), vx(y));
    pairs.emplace_back(vx(prev), vx(entry));
    prev = exit;
  }
  const std::size_t last = end_bead();
  pairs.emplace_back(vx(prev), vx(last));
  return Graph::from_edge_list(next, pairs);
}

Graph gen_cycle_barbell(const BarbellParams& p) {
  if (p.a < 3 || p.b < 3) {
    throw DomainError("cycle barbell needs a, b >= 3, got a=" + std::to_string(p.a) +
                      " b=" + std::to_string(p.b));
  }
  if (p.k < 1) throw DomainError("cycle barbell needs k >= 1");

  PairList pairs;
  for (std::size_t i = 0; i < p.a; ++i) pairs.emplace_back(vx(i), vx((i + 1) % p.a));

  // Path 0 -> a -> a+1 -> ... -> end, with k-2 interior vertices.
  std::size_t cursor = 0;
  std::size_t next = p.a;
  for (std::size_t i = 0; i + 1 < p.k; ++i) {
    pairs.emplace_back(vx(cursor), vx(next));
    cursor = next++;
  }

  // b-cycle through the path end.
  std::size_t prev = cursor;
  for (std::size_t i = 1; i < p.b; ++i) {
    pairs.emplace_back(vx(prev), vx(next));
    prev = next++;
  }
  pairs.emplace_back(vx(prev), vx(cursor));
  return Graph::from_edge_list(next, pairs);
}

Graph gen_linked_squares() {
  // Squares 0-1-2-3 and 4-5-6-7; vertices 1,3,5,7 have degree 3.
  return Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                    {6, 7}, {7, 4}, {1, 8}, {8, 5}, {3, 9}, {9, 7}});
}

Graph one_sum(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (v1 >= g1.order() || v2 >= g2.order()) {
    throw ValidationError("one_sum vertex out of range");
  }
  std::vector<Vertex> map(g2.order());
  Vertex next = static_cast<Vertex>(g1.order());
  for (Vertex w = 0; w < g2.order(); ++w) map[w] = (w == v2) ? v1 : next++;

  PairList pairs;
  for (const auto& e : g1.edges()) pairs.emplace_back(e.u, e.v);
  for (const auto& e : g2.edges()) pairs.emplace_back(map[e.u], map[e.v]);
  return Graph::from_edge_list(g1.order() + g2.order() - 1, pairs);
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  if (n < 1) throw DomainError("random graph needs n >= 1");
  std::bernoulli_distribution coin(p);
  for (;;) {
    PairList pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) pairs.emplace_back(vx(i), vx(j));
    Graph g = Graph::from_edge_list(n, pairs);
    if (is_connected(g)) return g;
  }
}

Graph random_regular_graph(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  if (d >= n || (n * d) % 2 != 0) {
    throw DomainError("no simple d-regular graph with n=" + std::to_string(n) +
                      ", d=" + std::to_string(d));
  }
  std::vector<Vertex> points;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < d; ++i) points.push_back(vx(v));

  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<Vertex, Vertex>> seen;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      Vertex a = points[i], b = points[i + 1];
      if (a == b) {
        ok = false;
        break;
      }
      ok = seen.emplace(std::min(a, b), std::max(a, b)).second;
    }
    if (!ok) continue;
    PairList pairs(seen.begin(), seen.end());
    Graph g = Graph::from_edge_list(n, pairs);
    if (is_connected(g)) return g;
  }
}

}  // namespace kemeny
