#pragma once

#include <cstddef>
#include <random>

#include "kemeny/graph.hpp"

namespace kemeny {

/// Cycle barbell CB(k, a, b): an a-cycle and a b-cycle joined through a path
/// on k vertices whose endpoints are identified with one vertex of each cycle.
struct BarbellParams {
  std::size_t k = 2;
  std::size_t a = 3;
  std::size_t b = 3;

  std::size_t order() const { return a + b + k - 2; }
  std::size_t size() const { return a + b + k - 1; }

  bool operator==(const BarbellParams&) const = default;
};

Graph gen_complete(std::size_t n);
/// Parts {0..c-1} and {c..c+d-1}.
Graph gen_complete_bipartite(std::size_t c, std::size_t d);
Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t k);
Graph gen_star(std::size_t leaves);
Graph gen_petersen();
Graph gen_hypercube(std::size_t dim);

/// Cubic chain of k beads on 4k+2 vertices. The two end beads are K4 minus
/// an edge plus an apex joined to the endpoints of the missing edge; the
/// k-2 middle beads are K4 minus the entry-exit edge. Consecutive beads are
/// joined by a single edge.
Graph gen_necklace(std::size_t beads);

/// Cycle 0..a-1; path interior a..a+k-3; cycle b on the remaining labels.
Graph gen_cycle_barbell(const BarbellParams& p);

/// The (2,3)-biregular graph on 10 vertices made of two 4-cycles whose
/// degree-3 vertices are joined pairwise through two subdivided edges.
Graph gen_linked_squares();

/// Disjoint union of g1 and g2 with v2 merged into v1. Vertices of g1 keep
/// their labels; the remaining vertices of g2 follow in increasing order.
Graph one_sum(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

/// Erdős–Rényi G(n, p) conditioned on connectivity by rejection.
Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Uniform simple connected d-regular graph via the pairing model with
/// rejection. Requires n*d even and d < n.
Graph random_regular_graph(std::size_t n, std::size_t d, std::mt19937_64& rng);

}  // namespace kemeny
