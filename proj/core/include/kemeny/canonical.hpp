#pragma once

#include <string>
#include <vector>

#include "kemeny/graph.hpp"

namespace kemeny {

using Permutation = std::vector<Vertex>;

struct CanonicalForm {
  /// labeling[v] is the canonical label of vertex v.
  Permutation labeling;
  Graph graph;
  std::string graph6;
  /// Generators of the automorphism group (identity omitted).
  std::vector<Permutation> generators;
};

/// Individualization-refinement canonical labelling: colour refinement to an
/// equitable partition, branching on the first non-singleton cell, keeping
/// the lexicographically largest leaf certificate. Subtrees are pruned with
/// the automorphisms found along the way. Supports n <= 64.
CanonicalForm canonical_form(const Graph& g);

std::string canonical_graph6(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Orbit representative (smallest member) of each vertex under the group
/// generated by `generators`.
std::vector<Vertex> orbits(std::size_t n, const std::vector<Permutation>& generators);

}  // namespace kemeny
