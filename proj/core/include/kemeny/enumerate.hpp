#pragma once

#include <functional>
#include <vector>

#include "kemeny/graph.hpp"

namespace kemeny {

constexpr std::size_t kMaxEnumerationOrder = 9;
constexpr std::size_t kMinCensusOrder = 4;
constexpr std::size_t kMaxCensusOrder = 8;

/// Every graph on n vertices exactly once up to isomorphism, canonically
/// labelled, in generation order. Built by canonical augmentation: a child
/// G + v is kept only when v lies in the automorphism orbit of the vertex
/// with the largest canonical label, and each parent contributes one
/// neighbourhood per orbit of its automorphism group. 1 <= n <= 9.
void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

/// All graphs on n vertices, sorted by canonical graph6.
std::vector<Graph> enumerate_all_graphs(std::size_t n);

/// Connected graphs on n vertices, sorted by canonical graph6.
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

/// Connected graphs with minimum degree >= min_degree, optionally without the
/// cycle C_n, sorted by canonical graph6. 4 <= n <= 8; larger orders are
/// rejected with a pointer to graph6 ingestion.
std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t min_degree, bool exclude_cycles);

}  // namespace kemeny
