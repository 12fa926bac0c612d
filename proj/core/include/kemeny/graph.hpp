#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kemeny {

using Vertex = std::uint32_t;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted and canonical (u < v), so two graphs compare equal
/// exactly when they have the same labelled edge set.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalises an edge list. Rejects self-loops,
  /// out-of-range endpoints and duplicate edges (in either orientation).
  static Graph from_edge_list(std::size_t n,
                              std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_edge_list(
      std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edge_list(
        n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  std::size_t degree(Vertex v) const { return degrees_.at(v); }

  /// Sorted neighbour list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Biregular parameters: c <= d, r vertices of degree c and s of degree d,
/// hence r >= s and c*r == d*s == m.
struct Biregular {
  std::size_t c = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  std::size_t s = 0;

  bool operator==(const Biregular&) const = default;
};

struct StructuralProfile {
  bool connected = false;
  std::size_t min_degree = 0;
  std::optional<std::size_t> regular_degree;
  std::optional<Biregular> biregular;
  bool bipartite = false;
  bool is_cycle = false;
};

StructuralProfile profile(const Graph& g);

bool is_connected(const Graph& g);

/// Two-colouring of a bipartite graph (colour of vertex 0 of each component
/// is 0), or nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// All-pairs shortest path distances by BFS; unreachable pairs are -1.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

std::string describe(const Graph& g);

}  // namespace kemeny
