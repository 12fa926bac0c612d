#include "kemeny/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "kemeny/error.hpp"
#include "kemeny/graph6.hpp"

namespace kemeny {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;
using Certificate = std::vector<std::uint64_t>;

std::uint64_t mask_of(const Cell& cell) {
  std::uint64_t m = 0;
  for (Vertex v : cell) m |= std::uint64_t{1} << v;
  return m;
}

/// Splits cells by neighbour counts into each cell until equitable. Only
/// the cell structure is consulted, so the result commutes with relabelling.
void refine(const std::vector<std::uint64_t>& adj, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const std::uint64_t splitter = mask_of(cells[s]);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        Cell& cell = cells[c];
        if (cell.size() == 1) continue;
        std::vector<int> count(cell.size());
        for (std::size_t i = 0; i < cell.size(); ++i) count[i] = std::popcount(adj[cell[i]] & splitter);
        if (std::all_of(count.begin(), count.end(), [&](int x) { return x == count[0]; })) continue;
        std::vector<std::size_t> order(cell.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return count[a] < count[b]; });
        Partition pieces;
        for (std::size_t i = 0; i < order.size(); ++i) {
          if (i == 0 || count[order[i]] != count[order[i - 1]]) pieces.emplace_back();
          pieces.back().push_back(cell[order[i]]);
        }
        for (auto& piece : pieces) std::sort(piece.begin(), piece.end());
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

struct UnionFind {
  std::vector<Vertex> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Vertex{0}); }
  Vertex find(Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Search {
 public:
  explicit Search(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    for (const auto& e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  void run() {
    Partition root{Cell(n_)};
    std::iota(root[0].begin(), root[0].end(), Vertex{0});
    visit(std::move(root));
  }

  const Permutation& labeling() const { return best_lab_; }
  const std::vector<Permutation>& generators() const { return gens_; }

 private:
  /// Returns the depth whose loop should resume.
  std::size_t visit(Partition cells) {
    const std::size_t depth = path_.size();
    const std::size_t parent = depth == 0 ? 0 : depth - 1;
    refine(adj_, cells);
    if (cells.size() == n_) return leaf(cells, parent);

    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    const Cell candidates = cells[target];
    std::vector<Vertex> explored;
    for (Vertex v : candidates) {
      if (!explored.empty() && equivalent_to_explored(v, explored)) continue;
      Partition child = cells;
      Cell rest;
      for (Vertex w : candidates)
        if (w != v) rest.push_back(w);
      child[target] = Cell{v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
      path_.push_back(v);
      const std::size_t resume = visit(std::move(child));
      path_.pop_back();
      explored.push_back(v);
      if (resume < depth) return resume;
    }
    return parent;
  }

  bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored) {
    UnionFind uf(n_);
    for (const auto& g : gens_) {
      bool fixes = true;
      for (Vertex p : path_)
        if (g[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (Vertex x = 0; x < n_; ++x) uf.unite(x, g[x]);
    }
    const Vertex root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex w) { return uf.find(w) == root; });
  }

  std::size_t leaf(const Partition& cells, std::size_t parent) {
    Permutation lab(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) lab[cells[i][0]] = static_cast<Vertex>(i);
    Certificate cert(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t row = 0;
      for (std::uint64_t bits = adj_[v]; bits; bits &= bits - 1)
        row |= std::uint64_t{1} << lab[static_cast<Vertex>(std::countr_zero(bits))];
      cert[lab[v]] = row;
    }

    if (!have_first_) {
      have_first_ = true;
      first_path_ = path_;
      first_lab_ = lab;
      first_cert_ = cert;
      best_lab_ = lab;
      best_cert_ = cert;
      return parent;
    }
    if (cert == first_cert_) {
      record_automorphism(lab, first_lab_);
      std::size_t gca = 0;
      while (gca < path_.size() && gca < first_path_.size() && path_[gca] == first_path_[gca]) ++gca;
      return std::min(gca, parent);
    }
    if (cert == best_cert_) {
      record_automorphism(lab, best_lab_);
      return parent;
    }
    if (cert > best_cert_) {
      best_cert_ = cert;
      best_lab_ = lab;
    }
    return parent;
  }

  void record_automorphism(const Permutation& lab, const Permutation& other) {
    Permutation inv(n_);
    for (Vertex v = 0; v < n_; ++v) inv[other[v]] = v;
    Permutation gamma(n_);
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) {
      gamma[v] = inv[lab[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) gens_.push_back(std::move(gamma));
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<Vertex> path_;
  bool have_first_ = false;
  std::vector<Vertex> first_path_;
  Permutation first_lab_;
  Certificate first_cert_;
  Permutation best_lab_;
  Certificate best_cert_;
  std::vector<Permutation> gens_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > 64) throw DomainError("canonical form supports at most 64 vertices");
  Search search(g);
  search.run();
  CanonicalForm out;
  out.labeling = search.labeling();
  out.generators = search.generators();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) {
    Vertex a = out.labeling[e.u], b = out.labeling[e.v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  out.graph = Graph::from_edge_list(g.order(), edges);
  if (g.order() <= kGraph6MaxOrder) out.graph6 = to_graph6(out.graph);
  return out;
}

std::string canonical_graph6(const Graph& g) {
  if (g.order() > kGraph6MaxOrder) throw DomainError("graph6 supports at most 62 vertices");
  return canonical_form(g).graph6;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

std::vector<Vertex> orbits(std::size_t n, const std::vector<Permutation>& generators) {
  UnionFind uf(n);
  for (const auto& g : generators)
    for (Vertex x = 0; x < n; ++x) uf.unite(x, g[x]);
  std::vector<Vertex> out(n);
  for (Vertex x = 0; x < n; ++x) out[x] = uf.find(x);
  return out;
}

}  // namespace kemeny
