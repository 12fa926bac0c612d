#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "kemeny/canonical.hpp"
#include "kemeny/enumerate.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "kemeny/graph6.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

std::vector<Vertex> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::set<Permutation> brute_force_automorphisms(const Graph& g) {
  std::set<Permutation> out;
  Permutation p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    if (oracle::relabel(g, p) == g) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::set<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), Vertex{0});
  std::set<Permutation> group{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y(n);
        for (Vertex v = 0; v < n; ++v) y[v] = g[x[v]];
        if (group.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return group;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937_64 rng(51);
    std::vector<Graph> graphs{gen_petersen(), gen_hypercube(4), gen_complete(9), gen_necklace(4),
                              gen_cycle_barbell({4, 5, 6}), gen_linked_squares()};
    for (int i = 0; i < 40; ++i) graphs.push_back(random_connected_graph(5 + i % 20, 0.3, rng));
    for (const Graph& g : graphs) {
      const CanonicalForm cf = canonical_form(g);
      CHECK(oracle::relabel(g, cf.labeling) == cf.graph);
      for (int t = 0; t < 5; ++t) {
        const Graph h = oracle::relabel(g, shuffled(g.order(), rng));
        CHECK(canonical_graph6(h) == cf.graph6);
      }
      for (const auto& gamma : cf.generators) CHECK(oracle::relabel(g, gamma) == g);
    }
  }

  TEST_CASE("generators generate the full automorphism group") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 60; ++i) {
      const std::size_t n = 3 + i % 5;
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          if (rng() % 2) edges.emplace_back(a, b);
      const Graph g = Graph::from_edge_list(n, edges);
      CHECK(closure(n, canonical_form(g).generators) == brute_force_automorphisms(g));
    }
    CHECK(closure(10, canonical_form(gen_petersen()).generators).size() == 120);
  }

  TEST_CASE("isomorphism agrees with brute force") {
    std::mt19937_64 rng(57);
    for (int i = 0; i < 150; ++i) {
      const std::size_t n = 4 + i % 4;
      const Graph a = random_connected_graph(n, 0.5, rng);
      const Graph b = random_connected_graph(n, 0.5, rng);
      CHECK(isomorphic(a, b) == oracle::brute_force_isomorphic(a, b));
    }
    CHECK_FALSE(isomorphic(gen_cycle(6), gen_complete_bipartite(3, 3)));
    CHECK(isomorphic(gen_cycle_barbell({3, 4, 6}), gen_cycle_barbell({3, 6, 4})));
  }

  TEST_CASE("orbits") {
    const auto pet = orbits(10, canonical_form(gen_petersen()).generators);
    CHECK(std::all_of(pet.begin(), pet.end(), [](Vertex v) { return v == 0; }));
    const auto star = orbits(5, canonical_form(gen_star(4)).generators);
    CHECK(std::count(star.begin(), star.end(), star[1]) == 4);
    CHECK(star[0] == 0);
  }

  TEST_CASE("order limit") {
    CHECK_THROWS_AS(canonical_form(gen_path(65)), DomainError);
    CHECK_THROWS_AS(canonical_graph6(gen_path(63)), DomainError);
  }
}

TEST_SUITE("enumerate") {
  TEST_CASE("counts up to isomorphism") {
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853, 11117};
    for (std::size_t n = 1; n <= 8; ++n) {
      CAPTURE(n);
      CHECK(enumerate_all_graphs(n).size() == all[n - 1]);
      CHECK(enumerate_connected_graphs(n).size() == connected[n - 1]);
    }
  }

  TEST_CASE("no two outputs are isomorphic") {
    for (std::size_t n = 1; n <= 8; ++n) {
      std::set<std::string> ids;
      std::size_t seen = 0;
      for_each_graph(n, [&](const Graph& g) {
        ids.insert(canonical_graph6(g));
        ++seen;
      });
      CHECK(ids.size() == seen);
    }
  }

  TEST_CASE("small orders checked against brute force") {
    // Every labelled graph on 5 vertices lands on exactly one output.
    const auto reps = enumerate_all_graphs(5);
    std::set<std::string> rep_ids;
    for (const auto& g : reps) rep_ids.insert(canonical_graph6(g));
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      int bit = 0;
      for (Vertex a = 0; a < 5; ++a)
        for (Vertex b = a + 1; b < 5; ++b, ++bit)
          if (mask >> bit & 1u) edges.emplace_back(a, b);
      const Graph g = Graph::from_edge_list(5, edges);
      CHECK(rep_ids.count(canonical_graph6(g)) == 1);
      const auto hits = std::count_if(reps.begin(), reps.end(),
                                      [&](const Graph& r) { return oracle::brute_force_isomorphic(r, g); });
      CHECK(hits == 1);
    }
  }

  TEST_CASE("filtered families") {
    const auto four = enumerate_graphs(4, 2, true);
    REQUIRE(four.size() == 2);
    std::set<std::string> got{canonical_graph6(four[0]), canonical_graph6(four[1])};
    const Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(got == std::set<std::string>{canonical_graph6(gen_complete(4)), canonical_graph6(diamond)});
    const auto with_cycle = enumerate_graphs(4, 2, false);
    CHECK(with_cycle.size() == 3);

    auto sorted = enumerate_graphs(6, 2, true);
    CHECK(std::is_sorted(sorted.begin(), sorted.end(),
                         [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); }));
    CHECK_THROWS_AS(enumerate_graphs(9, 2, true), DomainError);
    CHECK_THROWS_AS(enumerate_graphs(3, 2, true), DomainError);
    CHECK_THROWS_AS(for_each_graph(10, [](const Graph&) {}), DomainError);
  }
}
