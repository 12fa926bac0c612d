#include <doctest.h>

#include <random>
#include <sstream>

#include "kemeny/canonical.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/graph6.hpp"
#include "oracles.hpp"

using namespace kemeny;

TEST_SUITE("graph_core") {
  TEST_CASE("construction validates the edge list") {
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {1, 0}}), ValidationError);
    const Graph g = Graph::from_edge_list(4, {{2, 1}, {0, 3}, {1, 0}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.edges().front() == Edge{0, 1});
    CHECK(g.degree(0) == 2);
    CHECK(g.neighbors(0) == std::vector<Vertex>{1, 3});
    CHECK(g.adjacent(3, 0));
    CHECK_FALSE(g.adjacent(2, 3));
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
  }

  TEST_CASE("structural profile") {
    const auto pet = profile(gen_petersen());
    CHECK(pet.connected);
    CHECK(pet.regular_degree == 3u);
    CHECK_FALSE(pet.bipartite);
    CHECK_FALSE(pet.biregular.has_value());

    const auto k23 = profile(gen_complete_bipartite(2, 3));
    CHECK(k23.bipartite);
    REQUIRE(k23.biregular.has_value());
    CHECK(*k23.biregular == Biregular{2, 3, 3, 2});

    CHECK(profile(gen_cycle(6)).is_cycle);
    CHECK_FALSE(profile(gen_path(4)).is_cycle);
    CHECK_FALSE(is_connected(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(two_coloring(gen_cycle(5)).has_value());
    CHECK(two_coloring(gen_hypercube(3)).has_value());
  }

  TEST_CASE("distances") {
    const auto d = distance_matrix(gen_path(4));
    CHECK(d[0][3] == 3);
    CHECK(d[2][1] == 1);
    const auto split = distance_matrix(Graph::from_edge_list(3, {{0, 1}}));
    CHECK(split[0][2] == -1);
  }
}

TEST_SUITE("graph6") {
  TEST_CASE("hand-decoded strings") {
    const Graph empty5 = parse_graph6("D??");
    CHECK(empty5.order() == 5);
    CHECK(empty5.size() == 0);
    CHECK(parse_graph6("C~") == gen_complete(4));
    const Graph empty3 = parse_graph6("B?");
    CHECK(empty3.order() == 3);
    CHECK(empty3.size() == 0);
    CHECK(to_graph6(gen_complete(4)) == "C~");
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C\x20"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);
    CHECK_THROWS_AS(parse_graph6("B@"), ParseError);  // padding bit set
  }

  TEST_CASE("line reader strips header and line endings") {
    std::istringstream in(">>graph6<<C~\r\n\nD??\n");
    std::string line;
    std::vector<std::string> lines;
    while (read_graph6_line(in, line)) lines.push_back(line);
    CHECK(lines == std::vector<std::string>{"C~", "", "D??"});
  }

  TEST_CASE("round trip on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + rng() % kGraph6MaxOrder;
      std::vector<std::pair<Vertex, Vertex>> edges;
      std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0, 1)(rng));
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
          if (coin(rng)) edges.emplace_back(i, j);
      const Graph g = Graph::from_edge_list(n, edges);
      const std::string s = to_graph6(g);
      CHECK(parse_graph6(s) == g);
      CHECK(to_graph6(parse_graph6(s)) == s);
    }
  }
}

TEST_SUITE("generators") {
  TEST_CASE("named families") {
    CHECK(gen_complete(5).size() == 10);
    CHECK(gen_cycle(7).size() == 7);
    CHECK(gen_path(5).size() == 4);
    CHECK(gen_star(3).order() == 4);
    const Graph q4 = gen_hypercube(4);
    CHECK(q4.order() == 16);
    CHECK(profile(q4).regular_degree == 4u);
    const Graph pet = gen_petersen();
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    CHECK_THROWS_AS(gen_cycle(2), DomainError);
  }

  TEST_CASE("necklaces are cubic on 4k+2 vertices") {
    const Graph n2 = gen_necklace(2);
    CHECK(n2.order() == 10);
    CHECK(n2.size() == 15);
    for (std::size_t k = 2; k <= 12; ++k) {
      const Graph g = gen_necklace(k);
      CHECK(g.order() == 4 * k + 2);
      CHECK(is_connected(g));
      CHECK(profile(g).regular_degree == 3u);
    }
    CHECK_THROWS_AS(gen_necklace(1), DomainError);
  }

  TEST_CASE("cycle barbells") {
    const Graph cb = gen_cycle_barbell({3, 4, 6});
    CHECK(cb.order() == 11);
    CHECK(cb.size() == 12);
    const Graph small = gen_cycle_barbell({2, 3, 3});
    CHECK(small.order() == 6);
    CHECK(small.size() == 7);
    const Graph bowtie = gen_cycle_barbell({1, 3, 3});
    CHECK(bowtie.order() == 5);
    CHECK(bowtie.size() == 6);
    CHECK(bowtie.max_degree() == 4);
    CHECK_THROWS_AS(gen_cycle_barbell({2, 2, 3}), DomainError);
    CHECK_THROWS_AS(gen_cycle_barbell({0, 3, 3}), DomainError);
  }

  TEST_CASE("one-sums compose barbells") {
    const Graph tadpole = one_sum(gen_cycle(4), 0, gen_path(3), 0);
    CHECK(tadpole.order() == 6);
    CHECK(tadpole.size() == 6);
    for (BarbellParams p : {BarbellParams{2, 3, 3}, BarbellParams{3, 4, 6}, BarbellParams{5, 7, 3},
                            BarbellParams{1, 4, 5}}) {
      // Path endpoints are 0 and k-1; cycle vertex 0 is the attachment point.
      const Graph left = one_sum(gen_cycle(p.a), 0, gen_path(p.k), 0);
      const Vertex path_end = p.k == 1 ? 0 : static_cast<Vertex>(p.a + p.k - 2);
      const Graph whole = one_sum(left, path_end, gen_cycle(p.b), 0);
      CHECK(isomorphic(whole, gen_cycle_barbell(p)));
      if (whole.order() <= 8) CHECK(oracle::brute_force_isomorphic(whole, gen_cycle_barbell(p)));
    }
  }

  TEST_CASE("linked squares is (2,3)-biregular on 10 vertices") {
    const Graph g = gen_linked_squares();
    CHECK(g.order() == 10);
    const auto p = profile(g);
    REQUIRE(p.biregular.has_value());
    CHECK(*p.biregular == Biregular{2, 3, 6, 4});
  }

  TEST_CASE("random generators") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
      const Graph g = random_regular_graph(12, 3, rng);
      CHECK(is_connected(g));
      CHECK(profile(g).regular_degree == 3u);
      CHECK(is_connected(random_connected_graph(9, 0.3, rng)));
    }
    CHECK_THROWS_AS(random_regular_graph(7, 3, rng), DomainError);
  }
}
