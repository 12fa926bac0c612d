#include <doctest.h>

#include <random>

#include "kemeny/chain_matrices.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

const ScalarPolicy kExact{ScalarMode::exact, 1000};
const ScalarPolicy kFloat{ScalarMode::floating, 0};

std::vector<Graph> corpus(bool min_degree_two) {
  std::vector<Graph> out{gen_complete(4), gen_complete(5), gen_petersen(), gen_hypercube(3),
                         gen_complete_bipartite(2, 3), gen_cycle_barbell({3, 4, 6}),
                         gen_linked_squares()};
  if (!min_degree_two) {
    out.push_back(gen_path(5));
    out.push_back(gen_star(4));
    out.push_back(gen_cycle(6));
  }
  std::mt19937_64 rng(3);
  while (out.size() < 40) {
    const Graph g = random_connected_graph(4 + rng() % 6, 0.5, rng);
    if (min_degree_two && nb_unavailable_reason(g)) continue;
    out.push_back(g);
  }
  return out;
}

DenseMatrix<Rational> transpose(const DenseMatrix<Rational>& m) {
  DenseMatrix<Rational> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

}  // namespace

TEST_SUITE("chain_matrices") {
  TEST_CASE("oriented edge index pairs arcs with their reversals") {
    const Graph g = gen_petersen();
    const OrientedEdgeIndex idx(g);
    REQUIRE(idx.size() == 30);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const std::size_t r = idx.reverse(a);
      CHECK(idx.tail(r) == idx.head(a));
      CHECK(idx.head(r) == idx.tail(a));
      CHECK(idx.index(idx.tail(a), idx.head(a)) == a);
    }
    CHECK_THROWS_AS(idx.index(0, 0), ValidationError);
  }

  TEST_CASE("incidence identities hold exactly") {
    for (const Graph& g : corpus(false)) {
      const OrientedEdgeIndex idx(g);
      const auto ops = incidence_operators(g, idx, kExact);
      const auto& t = ops.t.exact();
      const auto& s = ops.s.exact();
      const auto& tau = ops.tau.exact();
      CHECK(t * s == adjacency_matrix(g, kExact).exact());
      CHECK(s * t == edge_adjacency_matrix(g, idx, kExact).exact());
      CHECK(s * t - tau == nb_adjacency_matrix(g, idx, kExact).exact());
      CHECK(tau * tau == DenseMatrix<Rational>::identity(idx.size()));
      CHECK(transpose(s) == t * tau);

      // D_e^-1 S = S D^-1
      DenseMatrix<Rational> de_inv(idx.size(), idx.size()), d_inv(g.order(), g.order());
      const ChainMatrix de_m = edge_degree_matrix(g, idx, kExact);
      const ChainMatrix d_m = degree_matrix(g, kExact);
      const auto& de = de_m.exact();
      const auto& d = d_m.exact();
      for (std::size_t i = 0; i < idx.size(); ++i) de_inv(i, i) = 1 / de(i, i);
      for (std::size_t i = 0; i < g.order(); ++i)
        if (d(i, i) != 0) d_inv(i, i) = 1 / d(i, i);
      if (g.min_degree() > 0) CHECK(de_inv * s == s * d_inv);
    }
  }

  TEST_CASE("transition matrices are stochastic and match the definitions") {
    for (const Graph& g : corpus(false)) {
      const OrientedEdgeIndex idx(g);
      const ChainMatrix p = vertex_transition(g, kExact);
      const ChainMatrix pe = edge_transition(g, idx, kExact);
      CHECK(p.is_row_stochastic());
      CHECK(pe.is_row_stochastic());
      CHECK(pe.is_column_stochastic());
      CHECK(p.exact() == oracle::vertex_walk(g));

      const auto arcs = oracle::arcs(g);
      const auto ref = oracle::edge_walk(g);
      for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = 0; y < arcs.size(); ++y)
          CHECK(pe.exact()(idx.index(arcs[x].first, arcs[x].second),
                           idx.index(arcs[y].first, arcs[y].second)) == ref(x, y));
    }
  }

  TEST_CASE("non-backtracking transition is doubly stochastic") {
    for (const Graph& g : corpus(true)) {
      const OrientedEdgeIndex idx(g);
      const ChainMatrix pnb = nb_transition(g, idx, kExact);
      CHECK(pnb.is_row_stochastic());
      CHECK(pnb.is_column_stochastic());
      const auto arcs = oracle::arcs(g);
      const auto ref = oracle::nb_walk(g);
      for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = 0; y < arcs.size(); ++y)
          CHECK(pnb.exact()(idx.index(arcs[x].first, arcs[x].second),
                            idx.index(arcs[y].first, arcs[y].second)) == ref(x, y));
      const ChainMatrix real = nb_transition(g, idx, kFloat);
      CHECK_FALSE(real.is_exact());
      CHECK(real.is_column_stochastic(1e-12));
    }
  }

  TEST_CASE("small worked examples") {
    const ChainMatrix p = vertex_transition(gen_complete(4), kExact);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(p.exact()(i, j) == (i == j ? Rational(0) : make_rational(1, 3)));

    const Graph c3 = gen_cycle(3);
    const ChainMatrix pe = edge_transition(c3, OrientedEdgeIndex(c3), kExact);
    for (std::size_t i = 0; i < pe.rows(); ++i) {
      int halves = 0;
      for (std::size_t j = 0; j < pe.cols(); ++j) halves += pe.exact()(i, j) == make_rational(1, 2);
      CHECK(halves == 2);
    }

    const Graph k4 = gen_complete(4);
    const OrientedEdgeIndex idx(k4);
    const ChainMatrix pnb = nb_transition(k4, idx, kExact);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      int halves = 0;
      for (std::size_t j = 0; j < idx.size(); ++j) halves += pnb.exact()(a, j) == make_rational(1, 2);
      CHECK(halves == 2);
      CHECK(pnb.exact()(a, idx.reverse(a)) == 0);
    }
  }

  TEST_CASE("non-backtracking walk is refused where it is undefined") {
    const Graph c5 = gen_cycle(5);
    CHECK_THROWS_AS(nb_transition(c5, OrientedEdgeIndex(c5)), ReducibleChainError);
    const Graph path = gen_path(4);
    CHECK_THROWS_AS(nb_transition(path, OrientedEdgeIndex(path)), SingularSystemError);
    CHECK(nb_unavailable_reason(c5)->find("reducible") != std::string::npos);
    CHECK_FALSE(nb_unavailable_reason(gen_petersen()).has_value());
    const Graph lonely = Graph::from_edge_list(3, {{0, 1}});
    CHECK_THROWS_AS(vertex_transition(lonely), ChainError);
  }

  TEST_CASE("scalar policy") {
    const Graph k10 = gen_complete(10);  // 90 arcs
    const OrientedEdgeIndex idx(k10);
    CHECK_THROWS_AS(edge_transition(k10, idx, ScalarPolicy{ScalarMode::exact, 64}), ValidationError);
    CHECK_FALSE(edge_transition(k10, idx, ScalarPolicy{ScalarMode::automatic, 64}).is_exact());
    CHECK(vertex_transition(k10, ScalarPolicy{ScalarMode::automatic, 64}).is_exact());
    CHECK(parse_scalar_mode("exact") == ScalarMode::exact);
    CHECK_THROWS_AS(parse_scalar_mode("fast"), ValidationError);
    CHECK(parse_chain_kind("Pnb") == ChainKind::non_backtracking);
    CHECK_THROWS_AS(parse_chain_kind("Q"), ValidationError);
  }

  TEST_CASE("csv renders exact fractions row-major") {
    const ChainMatrix p = vertex_transition(gen_path(3), kExact);
    CHECK(p.to_csv() == "0,1,0\n1/2,0,1/2\n0,1,0\n");
    const ChainMatrix t = build_matrix(gen_path(2), ChainKind::incidence_t, kExact);
    CHECK(t.rows() == 2);
    CHECK(t.cols() == 2);
  }

  TEST_CASE("entries can be overwritten") {
    ChainMatrix p = vertex_transition(gen_complete(3), kExact);
    p.set_entry(0, 1, make_rational(1, 4));
    CHECK_FALSE(p.is_row_stochastic());
    CHECK(p.real()(0, 1) == doctest::Approx(0.25));
  }
}
