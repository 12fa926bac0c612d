#include <doctest.h>

#include <random>

#include "kemeny/barbell.hpp"
#include "kemeny/chain_matrices.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "kemeny/kemeny.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

const ScalarPolicy kExact{ScalarMode::exact, 1000};
const ScalarPolicy kFloat{ScalarMode::floating, 0};

ChainMatrix real_matrix(ChainKind kind, std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return ChainMatrix(kind, m);
}

}  // namespace

TEST_SUITE("kemeny_engine") {
  TEST_CASE("stationary distributions") {
    const Graph g = gen_cycle_barbell({3, 4, 6});
    const Eigen::VectorXd pi = stationary(vertex_transition(g, kFloat));
    for (Vertex v = 0; v < g.order(); ++v)
      CHECK(pi(v) == doctest::Approx(static_cast<double>(g.degree(v)) / (2.0 * g.size())));

    const Graph k4 = gen_complete(4);
    const OrientedEdgeIndex idx(k4);
    const Eigen::VectorXd nb = stationary(nb_transition(k4, idx, kFloat));
    for (Eigen::Index i = 0; i < nb.size(); ++i) CHECK(nb(i) == doctest::Approx(1.0 / 12));
    const Eigen::VectorXd e = stationary(edge_transition(g, OrientedEdgeIndex(g), kFloat));
    for (Eigen::Index i = 0; i < e.size(); ++i) CHECK(e(i) == doctest::Approx(1.0 / 24));

    const ChainMatrix split =
        real_matrix(ChainKind::vertex, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    CHECK_THROWS_AS(stationary(split), ReducibleChainError);
  }

  TEST_CASE("mean first passage times") {
    const Eigen::MatrixXd m = mfpt(vertex_transition(gen_complete(3), kFloat));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m(i, j) == doctest::Approx(i == j ? 0.0 : 2.0));

    const Graph g = gen_cycle_barbell({2, 3, 4});
    const auto p = vertex_transition(g, kExact);
    const Eigen::MatrixXd ours = mfpt(p);
    const auto ref = oracle::mean_first_passage(p.exact());
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j)
        CHECK(ours(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
              doctest::Approx(to_double(ref(i, j))).epsilon(1e-12));
  }

  TEST_CASE("four routes on small examples") {
    const auto p = vertex_transition(gen_complete(4), kExact);
    CHECK(kemeny_mfpt(p).value == doctest::Approx(2.25));
    CHECK(kemeny_spectrum(p) == doctest::Approx(2.25));
    CHECK(*kemeny_charpoly(p).exact == make_rational(9, 4));
    CHECK(kemeny_fundamental(p) == doctest::Approx(2.25));
    CHECK(kemeny_resistance(gen_complete(4)) == doctest::Approx(2.25));

    CHECK(*kemeny_charpoly(vertex_transition(gen_cycle(4), kExact)).exact == make_rational(5, 2));
    CHECK(kemeny_resistance(gen_cycle(4)) == doctest::Approx(2.5));
    CHECK(kemeny_resistance(gen_star(3)) == doctest::Approx(2.5));
    CHECK(kemeny_spectrum(vertex_transition(gen_petersen(), kFloat)) == doctest::Approx(9.9));
  }

  TEST_CASE("kappa does not depend on the start state") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
      const Graph g = random_connected_graph(8, 0.4, rng);
      const OrientedEdgeIndex idx(g);
      CHECK(kemeny_mfpt(vertex_transition(g, kFloat)).spread < 1e-9);
      CHECK(kemeny_mfpt(edge_transition(g, idx, kFloat)).spread < 1e-9);
      if (!nb_unavailable_reason(g)) CHECK(kemeny_mfpt(nb_transition(g, idx, kFloat)).spread < 1e-9);
    }
  }

  TEST_CASE("spectra") {
    const Graph k4 = gen_complete(4);
    const OrientedEdgeIndex idx(k4);
    const auto pnb = nb_transition(k4, idx, kExact);
    const Spectrum s = spectrum(pnb);
    CHECK(s.size() == 12);
    CHECK(s.spectral_radius() == doctest::Approx(1.0));
    CHECK(kemeny_spectrum(s) == doctest::Approx(133.0 / 12));
    CHECK(*kemeny_charpoly(pnb).exact == make_rational(133, 12));

    const Spectrum bip = spectrum(vertex_transition(gen_complete_bipartite(3, 3), kFloat));
    CHECK(bip.eigenvalues.back().real() == doctest::Approx(-1.0));

    const auto pe = edge_transition(k4, idx, kFloat);
    CHECK(std::abs(kemeny_spectrum(pe) - kemeny_charpoly(pe).value) < 1e-10);

    const auto desc = adjacency_spectrum(gen_petersen());
    CHECK(desc.front() == doctest::Approx(3.0));
    CHECK(desc.back() == doctest::Approx(-2.0));

    CHECK_THROWS_AS(kemeny_spectrum(real_matrix(ChainKind::vertex, {{1, 0}, {0, 1}})), DomainError);
    CHECK_THROWS_AS(kemeny_spectrum(real_matrix(ChainKind::edge, {{0.5, 0}, {0, 0.5}})), DomainError);
  }

  TEST_CASE("non-reversible input to a vertex-kind matrix takes the general eigensolver") {
    // Rotation on three states: eigenvalues are the cube roots of unity.
    const ChainMatrix rot = real_matrix(ChainKind::vertex, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    CHECK(kemeny_spectrum(rot) == doctest::Approx(1.0));  // 2 * Re 1/(1 - w) = 1
    CHECK(kemeny_mfpt(rot).value == doctest::Approx(1.0));
  }

  TEST_CASE("exact routes agree with the fundamental-matrix oracle") {
    std::mt19937_64 rng(29);
    int nb_checked = 0;
    for (int i = 0; i < 25; ++i) {
      const Graph g = random_connected_graph(4 + i % 4, 0.6, rng);
      const OrientedEdgeIndex idx(g);
      CHECK(*kemeny_charpoly(vertex_transition(g, kExact)).exact == oracle::kemeny_vertex(g));
      CHECK(*kemeny_charpoly(edge_transition(g, idx, kExact)).exact == oracle::kemeny_edge(g));
      if (!nb_unavailable_reason(g)) {
        CHECK(*kemeny_charpoly(nb_transition(g, idx, kExact)).exact == oracle::kemeny_nb(g));
        ++nb_checked;
      }
    }
    CHECK(nb_checked > 5);
  }

  TEST_CASE("effective resistance") {
    for (std::size_t n : {5u, 8u}) {
      const ResistanceData rd = resistance(gen_cycle(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const double d = static_cast<double>(std::min((i + n - j) % n, (j + n - i) % n));
          CHECK(rd.r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
                doctest::Approx(d * (static_cast<double>(n) - d) / static_cast<double>(n)));
        }
    }
    const Graph tree = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
    const ResistanceData rd = resistance(tree);
    const auto dist = distance_matrix(tree);
    for (Vertex i = 0; i < 6; ++i)
      for (Vertex j = 0; j < 6; ++j) CHECK(rd.r(i, j) == doctest::Approx(dist[i][j]).epsilon(1e-12));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
      const Graph g = random_connected_graph(9, 0.4, rng);
      const ResistanceData r = resistance(g);
      for (Eigen::Index i = 0; i < 9; ++i)
        for (Eigen::Index j = 0; j < 9; ++j)
          for (Eigen::Index k = 0; k < 9; ++k) CHECK(r.r(i, k) <= r.r(i, j) + r.r(j, k) + 1e-12);
      CHECK(kemeny_resistance(g) == doctest::Approx(kemeny_spectrum(vertex_transition(g, kFloat))));
    }
    CHECK_THROWS_AS(resistance(Graph::from_edge_list(3, {{0, 1}})), ChainError);
  }

  TEST_CASE("moments and one-sums") {
    CHECK(moment(gen_cycle(3), 0) == doctest::Approx(8.0 / 3));
    CHECK(moment(gen_path(3), 1) == doctest::Approx(2.0));
    CHECK_THROWS_AS(moment(gen_path(3), 3), ValidationError);

    const double bowtie = kemeny_one_sum(gen_cycle(3), 0, gen_cycle(3), 0);
    CHECK(bowtie == doctest::Approx(kemeny_spectrum(vertex_transition(gen_cycle_barbell({1, 3, 3}), kFloat))));

    const Graph left = one_sum(gen_cycle(4), 0, gen_path(3), 0);
    const double cb = kemeny_one_sum(left, 5, gen_cycle(6), 0);
    CHECK(cb == doctest::Approx(to_double(barbell_kemeny({3, 4, 6}).k_v)).epsilon(1e-12));
    CHECK(kemeny_one_sum(gen_path(2), 1, gen_complete(4), 2) ==
          doctest::Approx(kemeny_spectrum(vertex_transition(one_sum(gen_path(2), 1, gen_complete(4), 2), kFloat))));
  }
}
