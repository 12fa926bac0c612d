#include <doctest.h>

#include <random>

#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "kemeny/report.hpp"
#include "oracles.hpp"

using namespace kemeny;

TEST_SUITE("report") {
  TEST_CASE("exact triple with every route") {
    const KemenyReport r = kemeny_triple(gen_complete(4));
    CHECK(r.passed);
    CHECK(r.failures.empty());
    CHECK(r.graph6 == "C~");
    REQUIRE(r.vertex.exact.has_value());
    CHECK(*r.vertex.exact == make_rational(9, 4));
    CHECK(*r.edge.exact == make_rational(41, 4));
    REQUIRE(r.nb.has_value());
    CHECK(*r.nb->exact == make_rational(133, 12));
    CHECK(r.identity_exact);
    CHECK(r.vertex.routes.size() == 4);
    CHECK(r.edge.routes.size() == 3);
    CHECK(r.vertex.residual < 1e-12);
  }

  TEST_CASE("identity between vertex and edge constants") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 30; ++i) {
      const Graph g = random_connected_graph(4 + i % 6, 0.5, rng);
      const KemenyReport r = kemeny_triple(g);
      CHECK(r.passed);
      CHECK(r.identity_residual < 1e-10);
      if (r.vertex.exact && r.edge.exact) {
        CHECK(r.identity_exact);
        CHECK(*r.edge.exact - *r.vertex.exact == Rational(static_cast<long>(2 * g.size() - g.order())));
      }
    }
  }

  TEST_CASE("non-backtracking leg is omitted or required") {
    const KemenyReport path = kemeny_triple(gen_path(4));
    CHECK_FALSE(path.nb.has_value());
    CHECK(path.nb_omitted_reason.find("degree") != std::string::npos);
    const auto j = to_json(path);
    CHECK(j["k_nb"].is_null());
    CHECK(j.contains("k_nb_omitted"));

    TripleOptions strict;
    strict.require_nb = true;
    CHECK_THROWS_AS(kemeny_triple(gen_cycle(5), strict), ChainError);
    CHECK_THROWS_AS(kemeny_triple(Graph::from_edge_list(4, {{0, 1}, {2, 3}})), ReducibleChainError);
    TripleOptions bad;
    bad.tolerance = 0;
    CHECK_THROWS_AS(kemeny_triple(gen_complete(4), bad), ValidationError);
  }

  TEST_CASE("a corrupted matrix fails the cross-check") {
    TripleOptions options;
    options.matrix_hook = [](ChainMatrix& p) {
      if (p.kind() != ChainKind::edge) return;
      if (p.is_exact()) {
        p.set_entry(0, 0, p.exact()(0, 0) + make_rational(1, 10));
      } else {
        p.set_entry(0, 0, p.real()(0, 0) + 0.1);
      }
    };
    const KemenyReport r = kemeny_triple(gen_petersen(), options);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.failures.empty());
  }

  TEST_CASE("floating mode") {
    TripleOptions options;
    options.scalars = {ScalarMode::floating, 0};
    const KemenyReport r = kemeny_triple(gen_petersen(), options);
    CHECK(r.passed);
    CHECK_FALSE(r.vertex.exact.has_value());
    CHECK(r.k_vertex() == doctest::Approx(9.9));
    CHECK(r.k_edge() == doctest::Approx(29.9));
    CHECK(*r.k_nb() == doctest::Approx(829.0 / 30));
    const auto j = to_json(r);
    CHECK(j["k_vertex"].is_number());
    CHECK(j.contains("chains"));
  }

  TEST_CASE("json serialisation") {
    const auto j = to_json(kemeny_triple(gen_cycle_barbell({3, 4, 6})));
    CHECK(j["k_nb"] == "88/3");
    CHECK(j["n"] == 11);
    CHECK(j["m"] == 12);
    CHECK(j["passed"] == true);
    CHECK(j["chains"]["non_backtracking"]["states"] == 24);
    CHECK(round12(0.1 + 0.2) == 0.3);
    CHECK(round12(1.0 / 3) == 0.333333333333);
  }
}
