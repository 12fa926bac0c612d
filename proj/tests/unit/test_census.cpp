#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "kemeny/canonical.hpp"
#include "kemeny/census.hpp"
#include "kemeny/chain_matrices.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "kemeny/graph6.hpp"
#include "kemeny/kemeny.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

bool contains(const std::vector<std::string>& list, const Graph& g) {
  return std::find(list.begin(), list.end(), canonical_graph6(g)) != list.end();
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("admissibility") {
    CHECK(census_rejection(gen_cycle(6))->find("cycle") != std::string::npos);
    CHECK(census_rejection(gen_path(4)).has_value());
    CHECK(census_rejection(Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})).has_value());
    CHECK_FALSE(census_rejection(gen_complete(4)).has_value());
    CHECK_THROWS_AS(census_record(gen_cycle(5)), ValidationError);
  }

  TEST_CASE("records") {
    const CensusRecord k4 = census_record(gen_complete(4));
    CHECK(k4.graph_id == "C~");
    CHECK(k4.diff_sign == DiffSign::nb_larger_or_equal);
    CHECK(k4.k_e == doctest::Approx(41.0 / 4));
    CHECK(k4.k_nb == doctest::Approx(133.0 / 12));

    const CensusRecord k33 = census_record(gen_complete_bipartite(3, 3));
    CHECK(k33.diff_sign == DiffSign::equal);
    REQUIRE(k33.exact_e.has_value());
    CHECK(*k33.exact_e == make_rational(33, 2));
    CHECK(*k33.exact_nb == make_rational(33, 2));

    const CensusRecord pet = census_record(gen_petersen());
    CHECK(pet.diff_sign == DiffSign::nb_smaller);
    CHECK_FALSE(pet.exact_e.has_value());
  }

  TEST_CASE("small built-in censuses") {
    CHECK(census_nb_vs_edge(4).count_nb_ge_e == 2);
    const CensusResult five = census_nb_vs_edge(5);
    CHECK(five.count_nb_ge_e == 10);
    CHECK(five.n == 5u);
    CHECK(contains(five.nb_ge_e_list, gen_complete(5)));
    CHECK(contains(five.nb_ge_e_list, gen_complete_bipartite(2, 3)));

    const CensusResult six = census_nb_vs_edge(6);
    CHECK(six.count_nb_ge_e == 18);
    CHECK(contains(six.equal_list, gen_complete_bipartite(3, 3)));
    CHECK(six.equal_list.size() == 1);
    CHECK(contains(six.nb_ge_e_list, gen_complete_bipartite(2, 4)));
    CHECK(six.errors.empty());
    CHECK(six.rejected.empty());
    CHECK(six.records.size() == six.total);
    CHECK(std::is_sorted(six.records.begin(), six.records.end(),
                         [](const auto& a, const auto& b) { return a.graph_id < b.graph_id; }));
    CHECK_THROWS_AS(census_nb_vs_edge(9), DomainError);
  }

  TEST_CASE("one percent of records re-checked through mean first passage times") {
    const CensusResult r = census_nb_vs_edge(7);
    REQUIRE(r.records.size() > 200);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < r.records.size(); i += 100, ++checked) {
      const CensusRecord& rec = r.records[i];
      const Graph g = parse_graph6(rec.graph_id);
      const OrientedEdgeIndex idx(g);
      const ScalarPolicy fp{ScalarMode::floating, 0};
      CHECK(kemeny_mfpt(edge_transition(g, idx, fp)).value == doctest::Approx(rec.k_e).epsilon(1e-8));
      CHECK(kemeny_mfpt(nb_transition(g, idx, fp)).value == doctest::Approx(rec.k_nb).epsilon(1e-8));
    }
    CHECK(checked * 100 >= r.records.size());
  }

  TEST_CASE("parallel map is deterministic") {
    CensusOptions serial, parallel;
    serial.threads = 1;
    parallel.threads = 3;
    parallel.batch = 7;
    std::ostringstream a, b;
    write_census_csv(a, census_nb_vs_edge(6, serial));
    write_census_csv(b, census_nb_vs_edge(6, parallel));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("graph6,n,m,k_e,k_nb,diff_sign\n", 0) == 0);
  }

  TEST_CASE("graph6 stream input") {
    // K4, blank, garbage, a path, K5, C4.
    std::istringstream in("C~\n\nnot-graph6\n" + to_graph6(gen_path(5)) + "\nD~{\nCr\n");
    const CensusResult r = census_nb_vs_edge(in);
    CHECK(r.total == 2);
    REQUIRE(r.errors.size() == 1);
    CHECK(r.errors[0].line == 3);
    CHECK(r.rejected.size() == 2);
    CHECK_FALSE(r.n.has_value());
    const auto j = census_summary(r);
    CHECK(j["count_nb_ge_e"] == 2);
    CHECK(j["errors"].size() == 1);
  }

  TEST_CASE("balanced barbell sweep") {
    const SweepResult s = barbell_sweep(30);
    REQUIRE(s.rows.size() == 13);
    CHECK(s.notes.size() == 12);
    CHECK(s.rows.front().k == 2);
    CHECK(s.rows.front().a == 15);
    CHECK(s.rows.front().k_nb == make_rational(10322, 124));
    CHECK(s.rows.back().k == 26);
    CHECK(s.rows.back().k_e == make_rational(63371, 186));
    std::ostringstream out;
    write_sweep_csv(out, s);
    CHECK(out.str().rfind("k,a,b,k_e,k_nb,k_e_float,k_nb_float,nb_source\n2,15,15,", 0) == 0);
    CHECK_THROWS_AS(barbell_sweep(5), DomainError);
  }

  TEST_CASE("general sweep covers every split") {
    const SweepResult s = barbell_sweep_general(9);
    std::size_t engine_rows = 0;
    for (const auto& row : s.rows) {
      CHECK(row.a + row.b + row.k - 2 == 9);
      CHECK(row.a >= row.b);
      if (row.nb_source == "engine") {
        ++engine_rows;
        CHECK(row.k == 1);
        CHECK(row.k_nb == oracle::kemeny_nb(gen_cycle_barbell({row.k, row.a, row.b})));
      }
    }
    CHECK(engine_rows == 3);  // (1,7,3), (1,6,4), (1,5,5)
    CHECK(s.rows.size() == 3 + 2 + 2 + 1 + 1);
  }
}
