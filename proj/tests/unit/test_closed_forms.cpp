#include <doctest.h>

#include <algorithm>
#include <random>

#include "kemeny/chain_matrices.hpp"
#include "kemeny/closed_forms.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "kemeny/kemeny.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

const BoundCheck& find(const std::vector<BoundCheck>& checks, std::string_view name) {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& b) { return b.name == name; });
  REQUIRE(it != checks.end());
  return *it;
}

KemenyPair exact_pair(const Graph& g) {
  KemenyPair k;
  k.exact_e = oracle::kemeny_edge(g);
  k.exact_nb = oracle::kemeny_nb(g);
  k.k_e = to_double(*k.exact_e);
  k.k_nb = to_double(*k.exact_nb);
  return k;
}

}  // namespace

TEST_SUITE("closed_forms") {
  TEST_CASE("regular edge and non-backtracking formulas") {
    struct Case {
      Graph g;
      Rational k_e, k_nb;
    };
    const std::vector<Case> cases{{gen_complete(4), make_rational(41, 4), make_rational(133, 12)},
                                  {gen_complete(5), make_rational(91, 5), oracle::kemeny_nb(gen_complete(5))},
                                  {gen_petersen(), make_rational(299, 10), make_rational(829, 30)},
                                  {gen_complete_bipartite(3, 3), make_rational(33, 2), make_rational(33, 2)}};
    for (const auto& c : cases) {
      const RegularProfile p = regular_profile(c.g);
      const double k_e = regular_edge_kemeny(p);
      CHECK(k_e == doctest::Approx(to_double(c.k_e)).epsilon(1e-12));
      CHECK(regular_nb_kemeny(p, k_e) == doctest::Approx(to_double(c.k_nb)).epsilon(1e-12));
      CHECK(regular_nb_kemeny(p.n, p.d, c.k_e) == c.k_nb);
      CHECK(oracle::kemeny_edge(c.g) == c.k_e);
      CHECK(oracle::kemeny_nb(c.g) == c.k_nb);
    }
  }

  TEST_CASE("regular formulas on random cubic graphs") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 8; ++i) {
      const Graph g = random_regular_graph(8 + 2 * (i % 3), 3, rng);
      const RegularProfile p = regular_profile(g);
      const Rational k_e = oracle::kemeny_edge(g);
      CHECK(regular_edge_kemeny(p) == doctest::Approx(to_double(k_e)).epsilon(1e-10));
      CHECK(regular_nb_kemeny(p.n, p.d, k_e) == oracle::kemeny_nb(g));
    }
  }

  TEST_CASE("regular non-backtracking spectrum") {
    const RegularProfile p = regular_profile(gen_petersen());
    const auto ev = regular_nb_spectrum(p);
    CHECK(ev.size() == 30);
    const auto count = [&](auto pred) { return std::count_if(ev.begin(), ev.end(), pred); };
    CHECK(count([](auto z) { return std::abs(z - 1.0) < 1e-12; }) == 1);
    CHECK(count([](auto z) { return std::abs(z - 0.5) < 1e-12; }) >= 1);
    // lambda = 1 of A gives (1 +- sqrt(1 - 8)) / 4, modulus 1/sqrt(2).
    const std::complex<double> root(0.25, std::sqrt(7.0) / 4);
    CHECK(count([&](auto z) { return std::abs(z - root) < 1e-12; }) == 5);
    CHECK(std::abs(root) == doctest::Approx(1 / std::sqrt(2.0)));
    // Matches the engine's eigenvalues as a multiset of moduli.
    const Graph g = gen_petersen();
    const Spectrum s = spectrum(nb_transition(g, OrientedEdgeIndex(g), {ScalarMode::floating, 0}));
    std::vector<double> a, b;
    for (auto z : ev) a.push_back(std::abs(z));
    for (auto z : s.eigenvalues) b.push_back(std::abs(z));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-8));
  }

  TEST_CASE("regular exceptions and bounds") {
    const RegularProfile k4 = regular_profile(gen_complete(4));
    const RegularProfile k5 = regular_profile(gen_complete(5));
    const RegularProfile k33 = regular_profile(gen_complete_bipartite(3, 3));
    const RegularProfile pet = regular_profile(gen_petersen());
    CHECK(is_regular_exception(k4));
    CHECK(is_regular_exception(k5));
    CHECK(is_regular_exception(k33));
    CHECK_FALSE(is_regular_exception(pet));
    CHECK(is_ramanujan(pet));

    const auto b5 = regular_bounds(k5, exact_pair(gen_complete(5)));
    CHECK_FALSE(find(b5, "edge_exceeds_nb").satisfied);
    CHECK(find(b5, "edge_exceeds_nb").exempt);
    CHECK_FALSE(find(b5, "ratio_upper").satisfied);

    const auto bp = regular_bounds(pet, exact_pair(gen_petersen()));
    for (const auto& b : bp) {
      CHECK_MESSAGE(b.satisfied, b.name);
      CHECK_FALSE(b.exempt);
    }
    CHECK(find(bp, "ratio_lower").lhs == doctest::Approx(829.0 / 897).epsilon(1e-12));

    const auto b33 = regular_bounds(k33, exact_pair(gen_complete_bipartite(3, 3)));
    const BoundCheck& eq = find(b33, "edge_exceeds_nb");
    CHECK(eq.equality);
    CHECK(*eq.exact_margin == 0);

    CHECK_THROWS_AS(regular_profile(gen_complete_bipartite(2, 3)), DomainError);
    CHECK_THROWS_AS(regular_bounds(regular_profile(gen_cycle(5)), KemenyPair{1, 1, {}, {}}), DomainError);
  }

  TEST_CASE("biregular formulas") {
    for (const Graph& g : {gen_complete_bipartite(2, 3), gen_complete_bipartite(2, 4),
                           gen_complete_bipartite(2, 5), gen_complete_bipartite(3, 3),
                           gen_complete_bipartite(3, 4), gen_linked_squares()}) {
      const BiregularProfile p = biregular_profile(g);
      const Rational k_e = oracle::kemeny_edge(g);
      const double fe = biregular_edge_kemeny(p);
      CHECK(fe == doctest::Approx(to_double(k_e)).epsilon(1e-10));
      CHECK(biregular_nb_kemeny(p, fe) == doctest::Approx(to_double(oracle::kemeny_nb(g))).epsilon(1e-10));
      CHECK(biregular_nb_kemeny(p.c, p.d, p.r, p.s, k_e) == oracle::kemeny_nb(g));
    }
    const BiregularProfile k23 = biregular_profile(gen_complete_bipartite(3, 2));
    CHECK(k23.c == 2);
    CHECK(k23.r == 3);
    CHECK(k23.complete);
    CHECK(oracle::kemeny_edge(gen_complete_bipartite(2, 3)) == make_rational(21, 2));
    CHECK(oracle::kemeny_nb(gen_complete_bipartite(2, 3)) > make_rational(21, 2));
    CHECK_THROWS_AS(biregular_profile(gen_petersen()), DomainError);
  }

  TEST_CASE("biregular exceptions and bounds") {
    for (std::size_t d : {3u, 4u, 5u}) CHECK(is_biregular_exception(biregular_profile(gen_complete_bipartite(2, d))));
    CHECK(is_biregular_exception(biregular_profile(gen_complete_bipartite(3, 3))));
    CHECK_FALSE(is_biregular_exception(biregular_profile(gen_complete_bipartite(3, 4))));
    CHECK_FALSE(is_biregular_exception(biregular_profile(gen_linked_squares())));

    const auto k24 = biregular_bounds(biregular_profile(gen_complete_bipartite(2, 4)),
                                      exact_pair(gen_complete_bipartite(2, 4)));
    CHECK(find(k24, "edge_exceeds_nb").exempt);
    CHECK_FALSE(find(k24, "edge_exceeds_nb").satisfied);

    const auto fig = biregular_bounds(biregular_profile(gen_linked_squares()), exact_pair(gen_linked_squares()));
    for (const auto& b : fig) CHECK_MESSAGE(b.satisfied, b.name);
    CHECK(*find(fig, "bipartite_edge_lower").exact_margin > 0);

    const auto k33 = biregular_bounds(biregular_profile(gen_complete_bipartite(3, 3)),
                                      exact_pair(gen_complete_bipartite(3, 3)));
    CHECK(*find(k33, "bipartite_edge_lower").exact_margin == 0);
    CHECK(find(k33, "bipartite_edge_lower").equality);
  }

  TEST_CASE("necklace formulas") {
    const KemenyTriple t = necklace_kemeny(10);
    CHECK(t.k_v == make_rational(3296, 160));
    CHECK(t.k_e == make_rational(6496, 160));
    CHECK(t.k_nb == make_rational(14976, 480));
    for (std::size_t k = 2; k <= 3; ++k) {
      const Graph g = gen_necklace(k);
      const KemenyTriple f = necklace_kemeny(4 * k + 2);
      CHECK(oracle::kemeny_vertex(g) == f.k_v);
      CHECK(oracle::kemeny_edge(g) == f.k_e);
      CHECK(oracle::kemeny_nb(g) == f.k_nb);
    }
    Rational prev = 1;
    for (std::size_t n = 10; n <= 50; n += 4) {
      const KemenyTriple f = necklace_kemeny(n);
      const Rational ratio = f.k_nb / f.k_e;
      CHECK(ratio < prev);
      CHECK(ratio > make_rational(1, 3));
      prev = ratio;
    }
    CHECK_THROWS_AS(necklace_kemeny(12), DomainError);
    CHECK_THROWS_AS(necklace_kemeny(6), DomainError);
  }
}
