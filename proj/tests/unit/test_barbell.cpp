#include <doctest.h>

#include "kemeny/barbell.hpp"
#include "kemeny/chain_matrices.hpp"
#include "kemeny/charpoly.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

RationalPolynomial monic(const IntegerPolynomial& p) {
  RationalPolynomial out = to_rational(p);
  const Rational lead = out.back();
  for (auto& c : out) c /= lead;
  return out;
}

RationalPolynomial exact_nb_charpoly(const Graph& g) {
  return charpoly_rational(nb_transition(g, OrientedEdgeIndex(g), {ScalarMode::exact, 1000}).exact());
}

}  // namespace

TEST_SUITE("barbell") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(validate({2, 2, 5}), DomainError);
    CHECK_THROWS_AS(validate({0, 3, 3}), DomainError);
    CHECK_NOTHROW(validate({1, 3, 3}));
    CHECK_THROWS_AS(barbell_nb_charpoly({1, 3, 3}), DomainError);
    CHECK(parse_barbell_objective("nb") == BarbellObjective::nb);
    CHECK_THROWS_AS(parse_barbell_objective("vertex"), ValidationError);
  }

  TEST_CASE("worked value") {
    const BarbellKemeny v = barbell_kemeny({3, 4, 6});
    REQUIRE(v.k_nb.has_value());
    CHECK(*v.k_nb == make_rational(88, 3));
    CHECK(*v.k_nb == make_rational(704, 24));
  }

  TEST_CASE("formulas match the exact oracle on small barbells") {
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::size_t a = 3; a <= 5; ++a)
        for (std::size_t b = 3; b <= a; ++b) {
          const BarbellParams p{k, a, b};
          const Graph g = gen_cycle_barbell(p);
          const BarbellKemeny v = barbell_kemeny(p);
          CAPTURE(k);
          CAPTURE(a);
          CAPTURE(b);
          CHECK(v.k_v == oracle::kemeny_vertex(g));
          CHECK(v.k_e == oracle::kemeny_edge(g));
          if (k >= 2) {
            REQUIRE(v.k_nb.has_value());
            CHECK(*v.k_nb == oracle::kemeny_nb(g));
          } else {
            CHECK_FALSE(v.k_nb.has_value());
          }
        }
    // The printed non-backtracking expression would give 16 here.
    CHECK(oracle::kemeny_nb(gen_cycle_barbell({1, 3, 3})) == make_rational(49, 4));
  }

  TEST_CASE("characteristic polynomial factorisation") {
    // (2t^3 - 1)^2 [(2t^3 - 1)^2 t^2 - 1]
    const IntegerPolynomial c{-1, 0, 0, 2};
    const IntegerPolynomial c2 = multiply(c, c);
    IntegerPolynomial inner = multiply(c2, IntegerPolynomial{0, 0, 1});
    inner[0] -= 1;
    const IntegerPolynomial expected = multiply(c2, inner);
    CHECK(monic(barbell_nb_charpoly({2, 3, 3})) == monic(expected));
    CHECK(monic(expected) == exact_nb_charpoly(gen_cycle_barbell({2, 3, 3})));

    for (const BarbellParams p : {BarbellParams{2, 4, 3}, BarbellParams{3, 4, 6}, BarbellParams{5, 3, 3},
                                  BarbellParams{4, 5, 4}}) {
      CAPTURE(p.k);
      CHECK(monic(barbell_nb_charpoly(p)) == exact_nb_charpoly(gen_cycle_barbell(p)));
      CHECK(kemeny_from_charpoly(barbell_nb_charpoly(p)) == *barbell_kemeny(p).k_nb);
    }
  }

  TEST_CASE("maximisers") {
    const BarbellArgmax edge = barbell_argmax(30, BarbellObjective::edge);
    REQUIRE(edge.maximizers.size() == 1);
    CHECK(edge.maximizers.front() == BarbellParams{26, 3, 3});
    CHECK(edge.value == make_rational(63371, 186));
    CHECK(edge.value == barbell_edge_max_formula(30));

    const BarbellArgmax nb = barbell_argmax(30, BarbellObjective::nb);
    REQUIRE(nb.maximizers.size() == 1);
    CHECK(nb.maximizers.front() == BarbellParams{2, 15, 15});
    CHECK(nb.value == make_rational(10322, 124));
    CHECK(nb.value == barbell_nb_max_formula(30));

    const BarbellArgmax odd = barbell_argmax(11, BarbellObjective::nb);
    REQUIRE(odd.maximizers.size() == 1);
    CHECK(odd.maximizers.front() == BarbellParams{2, 6, 5});
    CHECK(odd.value == barbell_nb_max_formula(11));
  }
}
