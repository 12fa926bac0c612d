#include <doctest.h>

#include <random>

#include "kemeny/chain_matrices.hpp"
#include "kemeny/charpoly.hpp"
#include "kemeny/error.hpp"
#include "kemeny/generators.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

DenseMatrix<Rational> random_rational(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  DenseMatrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 3) m(i, j) = make_rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_SUITE("charpoly") {
  TEST_CASE("small hand-computed polynomials") {
    DenseMatrix<Integer> a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 2;
    CHECK(charpoly_integer(a) == IntegerPolynomial{3, -4, 1});
    CHECK(charpoly_integer(DenseMatrix<Integer>(3, 3)) == IntegerPolynomial{0, 0, 0, 1});
    CHECK(charpoly_rational(DenseMatrix<Rational>::identity(2)) == RationalPolynomial{1, -2, 1});
  }

  TEST_CASE("modular route agrees with Faddeev-LeVerrier on random rational matrices") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
      const auto m = random_rational(1 + trial % 9, rng);
      CHECK(charpoly_rational(m) == oracle::faddeev_leverrier(m));
    }
  }

  TEST_CASE("huge integer entries need many primes") {
    std::mt19937_64 rng(5);
    DenseMatrix<Integer> m(6, 6);
    DenseMatrix<Rational> q(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        Integer z(static_cast<long>(rng() >> 2));
        z *= z;
        if (rng() & 1) z = -z;
        m(i, j) = z;
        q(i, j) = Rational(z);
      }
    CHECK(to_rational(charpoly_integer(m)) == oracle::faddeev_leverrier(q));
  }

  TEST_CASE("transition matrices of graphs") {
    for (const Graph& g : {gen_petersen(), gen_cycle_barbell({2, 3, 3}), gen_complete_bipartite(2, 4)}) {
      const OrientedEdgeIndex idx(g);
      const auto p = nb_transition(g, idx, {ScalarMode::exact, 1000}).exact();
      CHECK(charpoly_rational(p) == oracle::faddeev_leverrier(p));
    }
  }

  TEST_CASE("reflection and evaluation") {
    const RationalPolynomial p{Rational(-1), Rational(0), Rational(1)};  // t^2 - 1
    const auto r = reflect_at_one(p);                                     // (1-x)^2 - 1
    CHECK(r == RationalPolynomial{0, -2, 1});
    CHECK(evaluate(p, Rational(3)) == 8);
    CHECK(multiply(IntegerPolynomial{1, 1}, IntegerPolynomial{-1, 1}) == IntegerPolynomial{-1, 0, 1});
  }

  TEST_CASE("Kemeny from the characteristic polynomial") {
    // P = [[0,1],[1,0]]: eigenvalues 1, -1, K = 1/(1-(-1)) = 1/2.
    CHECK(kemeny_from_charpoly(RationalPolynomial{-1, 0, 1}) == make_rational(1, 2));
    CHECK(kemeny_from_charpoly(IntegerPolynomial{-1, 0, 1}) == make_rational(1, 2));
    // No eigenvalue at 1.
    CHECK_THROWS_AS(kemeny_from_charpoly(RationalPolynomial{1, 0, 1}), CrossCheckError);
    // Double eigenvalue at 1.
    CHECK_THROWS_AS(kemeny_from_charpoly(RationalPolynomial{1, -2, 1}), DomainError);

    const auto p = vertex_transition(gen_complete(4), {ScalarMode::exact, 64});
    CHECK(kemeny_from_charpoly(charpoly_rational(p.exact())) == make_rational(9, 4));
    CHECK(kemeny_from_hessenberg(p.real()) == doctest::Approx(2.25).epsilon(1e-12));
  }

  TEST_CASE("float Hessenberg route tracks the exact value") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
      const Graph g = random_connected_graph(7, 0.6, rng);
      if (nb_unavailable_reason(g)) continue;
      const OrientedEdgeIndex idx(g);
      const auto p = nb_transition(g, idx, {ScalarMode::exact, 1000});
      const double exact = to_double(kemeny_from_charpoly(charpoly_rational(p.exact())));
      CHECK(kemeny_from_hessenberg(p.real()) == doctest::Approx(exact).epsilon(1e-9));
    }
  }
}
