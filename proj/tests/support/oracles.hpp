#pragma once

// Reference computations used only by the tests. Each one is written from the
// definitions with plain loops and exact arithmetic, sharing no code with the
// library routes it checks.

#include <vector>

#include "kemeny/dense_matrix.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"

namespace kemeny::oracle {

using QMatrix = DenseMatrix<Rational>;

/// Monic characteristic polynomial, ascending coefficients.
RationalPolynomial faddeev_leverrier(const QMatrix& a);

/// Gauss-Jordan inverse; throws std::domain_error when singular.
QMatrix inverse(QMatrix a);

/// Stationary row vector of an irreducible stochastic matrix.
std::vector<Rational> stationary(const QMatrix& p);

/// tr((I - P + 1 pi)^-1) - 1.
Rational kemeny_fundamental(const QMatrix& p);

/// Mean first passage times m_ij (zero diagonal) by solving one system per target.
QMatrix mean_first_passage(const QMatrix& p);

/// Arcs in lexicographic (tail, head) order.
std::vector<std::pair<Vertex, Vertex>> arcs(const Graph& g);

QMatrix vertex_walk(const Graph& g);
QMatrix edge_walk(const Graph& g);
QMatrix nb_walk(const Graph& g);

Rational kemeny_vertex(const Graph& g);
Rational kemeny_edge(const Graph& g);
Rational kemeny_nb(const Graph& g);

/// Tries every bijection; small orders only.
bool brute_force_isomorphic(const Graph& a, const Graph& b);

/// Graph with vertex v renamed perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace kemeny::oracle
