#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kemeny::oracle {

RationalPolynomial faddeev_leverrier(const QMatrix& a) {
  const std::size_t n = a.rows();
  RationalPolynomial c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    const QMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

QMatrix inverse(QMatrix a) {
  const std::size_t n = a.rows();
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(pivot, j));
      std::swap(inv(col, j), inv(pivot, j));
    }
    const Rational scale = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= scale;
      inv(col, j) /= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> stationary(const QMatrix& p) {
  // Solve pi (I - P) = 0 with sum(pi) = 1 by replacing the last equation.
  const std::size_t n = p.rows();
  QMatrix sys(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sys(i, j) = (i == j ? Rational(1) : Rational(0)) - p(j, i);
  for (std::size_t j = 0; j < n; ++j) sys(n - 1, j) = 1;
  const QMatrix inv = inverse(sys);
  std::vector<Rational> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = inv(i, n - 1);
  return pi;
}

Rational kemeny_fundamental(const QMatrix& p) {
  const std::size_t n = p.rows();
  const auto pi = stationary(p);
  QMatrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = (i == j ? Rational(1) : Rational(0)) - p(i, j) + pi[j];
  const QMatrix zi = inverse(z);
  Rational trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += zi(i, i);
  return trace - 1;
}

QMatrix mean_first_passage(const QMatrix& p) {
  const std::size_t n = p.rows();
  QMatrix m(n, n);
  for (std::size_t target = 0; target < n; ++target) {
    // (I - P restricted to the other states) h = 1.
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (i != target) rest.push_back(i);
    QMatrix sys(rest.size(), rest.size());
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t b = 0; b < rest.size(); ++b)
        sys(a, b) = (a == b ? Rational(1) : Rational(0)) - p(rest[a], rest[b]);
    const QMatrix inv = inverse(sys);
    for (std::size_t a = 0; a < rest.size(); ++a) {
      Rational h = 0;
      for (std::size_t b = 0; b < rest.size(); ++b) h += inv(a, b);
      m(rest[a], target) = h;
    }
  }
  return m;
}

std::vector<std::pair<Vertex, Vertex>> arcs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : g.edges()) {
    out.emplace_back(e.u, e.v);
    out.emplace_back(e.v, e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QMatrix vertex_walk(const Graph& g) {
  const std::size_t n = g.order();
  QMatrix p(n, n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (g.adjacent(i, j)) p(i, j) = make_rational(1, static_cast<std::int64_t>(g.degree(i)));
  return p;
}

namespace {

QMatrix arc_walk(const Graph& g, bool forbid_reversal) {
  const auto a = arcs(g);
  QMatrix p(a.size(), a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    const auto [u, v] = a[x];
    const std::size_t out = g.degree(v) - (forbid_reversal ? 1 : 0);
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (a[y].first != v) continue;
      if (forbid_reversal && a[y].second == u) continue;
      p(x, y) = make_rational(1, static_cast<std::int64_t>(out));
    }
  }
  return p;
}

}  // namespace

QMatrix edge_walk(const Graph& g) { return arc_walk(g, false); }
QMatrix nb_walk(const Graph& g) { return arc_walk(g, true); }

Rational kemeny_vertex(const Graph& g) { return kemeny_fundamental(vertex_walk(g)); }
Rational kemeny_edge(const Graph& g) { return kemeny_fundamental(edge_walk(g)); }
Rational kemeny_nb(const Graph& g) { return kemeny_fundamental(nb_walk(g)); }

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edge_list(g.order(), edges);
}

}  // namespace kemeny::oracle
