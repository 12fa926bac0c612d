#include "kemeny/chain_matrices.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "kemeny/error.hpp"

namespace kemeny {

// ---------------------------------------------------------------------------
// OrientedEdgeIndex

OrientedEdgeIndex::OrientedEdgeIndex(const Graph& g) {
  const std::size_t n = g.order();
  first_out_.assign(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    first_out_[u + 1] = first_out_[u] + g.degree(u);
    for (Vertex v : g.neighbors(u)) {
      tails_.push_back(u);
      heads_.push_back(v);
    }
  }
  reverse_.resize(tails_.size());
  for (std::size_t a = 0; a < tails_.size(); ++a) reverse_[a] = index(heads_[a], tails_[a]);
}

std::size_t OrientedEdgeIndex::index(Vertex u, Vertex v) const {
  if (u + 1 >= first_out_.size()) throw ValidationError("arc tail out of range");
  auto begin = heads_.begin() + static_cast<std::ptrdiff_t>(first_out_[u]);
  auto end = heads_.begin() + static_cast<std::ptrdiff_t>(first_out_[u + 1]);
  auto it = std::lower_bound(begin, end, v);
  if (it == end || *it != v) {
    throw ValidationError("(" + std::to_string(u) + "," + std::to_string(v) +
                          ") is not an arc");
  }
  return static_cast<std::size_t>(it - heads_.begin());
}

// ---------------------------------------------------------------------------
// Names

namespace {

struct KindName {
  ChainKind kind;
  std::string_view name;
  std::string_view short_name;
};

constexpr std::array<KindName, 11> kKindNames{{
    {ChainKind::vertex, "vertex", "P"},
    {ChainKind::edge, "edge", "Pe"},
    {ChainKind::non_backtracking, "non_backtracking", "Pnb"},
    {ChainKind::adjacency, "adjacency", "A"},
    {ChainKind::degree, "degree", "D"},
    {ChainKind::incidence_t, "incidence_t", "T"},
    {ChainKind::incidence_s, "incidence_s", "S"},
    {ChainKind::reversal, "reversal", "tau"},
    {ChainKind::edge_adjacency, "edge_adjacency", "C"},
    {ChainKind::nb_adjacency, "nb_adjacency", "B"},
    {ChainKind::edge_degree, "edge_degree", "De"},
}};

}  // namespace

std::string_view to_string(ChainKind kind) {
  for (const auto& k : kKindNames)
    if (k.kind == kind) return k.name;
  return "unknown";
}

ChainKind parse_chain_kind(std::string_view name) {
  for (const auto& k : kKindNames)
    if (k.name == name || k.short_name == name) return k.kind;
  if (name == "nb") return ChainKind::non_backtracking;
  throw ValidationError("unknown matrix kind '" + std::string(name) +
                        "' (expected one of P, A, D, T, S, tau, C, B, De, Pe, Pnb)");
}

bool is_transition(ChainKind kind) {
  return kind == ChainKind::vertex || kind == ChainKind::edge ||
         kind == ChainKind::non_backtracking;
}

std::string_view to_string(ScalarMode mode) {
  switch (mode) {
    case ScalarMode::automatic: return "auto";
    case ScalarMode::exact: return "exact";
    case ScalarMode::floating: return "float";
  }
  return "auto";
}

ScalarMode parse_scalar_mode(std::string_view name) {
  if (name == "auto") return ScalarMode::automatic;
  if (name == "exact") return ScalarMode::exact;
  if (name == "float") return ScalarMode::floating;
  throw ValidationError("unknown scalar mode '" + std::string(name) +
                        "' (expected exact, float or auto)");
}

bool ScalarPolicy::use_exact(std::size_t states) const {
  switch (mode) {
    case ScalarMode::floating: return false;
    case ScalarMode::automatic: return states <= exact_cap;
    case ScalarMode::exact:
      if (states > exact_cap) {
        throw ValidationError("exact mode refused: " + std::to_string(states) +
                              " states exceed the exact cap of " +
                              std::to_string(exact_cap) + " (raise --cap or use --mode float)");
      }
      return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// ChainMatrix

namespace {

Eigen::MatrixXd to_real(const DenseMatrix<Rational>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

ChainMatrix::ChainMatrix(ChainKind kind, DenseMatrix<Rational> exact)
    : kind_(kind), exact_(std::move(exact)) {
  real_ = to_real(*exact_);
}

ChainMatrix::ChainMatrix(ChainKind kind, Eigen::MatrixXd real)
    : kind_(kind), real_(std::move(real)) {}

const DenseMatrix<Rational>& ChainMatrix::exact() const {
  if (!exact_) throw std::logic_error("matrix was built in floating mode");
  return *exact_;
}

void ChainMatrix::set_entry(std::size_t i, std::size_t j, const Rational& value) {
  if (exact_) (*exact_)(i, j) = value;
  real_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value.get_d();
}

void ChainMatrix::set_entry(std::size_t i, std::size_t j, double value) {
  if (exact_) (*exact_)(i, j) = Rational(value);
  real_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
}

bool ChainMatrix::is_row_stochastic(double tol) const {
  if (exact_) {
    for (std::size_t i = 0; i < exact_->rows(); ++i) {
      Rational sum = 0;
      for (std::size_t j = 0; j < exact_->cols(); ++j) {
        if ((*exact_)(i, j) < 0) return false;
        sum += (*exact_)(i, j);
      }
      if (sum != 1) return false;
    }
    return true;
  }
  if ((real_.array() < 0).any()) return false;
  return ((real_.rowwise().sum().array() - 1.0).abs() <= tol).all();
}

bool ChainMatrix::is_column_stochastic(double tol) const {
  if (exact_) {
    for (std::size_t j = 0; j < exact_->cols(); ++j) {
      Rational sum = 0;
      for (std::size_t i = 0; i < exact_->rows(); ++i) sum += (*exact_)(i, j);
      if (sum != 1) return false;
    }
    return true;
  }
  return ((real_.colwise().sum().array() - 1.0).abs() <= tol).all();
}

std::string ChainMatrix::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) os << ',';
      if (exact_) {
        os << (*exact_)(i, j).get_str();
      } else {
        os << format_double(real_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      }
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Builders

namespace {

/// Collects (row, col, num/den) triplets and materialises them in the scalar
/// mode chosen for the matrix size.
class Builder {
 public:
  Builder(ChainKind kind, std::size_t rows, std::size_t cols, bool exact)
      : kind_(kind), exact_(exact) {
    if (exact_) {
      q_ = DenseMatrix<Rational>(rows, cols);
    } else {
      f_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows),
                                 static_cast<Eigen::Index>(cols));
    }
  }

  void set(std::size_t i, std::size_t j, long num, long den = 1) {
    if (exact_) {
      q_(i, j) = Rational(num, den);
      q_(i, j).canonicalize();
    } else {
      f_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<double>(num) / static_cast<double>(den);
    }
  }

  ChainMatrix finish() && {
    if (exact_) return ChainMatrix(kind_, std::move(q_));
    return ChainMatrix(kind_, std::move(f_));
  }

 private:
  ChainKind kind_;
  bool exact_;
  DenseMatrix<Rational> q_;
  Eigen::MatrixXd f_;
};

long as_long(std::size_t x) { return static_cast<long>(x); }

void require_transition_preconditions(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw ChainError("vertex " + std::to_string(v) +
                       " is isolated; the random walk is undefined (division by zero degree)");
    }
  }
  if (!is_connected(g)) {
    throw ReducibleChainError("graph is disconnected; the random walk is reducible");
  }
}

}  // namespace

ChainMatrix adjacency_matrix(const Graph& g, const ScalarPolicy& policy) {
  const std::size_t n = g.order();
  Builder b(ChainKind::adjacency, n, n, policy.use_exact(n));
  for (const auto& e : g.edges()) {
    b.set(e.u, e.v, 1);
    b.set(e.v, e.u, 1);
  }
  return std::move(b).finish();
}

ChainMatrix degree_matrix(const Graph& g, const ScalarPolicy& policy) {
  const std::size_t n = g.order();
  Builder b(ChainKind::degree, n, n, policy.use_exact(n));
  for (Vertex v = 0; v < n; ++v) b.set(v, v, as_long(g.degree(v)));
  return std::move(b).finish();
}

IncidenceOperators incidence_operators(const Graph& g, const OrientedEdgeIndex& idx,
                                       const ScalarPolicy& policy) {
  const std::size_t n = g.order();
  const std::size_t arcs = idx.size();
  const bool exact = policy.use_exact(std::max(n, arcs));
  Builder t(ChainKind::incidence_t, n, arcs, exact);
  Builder s(ChainKind::incidence_s, arcs, n, exact);
  Builder tau(ChainKind::reversal, arcs, arcs, exact);
  for (std::size_t a = 0; a < arcs; ++a) {
    t.set(idx.tail(a), a, 1);
    s.set(a, idx.head(a), 1);
    tau.set(a, idx.reverse(a), 1);
  }
  return {std::move(t).finish(), std::move(s).finish(), std::move(tau).finish()};
}

ChainMatrix edge_adjacency_matrix([[maybe_unused]] const Graph& g, const OrientedEdgeIndex& idx,
                                  const ScalarPolicy& policy) {
  const std::size_t arcs = idx.size();
  Builder b(ChainKind::edge_adjacency, arcs, arcs, policy.use_exact(arcs));
  for (std::size_t a = 0; a < arcs; ++a) {
    const Vertex j = idx.head(a);
    for (std::size_t next = idx.first_out(j); next < idx.first_out(j + 1); ++next) b.set(a, next, 1);
  }
  return std::move(b).finish();
}

ChainMatrix nb_adjacency_matrix([[maybe_unused]] const Graph& g, const OrientedEdgeIndex& idx,
                                const ScalarPolicy& policy) {
  const std::size_t arcs = idx.size();
  Builder b(ChainKind::nb_adjacency, arcs, arcs, policy.use_exact(arcs));
  for (std::size_t a = 0; a < arcs; ++a) {
    const Vertex j = idx.head(a);
    const std::size_t back = idx.reverse(a);
    for (std::size_t next = idx.first_out(j); next < idx.first_out(j + 1); ++next)
      if (next != back) b.set(a, next, 1);
  }
  return std::move(b).finish();
}

ChainMatrix edge_degree_matrix(const Graph& g, const OrientedEdgeIndex& idx,
                               const ScalarPolicy& policy) {
  const std::size_t arcs = idx.size();
  Builder b(ChainKind::edge_degree, arcs, arcs, policy.use_exact(arcs));
  for (std::size_t a = 0; a < arcs; ++a) b.set(a, a, as_long(g.degree(idx.head(a))));
  return std::move(b).finish();
}

ChainMatrix vertex_transition(const Graph& g, const ScalarPolicy& policy) {
  require_transition_preconditions(g);
  const std::size_t n = g.order();
  Builder b(ChainKind::vertex, n, n, policy.use_exact(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) b.set(u, v, 1, as_long(g.degree(u)));
  return std::move(b).finish();
}

ChainMatrix edge_transition(const Graph& g, const OrientedEdgeIndex& idx,
                            const ScalarPolicy& policy) {
  require_transition_preconditions(g);
  const std::size_t arcs = idx.size();
  Builder b(ChainKind::edge, arcs, arcs, policy.use_exact(arcs));
  for (std::size_t a = 0; a < arcs; ++a) {
    const Vertex j = idx.head(a);
    for (std::size_t next = idx.first_out(j); next < idx.first_out(j + 1); ++next)
      b.set(a, next, 1, as_long(g.degree(j)));
  }
  return std::move(b).finish();
}

std::optional<std::string> nb_unavailable_reason(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 1) {
      return "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
             "; D_e - I is singular, so the non-backtracking walk needs minimum degree 2";
    }
  }
  if (!is_connected(g)) return std::string("graph is disconnected; P_nb is reducible");
  const auto p = profile(g);
  if (p.is_cycle) {
    return std::string(
        "graph is a cycle; P_nb is reducible (the walk keeps its orientation forever)");
  }
  return std::nullopt;
}

ChainMatrix nb_transition(const Graph& g, const OrientedEdgeIndex& idx,
                          const ScalarPolicy& policy) {
  if (auto reason = nb_unavailable_reason(g)) {
    if (g.min_degree() <= 1) throw SingularSystemError(*reason);
    throw ReducibleChainError(*reason);
  }
  const std::size_t arcs = idx.size();
  Builder b(ChainKind::non_backtracking, arcs, arcs, policy.use_exact(arcs));
  for (std::size_t a = 0; a < arcs; ++a) {
    const Vertex j = idx.head(a);
    const std::size_t back = idx.reverse(a);
    const long den = as_long(g.degree(j)) - 1;
    for (std::size_t next = idx.first_out(j); next < idx.first_out(j + 1); ++next)
      if (next != back) b.set(a, next, 1, den);
  }
  return std::move(b).finish();
}

ChainMatrix build_matrix(const Graph& g, ChainKind kind, const ScalarPolicy& policy) {
  OrientedEdgeIndex idx(g);
  switch (kind) {
    case ChainKind::vertex: return vertex_transition(g, policy);
    case ChainKind::edge: return edge_transition(g, idx, policy);
    case ChainKind::non_backtracking: return nb_transition(g, idx, policy);
    case ChainKind::adjacency: return adjacency_matrix(g, policy);
    case ChainKind::degree: return degree_matrix(g, policy);
    case ChainKind::incidence_t: return incidence_operators(g, idx, policy).t;
    case ChainKind::incidence_s: return incidence_operators(g, idx, policy).s;
    case ChainKind::reversal: return incidence_operators(g, idx, policy).tau;
    case ChainKind::edge_adjacency: return edge_adjacency_matrix(g, idx, policy);
    case ChainKind::nb_adjacency: return nb_adjacency_matrix(g, idx, policy);
    case ChainKind::edge_degree: return edge_degree_matrix(g, idx, policy);
  }
  throw std::logic_error("unhandled chain kind");
}

}  // namespace kemeny
