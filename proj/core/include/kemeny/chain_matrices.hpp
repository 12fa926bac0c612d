#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kemeny/dense_matrix.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// Bijection between directed edges and 0..2m-1, ordered lexicographically
/// by (tail, head). Arcs leaving a vertex therefore occupy a contiguous range.
class OrientedEdgeIndex {
 public:
  explicit OrientedEdgeIndex(const Graph& g);

  std::size_t size() const noexcept { return tails_.size(); }
  Vertex tail(std::size_t arc) const { return tails_.at(arc); }
  Vertex head(std::size_t arc) const { return heads_.at(arc); }

  /// Throws ValidationError when (u, v) is not an arc.
  std::size_t index(Vertex u, Vertex v) const;
  std::size_t reverse(std::size_t arc) const { return reverse_.at(arc); }

  /// Arcs with tail u are first_out(u) .. first_out(u + 1) - 1.
  std::size_t first_out(Vertex u) const { return first_out_.at(u); }

 private:
  std::vector<Vertex> tails_;
  std::vector<Vertex> heads_;
  std::vector<std::size_t> reverse_;
  std::vector<std::size_t> first_out_;
};

enum class ChainKind {
  vertex,            // P = D^-1 A
  edge,              // P_e = D_e^-1 C
  non_backtracking,  // P_nb = (D_e - I)^-1 B
  adjacency,         // A
  degree,            // D
  incidence_t,       // T, n x 2m
  incidence_s,       // S, 2m x n
  reversal,          // tau
  edge_adjacency,    // C = S T
  nb_adjacency,      // B = S T - tau
  edge_degree,       // D_e
};

std::string_view to_string(ChainKind kind);
/// Accepts the enum names plus the short forms P, A, D, T, S, tau, C, B,
/// De, Pe, Pnb.
ChainKind parse_chain_kind(std::string_view name);

bool is_transition(ChainKind kind);

enum class ScalarMode { automatic, exact, floating };

std::string_view to_string(ScalarMode mode);
ScalarMode parse_scalar_mode(std::string_view name);

/// Exact arithmetic is used automatically up to `exact_cap` states.
struct ScalarPolicy {
  ScalarMode mode = ScalarMode::automatic;
  std::size_t exact_cap = 64;

  /// Throws ValidationError when exact mode is forced above the cap.
  bool use_exact(std::size_t states) const;
};

/// Dense matrix tagged with its role. In exact mode the rational entries are
/// authoritative and the floating copy is derived from them.
class ChainMatrix {
 public:
  ChainMatrix(ChainKind kind, DenseMatrix<Rational> exact);
  ChainMatrix(ChainKind kind, Eigen::MatrixXd real);

  ChainKind kind() const noexcept { return kind_; }
  std::size_t rows() const noexcept { return static_cast<std::size_t>(real_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(real_.cols()); }
  std::size_t order() const noexcept { return rows(); }

  bool is_exact() const noexcept { return exact_.has_value(); }
  /// Throws std::logic_error when the matrix was built in floating mode.
  const DenseMatrix<Rational>& exact() const;
  const Eigen::MatrixXd& real() const noexcept { return real_; }

  /// Overwrites one entry in every representation.
  void set_entry(std::size_t i, std::size_t j, const Rational& value);
  void set_entry(std::size_t i, std::size_t j, double value);

  /// Exact comparison in exact mode, |row sum - 1| <= tol otherwise.
  bool is_row_stochastic(double tol = 1e-12) const;
  bool is_column_stochastic(double tol = 1e-12) const;

  /// Row-major CSV. Exact entries print as "p/q", floats with 12 significant
  /// digits.
  std::string to_csv() const;

 private:
  ChainKind kind_;
  std::optional<DenseMatrix<Rational>> exact_;
  Eigen::MatrixXd real_;
};

struct IncidenceOperators {
  ChainMatrix t;    // n x 2m startpoint incidence
  ChainMatrix s;    // 2m x n endpoint incidence
  ChainMatrix tau;  // 2m x 2m reversal
};

ChainMatrix adjacency_matrix(const Graph& g, const ScalarPolicy& policy = {});
ChainMatrix degree_matrix(const Graph& g, const ScalarPolicy& policy = {});
IncidenceOperators incidence_operators(const Graph& g, const OrientedEdgeIndex& idx,
                                       const ScalarPolicy& policy = {});
ChainMatrix edge_adjacency_matrix(const Graph& g, const OrientedEdgeIndex& idx,
                                  const ScalarPolicy& policy = {});
ChainMatrix nb_adjacency_matrix(const Graph& g, const OrientedEdgeIndex& idx,
                                const ScalarPolicy& policy = {});
ChainMatrix edge_degree_matrix(const Graph& g, const OrientedEdgeIndex& idx,
                               const ScalarPolicy& policy = {});

/// P = D^-1 A. Throws ChainError on an isolated vertex or a disconnected
/// graph.
ChainMatrix vertex_transition(const Graph& g, const ScalarPolicy& policy = {});

/// P_e: arc (i,j) moves to (j,l) with probability 1/deg(j).
ChainMatrix edge_transition(const Graph& g, const OrientedEdgeIndex& idx,
                            const ScalarPolicy& policy = {});

/// P_nb: arc (i,j) moves to (j,l), l != i, with probability 1/(deg(j)-1).
/// Throws SingularSystemError on a degree-1 vertex and ReducibleChainError
/// on a cycle.
ChainMatrix nb_transition(const Graph& g, const OrientedEdgeIndex& idx,
                          const ScalarPolicy& policy = {});

/// Any matrix of the family by kind.
ChainMatrix build_matrix(const Graph& g, ChainKind kind, const ScalarPolicy& policy = {});

/// Reason P_nb cannot be formed for g, or nullopt when it can.
std::optional<std::string> nb_unavailable_reason(const Graph& g);

}  // namespace kemeny
