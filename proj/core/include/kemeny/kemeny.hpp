#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

#include "kemeny/chain_matrices.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// Eigenvalues sorted by descending real part, then descending imaginary part.
struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  /// Largest modulus.
  double spectral_radius() const;
};

Spectrum spectrum(const ChainMatrix& p);
/// Real symmetric spectrum of A, descending.
std::vector<double> adjacency_spectrum(const Graph& g);

/// Left fixed probability vector. Throws ReducibleChainError when 1 is not a
/// simple eigenvalue.
Eigen::VectorXd stationary(const ChainMatrix& p);

/// m_ij with zero diagonal. Throws SingularSystemError when a first-passage
/// system is singular.
Eigen::MatrixXd mfpt(const ChainMatrix& p);

struct MfptKemeny {
  Eigen::VectorXd kappa;  // kappa_i = sum_{j != i} m_ij pi_j
  double value = 0;       // kappa_0
  double spread = 0;      // max kappa - min kappa
};

MfptKemeny kemeny_mfpt(const ChainMatrix& p);

/// Sum of 1/(1 - rho) over every eigenvalue but the one identified as 1.
/// Throws DomainError if 1 is missing or not simple.
double kemeny_spectrum(const Spectrum& s);
double kemeny_spectrum(const ChainMatrix& p);

struct CharpolyKemeny {
  double value = 0;
  std::optional<Rational> exact;  // present when p carries rational entries
};

CharpolyKemeny kemeny_charpoly(const ChainMatrix& p);

/// tr((I - P + 1 pi^T)^-1) - 1.
double kemeny_fundamental(const ChainMatrix& p);

struct ResistanceData {
  Eigen::MatrixXd r;       // effective resistances
  Eigen::MatrixXd lpinv;   // Laplacian pseudoinverse
};

/// Throws ChainError on a disconnected graph.
ResistanceData resistance(const Graph& g);
double kemeny_resistance(const Graph& g);

/// sum_i deg(i) r(i, v).
double moment(const Graph& g, Vertex v);
double moment(const Graph& g, const ResistanceData& rd, Vertex v);

/// K_v of one_sum(g1, v1, g2, v2) assembled from the parts.
double kemeny_one_sum(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

}  // namespace kemeny
