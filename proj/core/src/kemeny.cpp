#include "kemeny/kemeny.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kemeny/charpoly.hpp"
#include "kemeny/error.hpp"

namespace kemeny {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kSimpleGap = 1e-6;
constexpr double kImagTol = 1e-9;
constexpr double kRcondFloor = 1e-13;

void require_square(const ChainMatrix& p) {
  if (p.rows() != p.cols() || p.rows() == 0)
    throw ValidationError("expected a nonempty square matrix, got " + std::to_string(p.rows()) +
                          "x" + std::to_string(p.cols()));
}

void sort_spectrum(std::vector<std::complex<double>>& ev) {
  for (auto& z : ev)
    if (std::abs(z.imag()) < 1e-12) z = {z.real(), 0.0};
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

Eigen::MatrixXd laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
    l(e.u, e.v) -= 1;
    l(e.v, e.u) -= 1;
  }
  return l;
}

}  // namespace

double Spectrum::spectral_radius() const {
  double r = 0;
  for (const auto& z : eigenvalues) r = std::max(r, std::abs(z));
  return r;
}

namespace {

/// Rows uniform over a symmetric support, as for D^-1 A.
bool is_simple_walk(const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double w = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double x = m(i, j);
      if ((x != 0) != (m(j, i) != 0)) return false;
      if (x == 0) continue;
      if (w == 0) w = x;
      else if (x != w) return false;
    }
  }
  return true;
}

}  // namespace

Spectrum spectrum(const ChainMatrix& p) {
  require_square(p);
  const Eigen::MatrixXd& m = p.real();
  Spectrum s;
  const bool symmetric_form =
      (p.kind() == ChainKind::vertex && is_simple_walk(m)) ||
      ((p.kind() == ChainKind::adjacency || p.kind() == ChainKind::degree) && m == m.transpose());
  if (symmetric_form) {
    // For P = D^-1 A, sqrt(p_ij p_ji) = a_ij / sqrt(d_i d_j) is the similar
    // matrix D^-1/2 A D^-1/2.
    Eigen::MatrixXd sym = p.kind() == ChainKind::vertex ? (m.cwiseProduct(m.transpose())).cwiseSqrt()
                                                        : m;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ChainError("symmetric eigensolver did not converge");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
      s.eigenvalues.emplace_back(solver.eigenvalues()(i), 0.0);
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    if (solver.info() != Eigen::Success) throw ChainError("eigensolver did not converge");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
      s.eigenvalues.push_back(solver.eigenvalues()(i));
  }
  sort_spectrum(s.eigenvalues);
  return s;
}

std::vector<double> adjacency_spectrum(const Graph& g) {
  const auto a = adjacency_matrix(g, {ScalarMode::floating});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.real(), Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Eigen::VectorXd stationary(const ChainMatrix& p) {
  require_square(p);
  const auto n = static_cast<Eigen::Index>(p.order());
  Eigen::MatrixXd sys = (Eigen::MatrixXd::Identity(n, n) - p.real()).transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> rank_check(sys);
  rank_check.setThreshold(1e-10);
  if (rank_check.rank() != n - 1)
    throw ReducibleChainError("eigenvalue 1 is not simple (rank of I - P is " +
                              std::to_string(rank_check.rank()) + ", expected " +
                              std::to_string(n - 1) + ")");
  sys.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1;
  Eigen::VectorXd pi = sys.fullPivLu().solve(rhs);
  if (pi.minCoeff() <= 0) throw ReducibleChainError("stationary distribution has a nonpositive entry");
  return pi;
}

Eigen::MatrixXd mfpt(const ChainMatrix& p) {
  require_square(p);
  const auto n = static_cast<Eigen::Index>(p.order());
  const Eigen::MatrixXd& m = p.real();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  if (n == 1) return out;
  for (Eigen::Index j = 0; j < n; ++j) {
    // (I - P restricted to states != j) x = 1
    Eigen::MatrixXd sys(n - 1, n - 1);
    for (Eigen::Index r = 0, i = 0; i < n; ++i) {
      if (i == j) continue;
      for (Eigen::Index c = 0, k = 0; k < n; ++k) {
        if (k == j) continue;
        sys(r, c++) = (i == k ? 1.0 : 0.0) - m(i, k);
      }
      ++r;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys);
    if (!(lu.rcond() > kRcondFloor))
      throw SingularSystemError("first-passage system for target " + std::to_string(j) +
                                " is singular; chain is reducible");
    const Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(n - 1));
    for (Eigen::Index r = 0, i = 0; i < n; ++i) {
      if (i == j) continue;
      out(i, j) = x(r++);
    }
  }
  return out;
}

MfptKemeny kemeny_mfpt(const ChainMatrix& p) {
  const Eigen::MatrixXd m = mfpt(p);
  const Eigen::VectorXd pi = stationary(p);
  MfptKemeny out;
  out.kappa = m * pi;  // diagonal of m is zero
  out.value = out.kappa(0);
  out.spread = out.kappa.maxCoeff() - out.kappa.minCoeff();
  return out;
}

double kemeny_spectrum(const Spectrum& s) {
  const auto& ev = s.eigenvalues;
  if (ev.empty()) throw DomainError("empty spectrum");
  // Sorted by real part, so the candidate for 1 is first.
  const std::complex<double> one = ev.front();
  if (std::abs(one - 1.0) >= kUnitTol)
    throw DomainError("no eigenvalue within 1e-9 of 1 (largest real part is " +
                      std::to_string(one.real()) + ")");
  std::complex<double> sum = 0;
  for (std::size_t i = 1; i < ev.size(); ++i) {
    const auto gap = 1.0 - ev[i];
    if (std::abs(gap) <= kSimpleGap)
      throw DomainError("eigenvalue 1 is not simple; chain is reducible");
    sum += 1.0 / gap;
  }
  if (std::abs(sum.imag()) >= kImagTol * std::max(1.0, std::abs(sum.real())))
    throw CrossCheckError("imaginary residual " + std::to_string(sum.imag()) +
                          " in spectral sum");
  return sum.real();
}

double kemeny_spectrum(const ChainMatrix& p) { return kemeny_spectrum(spectrum(p)); }

CharpolyKemeny kemeny_charpoly(const ChainMatrix& p) {
  require_square(p);
  CharpolyKemeny out;
  if (p.is_exact()) {
    out.exact = kemeny_from_charpoly(charpoly_rational(p.exact()));
    out.value = to_double(*out.exact);
  } else {
    out.value = kemeny_from_hessenberg(p.real());
  }
  return out;
}

double kemeny_fundamental(const ChainMatrix& p) {
  require_square(p);
  const auto n = static_cast<Eigen::Index>(p.order());
  const Eigen::VectorXd pi = stationary(p);
  const Eigen::MatrixXd a =
      Eigen::MatrixXd::Identity(n, n) - p.real() + Eigen::VectorXd::Ones(n) * pi.transpose();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  if (!(lu.rcond() > kRcondFloor)) throw SingularSystemError("fundamental matrix is singular");
  return lu.inverse().trace() - 1.0;
}

ResistanceData resistance(const Graph& g) {
  if (!is_connected(g)) throw ChainError("resistance needs a connected graph");
  const auto n = static_cast<Eigen::Index>(g.order());
  const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  ResistanceData rd;
  rd.lpinv = (laplacian(g) + j).inverse() - j;
  rd.r.resize(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      rd.r(a, b) = a == b ? 0.0 : rd.lpinv(a, a) + rd.lpinv(b, b) - 2 * rd.lpinv(a, b);
  return rd;
}

double kemeny_resistance(const Graph& g) {
  if (g.size() == 0) throw ChainError("graph has no edges");
  const auto rd = resistance(g);
  const auto deg = g.degrees();
  Eigen::VectorXd d(static_cast<Eigen::Index>(deg.size()));
  for (std::size_t i = 0; i < deg.size(); ++i) d(static_cast<Eigen::Index>(i)) = deg[i];
  return d.dot(rd.r * d) / (4.0 * static_cast<double>(g.size()));
}

double moment(const Graph& g, const ResistanceData& rd, Vertex v) {
  if (v >= g.order()) throw ValidationError("vertex " + std::to_string(v) + " out of range");
  double mu = 0;
  for (Vertex i = 0; i < g.order(); ++i) mu += g.degree(i) * rd.r(i, v);
  return mu;
}

double moment(const Graph& g, Vertex v) { return moment(g, resistance(g), v); }

double kemeny_one_sum(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  const double m1 = static_cast<double>(g1.size());
  const double m2 = static_cast<double>(g2.size());
  if (m1 + m2 == 0) throw DomainError("1-sum of two edgeless graphs");
  const double k1 = m1 > 0 ? kemeny_resistance(g1) : 0.0;
  const double k2 = m2 > 0 ? kemeny_resistance(g2) : 0.0;
  return (m1 * (k1 + moment(g2, v2)) + m2 * (k2 + moment(g1, v1))) / (m1 + m2);
}

}  // namespace kemeny
