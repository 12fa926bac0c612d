#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

struct RegularProfile {
  std::size_t n = 0;
  std::size_t d = 0;
  bool bipartite = false;
  std::vector<double> adjacency_spectrum;  // descending, first entry d
};

/// Throws DomainError unless g is connected and regular.
RegularProfile regular_profile(const Graph& g);

/// n(d-1) + sum_{i>=2} d/(d - lambda_i). Requires d >= 3 and lambda_2 < d.
double regular_edge_kemeny(const RegularProfile& p);

/// (d-2) K_e/d + 2n + 1/(d-2) - n/d. Requires d >= 3.
double regular_nb_kemeny(const RegularProfile& p, double k_e);
Rational regular_nb_kemeny(std::size_t n, std::size_t d, const Rational& k_e);

/// Spectrum of P_nb predicted from the adjacency spectrum, sorted by
/// descending real then imaginary part.
std::vector<std::complex<double>> regular_nb_spectrum(const RegularProfile& p);

/// K_4, K_5 and K_{3,3}: the regular graphs with K_nb >= K_e.
bool is_regular_exception(const RegularProfile& p);

/// True when lambda_2 and |lambda_n| are at most 2 sqrt(d-1).
bool is_ramanujan(const RegularProfile& p);

struct BiregularProfile {
  std::size_t c = 0, d = 0;  // c <= d
  std::size_t r = 0, s = 0;  // r vertices of degree c, s of degree d; r >= s
  std::size_t n = 0, m = 0;
  bool complete = false;
  std::vector<double> adjacency_spectrum;  // descending
};

/// Throws DomainError unless g is connected and (c,d)-biregular.
BiregularProfile biregular_profile(const Graph& g);

/// 2m - n + sum_{i>=2} sqrt(cd)/(sqrt(cd) - lambda_i).
double biregular_edge_kemeny(const BiregularProfile& p);

/// Closed form in K_e with the r >= s convention. Requires (c-1)(d-1) > 1.
double biregular_nb_kemeny(const BiregularProfile& p, double k_e);
Rational biregular_nb_kemeny(std::size_t c, std::size_t d, std::size_t r, std::size_t s,
                             const Rational& k_e);

/// Complete bipartite K_{2,3}, K_{2,4}, K_{2,5}, K_{3,3}.
bool is_biregular_exception(const BiregularProfile& p);

/// Edge and non-backtracking constants fed to the bound checks. Exact
/// values, when present, decide signs and equality.
struct KemenyPair {
  double k_e = 0;
  double k_nb = 0;
  std::optional<Rational> exact_e;
  std::optional<Rational> exact_nb;
};

struct BoundCheck {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;  // lhs - rhs
  std::optional<Rational> exact_margin;
  bool strict = false;
  bool satisfied = false;  // margin > 0 if strict, margin >= 0 otherwise
  bool equality = false;   // margin zero (exactly, or within 1e-9)
  bool exempt = false;     // graph is a named exception to this bound
};

/// K_e > K_nb, 1 - 2/d < K_nb/K_e < 1, K_e >= nd - 2, and the Ramanujan
/// upper bound on K_e when it applies.
std::vector<BoundCheck> regular_bounds(const RegularProfile& p, const KemenyPair& k);

/// K_e >= 2m - 3/2, K_e > K_nb, 1 - (c+d)/cd <= K_nb/K_e < 1.
std::vector<BoundCheck> biregular_bounds(const BiregularProfile& p, const KemenyPair& k);

struct KemenyTriple {
  Rational k_v, k_e, k_nb;
};

/// Necklace on n = 4k + 2 vertices, k >= 2.
KemenyTriple necklace_kemeny(std::size_t n);

}  // namespace kemeny
