#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kemeny/generators.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// Throws DomainError unless a, b >= 3 and k >= 1.
void validate(const BarbellParams& p);

struct BarbellKemeny {
  Rational k_v;
  Rational k_e;
  /// Closed form for K_nb; absent for k = 1, where it does not hold.
  std::optional<Rational> k_nb;
};

BarbellKemeny barbell_kemeny(const BarbellParams& p);

/// (2t^a - 1)(2t^b - 1)[(2t^a - 1)(2t^b - 1) t^(2(k-1)) - 1], ascending
/// coefficients. Requires k >= 2.
IntegerPolynomial barbell_nb_charpoly(const BarbellParams& p);

enum class BarbellObjective { edge, nb };

std::string_view to_string(BarbellObjective objective);
BarbellObjective parse_barbell_objective(std::string_view name);

struct BarbellArgmax {
  std::vector<BarbellParams> maximizers;  // every exact tie, a >= b
  Rational value;
};

/// Exhaustive scan over k >= 2, a >= b >= 3, a + b + k - 2 = n.
BarbellArgmax barbell_argmax(std::size_t n, BarbellObjective objective);

/// K_e(CB(n-4, 3, 3)) = (2n^3 + 12n^2 - 51n + 101) / (6(n+1)).
Rational barbell_edge_max_formula(std::size_t n);

/// K_nb(CB(2, ceil(n/2), floor(n/2))): (11n^2 + 14n + 2)/(4(n+1)) for even n,
/// (11n^2 + 14n + 1)/(4(n+1)) for odd n.
Rational barbell_nb_max_formula(std::size_t n);

}  // namespace kemeny
