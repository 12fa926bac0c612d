#include "kemeny/barbell.hpp"

#include <string>

#include "kemeny/charpoly.hpp"
#include "kemeny/error.hpp"

namespace kemeny {

namespace {

Rational q(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

/// 2t^e - 1
IntegerPolynomial twice_power_minus_one(std::size_t e) {
  IntegerPolynomial p(e + 1, Integer(0));
  p[0] = -1;
  p[e] += 2;
  return p;
}

std::string params_text(const BarbellParams& p) {
  return "CB(" + std::to_string(p.k) + "," + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

}  // namespace

void validate(const BarbellParams& p) {
  if (p.a < 3 || p.b < 3 || p.k < 1)
    throw DomainError("cycle barbell needs a, b >= 3 and k >= 1, got " + params_text(p));
}

BarbellKemeny barbell_kemeny(const BarbellParams& p) {
  validate(p);
  const Rational a = q(p.a), b = q(p.b), k = q(p.k);
  const Rational m = a + b + k - 1;
  const Rational k1 = k - 1;
  BarbellKemeny out;
  out.k_v = ((a + 1) * (a - 1) / 6 * (a + 2 * (b + k1)) + (b + 1) * (b - 1) / 6 * (b + 2 * (a + k1)) +
             (a + b) * k1 * k1 + k1 * (2 * k * k - 4 * k + 3) / 6 + 2 * a * b * k1) /
            m;
  out.k_v.canonicalize();
  out.k_e = out.k_v + a + b + k;
  out.k_e.canonicalize();
  if (p.k >= 2) {
    Rational nb = (2 * m * m + 3 * (a + b) * (a + b) + 2 * a * b + 4 * (a + b) * k1 - m) / (2 * m);
    nb.canonicalize();
    out.k_nb = nb;
  }
  return out;
}

IntegerPolynomial barbell_nb_charpoly(const BarbellParams& p) {
  validate(p);
  if (p.k < 2)
    throw DomainError("the barbell characteristic polynomial formula needs k >= 2; use the engine "
                      "route for " + params_text(p));
  const IntegerPolynomial ab = multiply(twice_power_minus_one(p.a), twice_power_minus_one(p.b));
  IntegerPolynomial inner(ab.size() + 2 * (p.k - 1), Integer(0));
  for (std::size_t i = 0; i < ab.size(); ++i) inner[i + 2 * (p.k - 1)] = ab[i];
  inner[0] -= 1;
  return multiply(ab, inner);
}

std::string_view to_string(BarbellObjective objective) {
  return objective == BarbellObjective::edge ? "edge" : "nb";
}

BarbellObjective parse_barbell_objective(std::string_view name) {
  if (name == "edge" || name == "e") return BarbellObjective::edge;
  if (name == "nb" || name == "non_backtracking") return BarbellObjective::nb;
  throw ValidationError("unknown barbell objective '" + std::string(name) + "' (use edge or nb)");
}

BarbellArgmax barbell_argmax(std::size_t n, BarbellObjective objective) {
  // k >= 2 and a, b >= 3 need n >= 6.
  if (n < 6) throw DomainError("no cycle barbell with k >= 2 on " + std::to_string(n) + " vertices");
  BarbellArgmax best;
  bool any = false;
  for (std::size_t k = 2; k + 4 <= n; ++k) {
    const std::size_t sum = n + 2 - k;  // a + b
    for (std::size_t b = 3; 2 * b <= sum; ++b) {
      const BarbellParams p{k, sum - b, b};
      const auto vals = barbell_kemeny(p);
      const Rational& v = objective == BarbellObjective::edge ? vals.k_e : *vals.k_nb;
      if (!any || v > best.value) {
        best.value = v;
        best.maximizers = {p};
        any = true;
      } else if (v == best.value) {
        best.maximizers.push_back(p);
      }
    }
  }
  return best;
}

Rational barbell_edge_max_formula(std::size_t n) {
  if (n < 6) throw DomainError("CB(n-4,3,3) needs n >= 6");
  const Rational x = q(n);
  Rational v = (2 * x * x * x + 12 * x * x - 51 * x + 101) / (6 * (x + 1));
  v.canonicalize();
  return v;
}

Rational barbell_nb_max_formula(std::size_t n) {
  if (n < 6) throw DomainError("CB(2, ceil(n/2), floor(n/2)) needs n >= 6");
  const Rational x = q(n);
  Rational v = (11 * x * x + 14 * x + (n % 2 == 0 ? 2 : 1)) / (4 * (x + 1));
  v.canonicalize();
  return v;
}

}  // namespace kemeny
