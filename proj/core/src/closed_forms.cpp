#include "kemeny/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "kemeny/error.hpp"
#include "kemeny/kemeny.hpp"

namespace kemeny {

namespace {

constexpr double kEqualityTol = 1e-9;

Rational q(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

BoundCheck make_check(std::string name, double lhs, double rhs, bool strict,
                      std::optional<Rational> exact_margin = std::nullopt) {
  BoundCheck b;
  b.name = std::move(name);
  b.lhs = lhs;
  b.rhs = rhs;
  b.margin = lhs - rhs;
  b.strict = strict;
  b.exact_margin = std::move(exact_margin);
  if (b.exact_margin) {
    const int sign = sgn(*b.exact_margin);
    b.equality = sign == 0;
    b.satisfied = strict ? sign > 0 : sign >= 0;
  } else {
    b.equality = std::abs(b.margin) <= kEqualityTol * std::max(1.0, std::abs(rhs));
    b.satisfied = strict ? (b.margin > 0 && !b.equality) : (b.margin >= 0 || b.equality);
  }
  return b;
}

std::optional<Rational> exact_ratio(const KemenyPair& k) {
  if (!k.exact_e || !k.exact_nb) return std::nullopt;
  return *k.exact_nb / *k.exact_e;
}

}  // namespace

RegularProfile regular_profile(const Graph& g) {
  const auto prof = profile(g);
  if (!prof.connected) throw DomainError("regular closed forms need a connected graph");
  if (!prof.regular_degree) throw DomainError("graph is not regular: " + describe(g));
  RegularProfile p;
  p.n = g.order();
  p.d = *prof.regular_degree;
  p.bipartite = prof.bipartite;
  p.adjacency_spectrum = adjacency_spectrum(g);
  return p;
}

double regular_edge_kemeny(const RegularProfile& p) {
  if (p.d < 3) throw DomainError("regular formulas need d >= 3, got d = " + std::to_string(p.d));
  const double d = static_cast<double>(p.d);
  if (p.adjacency_spectrum.size() != p.n) throw ValidationError("spectrum size differs from n");
  if (p.n > 1 && p.adjacency_spectrum[1] > d - 1e-9)
    throw DomainError("lambda_2 = d: graph is disconnected");
  double sum = 0;
  for (std::size_t i = 1; i < p.n; ++i) sum += d / (d - p.adjacency_spectrum[i]);
  return static_cast<double>(p.n) * (d - 1) + sum;
}

double regular_nb_kemeny(const RegularProfile& p, double k_e) {
  if (p.d < 3) throw DomainError("regular formulas need d >= 3, got d = " + std::to_string(p.d));
  const double d = static_cast<double>(p.d);
  const double n = static_cast<double>(p.n);
  return (d - 2) * k_e / d + 2 * n + 1 / (d - 2) - n / d;
}

Rational regular_nb_kemeny(std::size_t n, std::size_t d, const Rational& k_e) {
  if (d < 3) throw DomainError("regular formulas need d >= 3, got d = " + std::to_string(d));
  Rational out = (q(d) - 2) * k_e / q(d) + 2 * q(n) + 1 / (q(d) - 2) - q(n) / q(d);
  out.canonicalize();
  return out;
}

std::vector<std::complex<double>> regular_nb_spectrum(const RegularProfile& p) {
  if (p.d < 3) throw DomainError("regular formulas need d >= 3, got d = " + std::to_string(p.d));
  const double d1 = static_cast<double>(p.d) - 1;
  const std::size_t m = p.n * p.d / 2;
  std::vector<std::complex<double>> out;
  out.reserve(2 * m);
  for (std::size_t i = 0; i + p.n < m; ++i) {
    out.emplace_back(1 / d1, 0);
    out.emplace_back(-1 / d1, 0);
  }
  for (double lambda : p.adjacency_spectrum) {
    const std::complex<double> root = std::sqrt(std::complex<double>(lambda * lambda - 4 * d1, 0));
    out.push_back((lambda + root) / (2 * d1));
    out.push_back((lambda - root) / (2 * d1));
  }
  for (auto& z : out)
    if (std::abs(z.imag()) < 1e-12) z = {z.real(), 0.0};
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

bool is_regular_exception(const RegularProfile& p) {
  return (p.n == 4 && p.d == 3) || (p.n == 5 && p.d == 4) || (p.n == 6 && p.d == 3 && p.bipartite);
}

bool is_ramanujan(const RegularProfile& p) {
  if (p.n < 2 || p.d < 1) return false;
  const double bound = 2 * std::sqrt(static_cast<double>(p.d) - 1) + 1e-12;
  return p.adjacency_spectrum[1] <= bound && std::abs(p.adjacency_spectrum.back()) <= bound;
}

std::vector<BoundCheck> regular_bounds(const RegularProfile& p, const KemenyPair& k) {
  if (p.d < 3) throw DomainError("regular bounds need d >= 3, got d = " + std::to_string(p.d));
  const bool exception = is_regular_exception(p);
  const double d = static_cast<double>(p.d);
  const double n = static_cast<double>(p.n);
  const auto ratio_exact = exact_ratio(k);
  const double ratio = k.k_nb / k.k_e;
  std::vector<BoundCheck> out;

  std::optional<Rational> diff;
  if (k.exact_e && k.exact_nb) diff = *k.exact_e - *k.exact_nb;
  out.push_back(make_check("edge_exceeds_nb", k.k_e, k.k_nb, true, diff));

  std::optional<Rational> lower_margin, upper_margin;
  if (ratio_exact) {
    lower_margin = *ratio_exact - (1 - Rational(2, static_cast<unsigned long>(p.d)));
    upper_margin = 1 - *ratio_exact;
  }
  out.push_back(make_check("ratio_lower", ratio, 1 - 2 / d, true, lower_margin));
  out.push_back(make_check("ratio_upper", 1, ratio, true, upper_margin));
  for (auto& b : out) b.exempt = exception;

  std::optional<Rational> finite_margin;
  if (k.exact_e) finite_margin = *k.exact_e - (q(p.n) * q(p.d) - 2);
  out.push_back(make_check("edge_lower_nd_minus_2", k.k_e, n * d - 2, false, finite_margin));

  if (is_ramanujan(p)) {
    const double bound = n * (d - 1 + d / (d - 2 * std::sqrt(d - 1)));
    out.push_back(make_check("ramanujan_edge_upper", bound, k.k_e, false));
  }
  return out;
}

BiregularProfile biregular_profile(const Graph& g) {
  const auto prof = profile(g);
  if (!prof.connected) throw DomainError("biregular closed forms need a connected graph");
  if (!prof.biregular) throw DomainError("graph is not biregular: " + describe(g));
  BiregularProfile p;
  p.c = prof.biregular->c;
  p.d = prof.biregular->d;
  p.r = prof.biregular->r;
  p.s = prof.biregular->s;
  p.n = g.order();
  p.m = g.size();
  p.complete = p.m == p.r * p.s;
  p.adjacency_spectrum = adjacency_spectrum(g);
  return p;
}

double biregular_edge_kemeny(const BiregularProfile& p) {
  if (p.adjacency_spectrum.size() != p.n) throw ValidationError("spectrum size differs from n");
  const double root = std::sqrt(static_cast<double>(p.c * p.d));
  if (p.n > 1 && p.adjacency_spectrum[1] > root - 1e-9)
    throw DomainError("second adjacency eigenvalue equals sqrt(cd): graph is disconnected");
  double sum = 0;
  for (std::size_t i = 1; i < p.n; ++i) sum += root / (root - p.adjacency_spectrum[i]);
  return 2.0 * static_cast<double>(p.m) - static_cast<double>(p.n) + sum;
}

namespace {

void require_nb_biregular(std::size_t c, std::size_t d, std::size_t r, std::size_t s) {
  if (c > d || r < s) throw DomainError("biregular formula expects c <= d and r >= s");
  if (c < 2 || (c - 1) * (d - 1) <= 1)
    throw DomainError("non-backtracking biregular formula needs (c-1)(d-1) > 1 (c = " +
                      std::to_string(c) + ", d = " + std::to_string(d) + ")");
}

}  // namespace

double biregular_nb_kemeny(const BiregularProfile& p, double k_e) {
  require_nb_biregular(p.c, p.d, p.r, p.s);
  const double c = static_cast<double>(p.c), d = static_cast<double>(p.d);
  const double r = static_cast<double>(p.r), s = static_cast<double>(p.s);
  const double n = r + s, m = c * r;
  const double cd1 = (c - 1) * (d - 1);
  return 2 * (m - n + 1) * cd1 / (cd1 - 1) + 2 * (r - s) * (d - 1) / d + 0.5 + 2 * (s - 1) +
         (c * d - c - d) / (c * d) * (k_e - 2 * m + n - 0.5 - (r - s));
}

Rational biregular_nb_kemeny(std::size_t c_, std::size_t d_, std::size_t r_, std::size_t s_,
                             const Rational& k_e) {
  require_nb_biregular(c_, d_, r_, s_);
  const Rational c = q(c_), d = q(d_), r = q(r_), s = q(s_);
  const Rational n = r + s, m = c * r;
  const Rational cd1 = (c - 1) * (d - 1);
  const Rational half(1, 2);
  Rational out = 2 * (m - n + 1) * cd1 / (cd1 - 1) + 2 * (r - s) * (d - 1) / d + half +
                 2 * (s - 1) + (c * d - c - d) / (c * d) * (k_e - 2 * m + n - half - (r - s));
  out.canonicalize();
  return out;
}

bool is_biregular_exception(const BiregularProfile& p) {
  if (!p.complete) return false;
  return (p.c == 2 && (p.d == 3 || p.d == 4 || p.d == 5)) || (p.c == 3 && p.d == 3);
}

std::vector<BoundCheck> biregular_bounds(const BiregularProfile& p, const KemenyPair& k) {
  const double c = static_cast<double>(p.c), d = static_cast<double>(p.d);
  const double m = static_cast<double>(p.m);
  std::vector<BoundCheck> out;

  std::optional<Rational> bound_margin;
  if (k.exact_e) bound_margin = *k.exact_e - (2 * q(p.m) - Rational(3, 2));
  out.push_back(make_check("bipartite_edge_lower", k.k_e, 2 * m - 1.5, false, bound_margin));

  const bool exception = is_biregular_exception(p);
  std::optional<Rational> diff;
  if (k.exact_e && k.exact_nb) diff = *k.exact_e - *k.exact_nb;
  auto difference = make_check("edge_exceeds_nb", k.k_e, k.k_nb, true, diff);

  const auto ratio_exact = exact_ratio(k);
  const double ratio = k.k_nb / k.k_e;
  std::optional<Rational> lower_margin, upper_margin;
  if (ratio_exact) {
    lower_margin = *ratio_exact - (1 - (q(p.c) + q(p.d)) / (q(p.c) * q(p.d)));
    upper_margin = 1 - *ratio_exact;
  }
  auto lower = make_check("ratio_lower", ratio, 1 - (c + d) / (c * d), false, lower_margin);
  auto upper = make_check("ratio_upper", 1, ratio, true, upper_margin);
  for (auto* b : {&difference, &lower, &upper}) {
    b->exempt = exception;
    out.push_back(*b);
  }
  return out;
}

KemenyTriple necklace_kemeny(std::size_t n) {
  if (n < 10 || n % 4 != 2)
    throw DomainError("necklace order must be 4k + 2 with k >= 2, got " + std::to_string(n));
  const Rational x = q(n);
  KemenyTriple t;
  t.k_v = (4 * x * x * x + 3 * x * x - 122 * x + 216) / (16 * x);
  t.k_e = (4 * x * x * x + 35 * x * x - 122 * x + 216) / (16 * x);
  t.k_nb = (4 * x * x * x + 115 * x * x - 74 * x + 216) / (48 * x);
  t.k_v.canonicalize();
  t.k_e.canonicalize();
  t.k_nb.canonicalize();
  return t;
}

}  // namespace kemeny
