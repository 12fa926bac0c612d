#include "kemeny/charpoly.hpp"

#include <cstdint>
#include <mutex>
#include <utility>
#include <vector>

#include "kemeny/error.hpp"

namespace kemeny {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit integers.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Primes descending from 2^62, generated on demand.
u64 nth_prime(std::size_t i) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[i];
}

static_assert(sizeof(unsigned long) == sizeof(u64));

u64 reduce(const Integer& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

/// det(tI - M) mod p, ascending coefficients.
std::vector<u64> charpoly_mod(std::vector<u64> h, std::size_t n, u64 p) {
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  auto sub = [p](u64 a, u64 b) { return a >= b ? a - b : a + (p - b); };
  auto add = [p](u64 a, u64 b) { u64 s = a + b; return s >= p ? s - p : s; };

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t pivot = col + 1;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, pivot), at(i, col + 1));
    }
    const u64 inv = invmod(at(col + 1, col), p);
    for (std::size_t i = col + 2; i < n; ++i) {
      const u64 u = mulmod(at(i, col), inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) at(i, j) = sub(at(i, j), mulmod(u, at(col + 1, j), p));
      for (std::size_t j = 0; j < n; ++j) at(j, col + 1) = add(at(j, col + 1), mulmod(u, at(j, i), p));
    }
  }

  // p_{k+1} = (t - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<u64> next(k + 2, 0);
    const auto& pk = polys[k];
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] = add(next[d + 1], pk[d]);
      next[d] = sub(next[d], mulmod(at(k, k), pk[d], p));
    }
    u64 prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = mulmod(prod, at(i + 1, i), p);
      if (prod == 0) break;
      const u64 coef = mulmod(at(i, k), prod, p);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d)
        next[d] = sub(next[d], mulmod(coef, polys[i][d], p));
    }
    polys[k + 1] = std::move(next);
  }
  return polys[n];
}

}  // namespace

IntegerPolynomial charpoly_integer(const DenseMatrix<Integer>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ValidationError("characteristic polynomial needs a square matrix");
  if (n == 0) return {Integer(1)};

  // Every k x k principal minor is at most beta^k by Hadamard, with beta the
  // largest row norm, so all coefficients are bounded by (1 + beta)^n.
  Integer max_row_sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += m(i, j) * m(i, j);
    if (row > max_row_sq) max_row_sq = row;
  }
  Integer beta = sqrt(max_row_sq) + 1;
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), Integer(beta + 1).get_mpz_t(), n);
  const Integer needed = 2 * bound + 1;

  std::vector<Integer> result(n + 1, Integer(0));
  Integer modulus = 1;
  for (std::size_t pi = 0; modulus <= needed; ++pi) {
    const u64 p = nth_prime(pi);
    std::vector<u64> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = reduce(m(i, j), p);
    const auto residues = charpoly_mod(std::move(entries), n, p);

    const Integer pz(static_cast<unsigned long>(p));
    const u64 modulus_inv = invmod(reduce(modulus, p), p);
    for (std::size_t d = 0; d <= n; ++d) {
      const u64 current = reduce(result[d], p);
      const u64 diff = residues[d] >= current ? residues[d] - current : residues[d] + (p - current);
      const u64 step = mulmod(diff, modulus_inv, p);
      result[d] += modulus * Integer(static_cast<unsigned long>(step));
    }
    modulus *= pz;
  }
  const Integer half = modulus / 2;
  for (auto& c : result)
    if (c > half) c -= modulus;
  return result;
}

RationalPolynomial charpoly_rational(const DenseMatrix<Rational>& m) {
  const std::size_t n = m.rows();
  Integer lcm = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());

  DenseMatrix<Integer> scaled(n, m.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * Rational(lcm);
      scaled(i, j) = v.get_num();
    }
  const IntegerPolynomial a = charpoly_integer(scaled);

  // det(tI - M) = L^-n det(L t I - L M): coefficient k scales by L^(k-n).
  RationalPolynomial out(n + 1);
  Integer power = 1;  // L^(n-k), built from k = n downwards
  for (std::size_t k = n + 1; k-- > 0;) {
    out[k] = Rational(a[k], power);
    out[k].canonicalize();
    power *= lcm;
  }
  return out;
}

RationalPolynomial reflect_at_one(const RationalPolynomial& p) {
  // p(1 - x) = sum_k a_k sum_j C(k, j) (-x)^j
  const std::size_t n = p.size();
  RationalPolynomial q(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    if (p[k] == 0) continue;
    Integer binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      Rational term = p[k] * Rational(binom);
      if (j % 2) term = -term;
      q[j] += term;
      binom = binom * Integer(static_cast<unsigned long>(k - j)) / Integer(static_cast<unsigned long>(j + 1));
    }
  }
  return q;
}

Rational kemeny_from_charpoly(const RationalPolynomial& p) {
  if (p.size() < 2) throw DomainError("characteristic polynomial of degree < 1");
  const RationalPolynomial q = reflect_at_one(p);
  if (q[0] != 0) throw CrossCheckError("1 is not a root of the characteristic polynomial");
  if (q[1] == 0) throw DomainError("eigenvalue 1 is not simple (c1 = 0); chain is reducible");
  const Rational c2 = q.size() > 2 ? q[2] : Rational(0);
  Rational k = -c2 / q[1];
  k.canonicalize();
  return k;
}

Rational kemeny_from_charpoly(const IntegerPolynomial& p) {
  return kemeny_from_charpoly(to_rational(p));
}

double kemeny_from_hessenberg(const Eigen::MatrixXd& p) {
  const Eigen::Index n = p.rows();
  if (n == 0 || p.cols() != n) throw DomainError("Hessenberg route needs a nonempty square matrix");
  Eigen::MatrixXd h = n > 2 ? Eigen::MatrixXd(Eigen::HessenbergDecomposition<Eigen::MatrixXd>(p).matrixH())
                            : p;

  // Values of the leading principal characteristic polynomials and their
  // first two derivatives at t = 1.
  using real = long double;
  std::vector<real> v(n + 1), d1(n + 1), d2(n + 1);
  v[0] = 1;
  d1[0] = 0;
  d2[0] = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const real shift = 1.0L - h(k, k);
    real nv = shift * v[k];
    real nd1 = v[k] + shift * d1[k];
    real nd2 = 2 * d1[k] + shift * d2[k];
    real prod = 1;
    for (Eigen::Index i = k; i-- > 0;) {
      prod *= h(i + 1, i);
      const real coef = h(i, k) * prod;
      nv -= coef * v[i];
      nd1 -= coef * d1[i];
      nd2 -= coef * d2[i];
    }
    v[k + 1] = nv;
    d1[k + 1] = nd1;
    d2[k + 1] = nd2;
  }
  if (d1[n] == 0) throw DomainError("eigenvalue 1 is not simple (p'(1) = 0)");
  return static_cast<double>(d2[n] / (2 * d1[n]));
}

RationalPolynomial to_rational(const IntegerPolynomial& p) {
  RationalPolynomial out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

Rational evaluate(const RationalPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

IntegerPolynomial multiply(const IntegerPolynomial& p, const IntegerPolynomial& q) {
  if (p.empty() || q.empty()) return {};
  IntegerPolynomial out(p.size() + q.size() - 1, Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

}  // namespace kemeny
