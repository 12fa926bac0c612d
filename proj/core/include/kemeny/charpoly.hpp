#pragma once

#include <Eigen/Dense>

#include "kemeny/dense_matrix.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// det(tI - M) of an integer matrix, exactly. Computed by Hessenberg
/// reduction modulo enough 62-bit primes to cover a Hadamard-type bound on
/// the coefficients, then Chinese remaindering.
IntegerPolynomial charpoly_integer(const DenseMatrix<Integer>& m);

/// Monic det(tI - M) of a rational matrix, via the integer matrix L*M where
/// L is the lcm of the denominators.
RationalPolynomial charpoly_rational(const DenseMatrix<Rational>& m);

/// Coefficients of q(x) = p(1 - x).
RationalPolynomial reflect_at_one(const RationalPolynomial& p);

/// -c2/c1 where p(1 - x) = ... + c2 x^2 + c1 x. Invariant under scaling p.
/// Throws DomainError when c1 = 0 (eigenvalue 1 not simple) and
/// CrossCheckError when p(1) != 0 (1 is not an eigenvalue).
Rational kemeny_from_charpoly(const RationalPolynomial& p);
Rational kemeny_from_charpoly(const IntegerPolynomial& p);

/// Floating counterpart: reduces P to upper Hessenberg form by Householder
/// similarity and evaluates p'(1), p''(1) with the Hessenberg determinant
/// recurrence, returning p''(1) / (2 p'(1)).
double kemeny_from_hessenberg(const Eigen::MatrixXd& p);

RationalPolynomial to_rational(const IntegerPolynomial& p);

/// Evaluates at a rational point (Horner).
Rational evaluate(const RationalPolynomial& p, const Rational& x);

/// p * q.
IntegerPolynomial multiply(const IntegerPolynomial& p, const IntegerPolynomial& q);

}  // namespace kemeny
