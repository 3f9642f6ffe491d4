#pragma once

// Factorization in Z[t^{+-1}, x_1^{+-1}, ..., x_{2g}^{+-1}].
//
// Units (signed monomials) are split off first, the integer content is
// factored into primes, and the primitive part is split by content in each
// variable and by Yun's squarefree decomposition. Squarefree pieces in one
// variable go to Zassenhaus; pieces in several variables are mapped to one
// variable by a Kronecker substitution, factored there, and recombined.

#include <string>
#include <utility>
#include <vector>

#include "tka/laurent.hpp"

namespace tka {

struct Factorization {
  UnitMonomial unit;
  /// Irreducible factors in canonical associate form (normalize_unit), with
  /// multiplicities; integer primes appear as constants. Sorted by
  /// canonical_less, pairwise distinct.
  std::vector<std::pair<LaurentPoly, int>> factors;
  int genus = 0;
};

/// Prime factors of |n| > 0 with repetition, ascending.
std::vector<Integer> factor_integer(const Integer& n);

/// Throws DomainError for zero.
Factorization factor(const LaurentPoly& p);

/// As factor(), but requires that at most one variable occurs.
Factorization factor_univariate(const LaurentPoly& p);

/// Product of the distinct irreducible factors, unit-normalized. Throws
/// DomainError for zero.
LaurentPoly squarefree_part(const LaurentPoly& p);

/// p == u * q for some unit u. Two zeros are associate.
bool is_associate(const LaurentPoly& p, const LaurentPoly& q);

/// Multiplies a factorization back out.
LaurentPoly expand(const Factorization& f);

/// "unit * (f1)^m1 * (f2)^m2 ..." with exponents of 1 omitted.
std::string to_string(const Factorization& f);

}  // namespace tka
