#pragma once

// Dense univariate polynomials over Z and over Z/p, and the Zassenhaus
// factorization pipeline built on them. Coefficient vectors are stored
// lowest degree first with no trailing zeros; the zero polynomial is empty.

#include <cstdint>
#include <vector>

#include "tka/laurent.hpp"

namespace tka::upoly {

using ZPoly = std::vector<Integer>;
using ZpPoly = std::vector<std::uint64_t>;

void trim(ZPoly& a);
int degree(const ZPoly& a);  // -1 for zero
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& a);
Integer content(const ZPoly& a);  // nonnegative
/// a / b over Z if b divides a exactly.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient);
/// Primitive gcd with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Conversion from and to a Laurent polynomial in a single variable.
ZPoly from_laurent(const LaurentPoly& p, std::size_t var);
LaurentPoly to_laurent(const ZPoly& a, int genus, std::size_t var);

// ---- arithmetic modulo a prime p < 2^32

ZpPoly reduce(const ZPoly& a, std::uint64_t p);
ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p);
void zp_divmod(const ZpPoly& a, const ZpPoly& b, std::uint64_t p, ZpPoly& q, ZpPoly& r);
ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p);  // monic
/// Monic irreducible factors of a squarefree polynomial modulo p (p odd),
/// by distinct-degree then equal-degree splitting. Sorted deterministically.
std::vector<ZpPoly> factor_mod_p(const ZpPoly& f, std::uint64_t p);

// ---- lifting and recombination

/// Coefficient bound B: every factor g of f satisfies
/// |lc(f)/lc(g)| * ||g||_inf <= B.
Integer factor_bound(const ZPoly& f);

/// Lifts the factorization f = lc(f) * prod(factors) mod p to a modulus
/// p^(2^k) >= target. Returns the monic lifted factors; the modulus is
/// stored in `modulus`.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ZpPoly>& factors, std::uint64_t p,
                               const Integer& target, Integer& modulus);

/// Irreducible factors of a squarefree primitive f with positive leading
/// coefficient and degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f);

struct Factor {
  ZPoly poly;
  int multiplicity;
};

struct Factorization {
  Integer content;  // signed; the primitive factors have positive leading coefficients
  std::vector<Factor> factors;
};

/// Complete factorization over Z. The variable itself is reported as the
/// factor {0, 1} when it divides f. Throws DomainError for zero.
Factorization factor(const ZPoly& f);

}  // namespace tka::upoly
