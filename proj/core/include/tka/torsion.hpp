#pragma once

// Torsion of based chain complexes over the fraction field of the Laurent
// ring, and the Alexander function of a two-term complex.
//
// Chains are row vectors: the boundary d_k : C_k -> C_{k-1} is a matrix with
// rank C_k rows and rank C_{k-1} columns, and d_{k+1} * d_k = 0.
//
// Sign convention: tau = prod_k det(D_k)^((-1)^(k+1)), so a single boundary
// [t - 1] from C_1 to C_0 has torsion t - 1. Torsion is only defined up to a
// unit and is reported unit-normalized.

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tka/matrix.hpp"

namespace tka {

struct BasedComplex {
  int genus = 1;
  std::vector<std::size_t> ranks;       // ranks[k] = rank C_k, k = 0..m
  std::vector<PolyMatrix> boundaries;   // boundaries[k-1] = d_k, k = 1..m

  std::size_t top() const noexcept { return ranks.empty() ? 0 : ranks.size() - 1; }
  const PolyMatrix& d(std::size_t k) const { return boundaries.at(k - 1); }
  /// Throws ValidationError on shape mismatch or d_{k+1} d_k != 0.
  void validate() const;
};

/// num / den in lowest terms, both unit-normalized.
struct TorsionValue {
  LaurentPoly num;
  LaurentPoly den;

  static TorsionValue make(const LaurentPoly& num, const LaurentPoly& den);
  static TorsionValue one(int genus);

  TorsionValue inverse() const { return make(den, num); }
  /// Equality up to a unit (the stored form is canonical).
  bool associate(const TorsionValue& o) const { return num == o.num && den == o.den; }
  bool is_unit() const { return num.is_one() && den.is_one(); }

  friend TorsionValue operator*(const TorsionValue& a, const TorsionValue& b);
  friend bool operator==(const TorsionValue&, const TorsionValue&) = default;
};

std::string to_string(const TorsionValue& v);

/// Throws NotAcyclic naming the first degree where rank counting fails.
TorsionValue torsion(const BasedComplex& c);

/// Same, but the basis rows of each C_k are scanned in the given orders when
/// choosing the subsets (row_orders[k] is a permutation of 0..rank C_k - 1).
/// Any order gives an associate value.
TorsionValue torsion(const BasedComplex& c, const std::vector<std::vector<std::size_t>>& row_orders);

/// For the two-term complex with boundary m: Delta_0 of the cokernel when m
/// has full column rank over the fraction field, zero otherwise.
LaurentPoly alexander_function(const AlexMatrix& m);

/// Maps between three complexes of the same length: incl[k] : sub_k -> total_k
/// and proj[k] : total_k -> quotient_k, as row-vector matrices.
struct ShortExactSequence {
  BasedComplex sub;
  BasedComplex total;
  BasedComplex quotient;
  std::vector<PolyMatrix> incl;
  std::vector<PolyMatrix> proj;
};

/// Checks that the maps are chain maps forming a degreewise short exact
/// sequence with compatible bases (throws NotExact otherwise), then returns
/// whether tau(total) equals tau(sub) tau(quotient) up to a unit.
bool check_multiplicativity(const ShortExactSequence& s);

/// conj of numerator and denominator, inverted when n is even.
TorsionValue dual_conj(const TorsionValue& v, int n);

/// Text form:
///   tkacplx 1
///   genus <g>            (optional; inferred from the entries if absent)
///   ranks <r_m> ... <r_0>
///   boundary <k>         then rank C_k lines, entries separated by ';'
/// A row without entries is written "-".
BasedComplex parse_complex(std::string_view text);
std::string to_string(const BasedComplex& c);

// ---------------------------------------------------------- generators

/// Random acyclic complex of length 1 or 2 with small entries in t and the
/// first two surface variables.
BasedComplex random_acyclic_complex(std::mt19937_64& rng, int genus, std::size_t length);

/// Random short exact sequence with the given ends whose total complex is the
/// twisted sum [[d', 0], [h d' - d'' h, d'']] conjugated
/// by random unipotent changes of basis.
ShortExactSequence random_extension(std::mt19937_64& rng, const BasedComplex& sub, const BasedComplex& quotient);

/// The sequence sub -> sub + quotient -> quotient with the standard bases.
ShortExactSequence split_sequence(const BasedComplex& sub, const BasedComplex& quotient);

/// Adds one basis vector in degrees k and k-1 with boundary 1 between them.
BasedComplex acyclic_extension(const BasedComplex& c, std::size_t k);

BasedComplex direct_sum(const BasedComplex& a, const BasedComplex& b);

}  // namespace tka
