#pragma once

// Exact arithmetic in Z[t^{+-1}, x_1^{+-1}, ..., x_{2g}^{+-1}].
//
// Variable 0 is the meridian variable t; variable l (1 <= l <= 2g) is x_l.
// Terms are kept sorted ascending in lexicographic order of the exponent
// vector (t exponent first), so the last term is the leading one.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tka {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::int64_t;

/// +-1 times a monomial: exactly the units of the Laurent ring.
class UnitMonomial {
 public:
  UnitMonomial() = default;
  UnitMonomial(int sign, std::vector<Exponent> exps);

  static UnitMonomial one(std::size_t nvars);

  int sign() const noexcept { return sign_; }
  const std::vector<Exponent>& exps() const noexcept { return exps_; }
  std::size_t nvars() const noexcept { return exps_.size(); }
  bool is_one() const noexcept;

  UnitMonomial operator*(const UnitMonomial& other) const;
  UnitMonomial inverse() const;

  friend bool operator==(const UnitMonomial&, const UnitMonomial&) = default;

 private:
  int sign_ = 1;
  std::vector<Exponent> exps_;
};

class LaurentPoly {
 public:
  /// The zero polynomial of the ring with 2*genus + 1 variables.
  explicit LaurentPoly(int genus = 0);

  static LaurentPoly constant(int genus, const Integer& c);
  static LaurentPoly monomial(int genus, const Integer& c, std::span<const Exponent> exps);
  static LaurentPoly from_unit(int genus, const UnitMonomial& u);
  /// Variable by index: 0 is t, l >= 1 is x_l.
  static LaurentPoly variable(int genus, std::size_t var);
  static LaurentPoly t(int genus) { return variable(genus, 0); }
  static LaurentPoly x(int genus, int l) { return variable(genus, static_cast<std::size_t>(l)); }

  /// Builds a canonical polynomial from unordered terms. Repeated exponents
  /// are merged and zero coefficients dropped.
  static LaurentPoly from_terms(int genus, std::vector<Exponent> flat_exps,
                                std::vector<Integer> coeffs);

  int genus() const noexcept { return genus_; }
  std::size_t nvars() const noexcept { return static_cast<std::size_t>(2 * genus_ + 1); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// True for zero and for nonzero constants.
  bool is_constant() const noexcept;
  bool is_one() const noexcept;

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * nvars(), nvars()};
  }
  const Integer& coeff(std::size_t term) const { return coeffs_[term]; }
  Exponent exponent(std::size_t term, std::size_t var) const { return exps_[term * nvars() + var]; }

  const Integer& leading_coeff() const;
  std::span<const Exponent> leading_exponents() const;

  /// Coefficient of the term with the given exponent vector (0 if absent).
  Integer coeff_of(std::span<const Exponent> exps) const;

  bool involves(std::size_t var) const;
  Exponent min_degree(std::size_t var) const;
  Exponent max_degree(std::size_t var) const;
  /// Largest exponent sum over the terms (for nonnegative supports).
  Exponent total_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Integer& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

  /// Multiplication by a unit is a pure exponent shift plus sign.
  LaurentPoly times(const UnitMonomial& u) const;
  /// Exact division of every coefficient by c; throws DomainError if inexact.
  LaurentPoly divided_by(const Integer& c) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Copy of this polynomial viewed in a ring with at least as many variables.
  LaurentPoly with_genus(int genus) const;

 private:
  void check_context(const LaurentPoly& other) const;

  int genus_;
  std::vector<Exponent> exps_;  // size() * nvars(), row-major
  std::vector<Integer> coeffs_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned k);

/// Ring involution inverting every variable.
LaurentPoly conj(const LaurentPoly& p);

/// Substitutes rationals for t and x_1..x_{2g}. Throws DomainError when a
/// zero value is substituted into a variable appearing with a negative
/// exponent, or when x_vals has the wrong length.
Rational evaluate(const LaurentPoly& p, const Rational& t_val, std::span<const Rational> x_vals);

/// Sets every x_l to 1, keeping the ring context.
LaurentPoly specialize_x_to_one(const LaurentPoly& p);

/// p = u * p0 with p0 having minimal exponent 0 in every variable and a
/// positive leading coefficient. Throws DomainError for p = 0.
std::pair<LaurentPoly, UnitMonomial> normalize_unit(const LaurentPoly& p);

/// Positive integer content and primitive part with content * part == p.
/// Throws DomainError for p = 0.
std::pair<Integer, LaurentPoly> content_and_primitive(const LaurentPoly& p);

/// a / b in the Laurent ring if b divides a, nullopt otherwise.
/// Throws DomainError for b = 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor, unit-normalized. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Formal partial derivative with respect to variable var.
LaurentPoly derivative(const LaurentPoly& p, std::size_t var);

/// Parses the polynomial grammar. Without an explicit genus the smallest
/// genus that accommodates every x index is used.
LaurentPoly parse_laurent(std::string_view text, std::optional<int> genus = std::nullopt);

/// Smallest genus that can hold every x index appearing in text.
int genus_needed(std::string_view text);

std::string to_string(const LaurentPoly& p);
std::string to_string(const UnitMonomial& u);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Total order used for deterministic output of factor lists.
bool canonical_less(const LaurentPoly& a, const LaurentPoly& b);

/// Variable name used by the printer: "t", "x1", "x2", ...
std::string variable_name(std::size_t var);

}  // namespace tka
