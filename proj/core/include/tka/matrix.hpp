#pragma once

// Dense matrices over the Laurent ring, with the exact linear algebra used
// by the elementary-ideal and torsion code.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tka/laurent.hpp"

namespace tka {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int genus, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(int genus, std::size_t n);
  static PolyMatrix from_rows(int genus, const std::vector<std::vector<LaurentPoly>>& rows);

  int genus() const noexcept { return genus_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  LaurentPoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<LaurentPoly>> to_rows() const;
  PolyMatrix transpose() const;
  PolyMatrix select_rows(std::span<const std::size_t> idx) const;
  PolyMatrix select_cols(std::span<const std::size_t> idx) const;
  bool is_zero() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int genus_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Presentation matrix of an Alexander module.
using AlexMatrix = PolyMatrix;

/// Determinant by Laplace expansion along rows, memoized on column subsets.
/// Requires a square matrix; the 0x0 determinant is 1.
LaurentPoly determinant(const PolyMatrix& m);

/// Rank over the fraction field, by fraction-free elimination.
std::size_t rank(const PolyMatrix& m);

/// Substitutes x_l := 1 in every entry.
PolyMatrix specialize_x_to_one(const PolyMatrix& m);

/// Rank over Q of the integer matrix obtained at t = t_val, x = x_vals.
std::size_t rank_at(const PolyMatrix& m, const Rational& t_val, std::span<const Rational> x_vals);

/// Applies conj to every entry.
PolyMatrix conj(const PolyMatrix& m);

std::string to_string(const PolyMatrix& m);

}  // namespace tka
