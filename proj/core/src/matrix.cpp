#include "tka/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "tka/error.hpp"

namespace tka {

PolyMatrix::PolyMatrix(int genus, std::size_t rows, std::size_t cols)
    : genus_(genus), rows_(rows), cols_(cols), data_(rows * cols, LaurentPoly(genus)) {}

PolyMatrix PolyMatrix::identity(int genus, std::size_t n) {
  PolyMatrix m(genus, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(genus, Integer(1));
  return m;
}

PolyMatrix PolyMatrix::from_rows(int genus, const std::vector<std::vector<LaurentPoly>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  PolyMatrix m(genus, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j].genus() != genus) throw ContextMismatch("matrix entry from a different ring");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<std::vector<LaurentPoly>> PolyMatrix::to_rows() const {
  std::vector<std::vector<LaurentPoly>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(genus_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> idx) const {
  PolyMatrix m(genus_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
  }
  return m;
}

PolyMatrix PolyMatrix::select_cols(std::span<const std::size_t> idx) const {
  PolyMatrix m(genus_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, j) = at(i, idx[j]);
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.genus_ != b.genus_) throw ContextMismatch("matrix product across rings");
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  PolyMatrix c(a.genus_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.genus_ != b.genus_) throw ContextMismatch("matrix sum across rings");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
  PolyMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.genus_ != b.genus_) throw ContextMismatch("matrix difference across rings");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference shape mismatch");
  PolyMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

namespace {

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalError("fraction-free elimination: inexact division");
  return *std::move(q);
}

// Bareiss elimination in place; returns the rank. When the matrix is square
// and of full rank, the last pivot is the determinant up to sign, and `sign`
// tracks row swaps.
std::size_t bareiss(std::vector<std::vector<LaurentPoly>>& m, std::size_t cols, int& sign) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const int genus = m[0].empty() ? 0 : m[0][0].genus();
  LaurentPoly prev = LaurentPoly::constant(genus, Integer(1));
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        LaurentPoly v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = v.is_zero() ? v : exact(v, prev);
      }
      m[i][c] = LaurentPoly(genus);
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

LaurentPoly laplace(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  const int genus = m.genus();
  // f[S] = determinant of rows n-|S|..n-1 restricted to the column set S.
  std::unordered_map<std::uint64_t, LaurentPoly> memo;
  memo.emplace(0, LaurentPoly::constant(genus, Integer(1)));
  std::vector<std::uint64_t> layer{0};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t row = n - 1 - k;
    std::unordered_map<std::uint64_t, LaurentPoly> next;
    for (std::uint64_t s : layer) {
      const LaurentPoly& sub = memo.at(s);
      if (sub.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        if (s & bit) continue;
        const LaurentPoly& a = m.at(row, j);
        if (a.is_zero()) continue;
        // Sign: position of column j within S u {j}.
        const int pos = std::popcount(s & (bit - 1));
        LaurentPoly term = a * sub;
        auto [it, inserted] = next.try_emplace(s | bit, genus);
        if (pos % 2 == 0) {
          it->second += term;
        } else {
          it->second -= term;
        }
      }
    }
    memo = std::move(next);
    layer.clear();
    layer.reserve(memo.size());
    for (const auto& [s, v] : memo) layer.push_back(s);
    std::sort(layer.begin(), layer.end());
  }
  if (n == 0) return LaurentPoly::constant(genus, Integer(1));
  auto it = memo.find((n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  return it == memo.end() ? LaurentPoly(genus) : it->second;
}

}  // namespace

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.genus(), Integer(1));
  if (n <= 16) return laplace(m);
  auto rows = m.to_rows();
  int sign = 1;
  if (bareiss(rows, n, sign) < n) return LaurentPoly(m.genus());
  LaurentPoly d = rows[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

std::size_t rank(const PolyMatrix& m) {
  auto rows = m.to_rows();
  int sign = 1;
  return bareiss(rows, m.cols(), sign);
}

PolyMatrix specialize_x_to_one(const PolyMatrix& m) {
  PolyMatrix r(m.genus(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = specialize_x_to_one(m.at(i, j));
  }
  return r;
}

std::size_t rank_at(const PolyMatrix& m, const Rational& t_val, std::span<const Rational> x_vals) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = evaluate(m.at(i, j), t_val, x_vals);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

PolyMatrix conj(const PolyMatrix& m) {
  PolyMatrix r(m.genus(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = conj(m.at(i, j));
  }
  return r;
}

std::string to_string(const PolyMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += " ; ";
      out += to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace tka
