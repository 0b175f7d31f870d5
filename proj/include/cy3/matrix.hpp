#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "ncpoly.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace cy3 {

/// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
      if (row.size() != cols_) throw AlgebraError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw AlgebraError("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AlgebraError("matrix size mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw AlgebraError("matrix-vector dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RankSolveResult {
  std::size_t rank = 0;
  /// Some x with A x = b, when b was given and the system is consistent.
  std::optional<std::vector<Rational>> solution;
  /// Some y with y^T A = 0 and y^T b != 0, when the system is inconsistent.
  std::optional<std::vector<Rational>> inconsistency;
};

/// Exact rank, and optionally a solution or an inconsistency certificate for
/// A x = b. Rows are cleared of denominators and reduced by fraction-free
/// (Bareiss) elimination; an identity block tracks the row combinations so
/// a zero row with nonzero right-hand side yields the certificate directly.
inline RankSolveResult rank_and_solve(const Matrix& a,
                                      const std::optional<std::vector<Rational>>& b = std::nullopt) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b && b->size() != m) throw AlgebraError("right-hand side has wrong length");
  const bool track = b.has_value();
  const std::size_t width = n + (track ? 1 + m : 0);

  std::vector<std::vector<Integer>> rows(m, std::vector<Integer>(width));
  for (std::size_t i = 0; i < m; ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
    if (track) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), (*b)[i].get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j).get_num() * (scale / a(i, j).get_den());
    if (track) {
      rows[i][n] = (*b)[i].get_num() * (scale / (*b)[i].get_den());
      rows[i][n + 1 + i] = scale;
    }
  }

  Integer prev = 1;
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        Integer t = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    pivots.push_back(c);
    ++r;
  }

  RankSolveResult result;
  result.rank = r;
  if (!track) return result;

  for (std::size_t i = r; i < m; ++i) {
    if (rows[i][n] != 0) {
      std::vector<Rational> y(m);
      for (std::size_t k = 0; k < m; ++k) y[k] = Rational(rows[i][n + 1 + k]);
      result.inconsistency = std::move(y);
      return result;
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t k = r; k-- > 0;) {
    std::size_t pc = pivots[k];
    Rational acc(rows[k][n]);
    for (std::size_t j = pc + 1; j < n; ++j)
      if (rows[k][j] != 0) acc -= Rational(rows[k][j]) * x[j];
    x[pc] = acc / Rational(rows[k][pc]);
  }
  result.solution = std::move(x);
  return result;
}

inline std::size_t rank(const Matrix& a) { return rank_and_solve(a).rank; }

/// Inverse of a square matrix; throws on singular input.
inline Matrix inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw AlgebraError("inverse of a non-square matrix");
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    auto res = rank_and_solve(a, e);
    if (res.rank != n || !res.solution) throw AlgebraError("matrix is singular");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*res.solution)[i];
  }
  return inv;
}

/// Algebra endomorphism of T(V) determined by x_i -> sum_j s(i, j) x_j
/// (row i of `s` is the image of generator i), applied to p.
inline NcPoly linear_substitution(const NcPoly& p, const Matrix& s) {
  if (s.rows() != p.alphabet() || s.cols() != p.alphabet())
    throw AlgebraError("substitution matrix has wrong size");
  NcPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    NcPoly acc = NcPoly::constant(p.alphabet(), c);
    for (std::size_t k = 0; k < w.size(); ++k) {
      NcPoly img(p.alphabet());
      for (std::size_t j = 0; j < s.cols(); ++j) img.add_term(Word::letter(j), s(w[k], j));
      acc = acc * img;
    }
    out += acc;
  }
  return out;
}

/// Matrix of a linear map between graded pieces: column j holds the
/// coordinates of images[j] in `out_basis`. Every image must be homogeneous
/// of degree `degree` (or zero) and supported on the basis.
inline Matrix graded_matrix(std::span<const NcPoly> images, std::span<const Word> out_basis,
                            std::size_t degree) {
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < out_basis.size(); ++i) {
    if (out_basis[i].size() != degree)
      throw AlgebraError("basis word has degree " + std::to_string(out_basis[i].size()) +
                         ", expected " + std::to_string(degree));
    index.emplace(out_basis[i], i);
  }
  Matrix m(out_basis.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (const auto& [w, c] : images[j].terms()) {
      if (w.size() != degree)
        throw AlgebraError("image " + std::to_string(j) + " is not homogeneous of degree " +
                           std::to_string(degree));
      auto it = index.find(w);
      if (it == index.end()) throw AlgebraError("image word outside the target basis");
      m(it->second, j) = c;
    }
  }
  return m;
}

/// Same, with the full word basis of T(V)_degree as target.
inline Matrix graded_matrix(std::span<const NcPoly> images, std::size_t alphabet,
                            std::size_t degree) {
  auto basis = all_words(alphabet, degree);
  return graded_matrix(images, std::span<const Word>(basis), degree);
}

}  // namespace cy3
