#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "derivation_spec.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"

namespace cy3 {

/// n x n rational matrix with M^t = -M.
class AntiSymMatrix {
public:
  AntiSymMatrix() = default;
  explicit AntiSymMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw AlgebraError("matrix is not square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (m_(i, j) != -m_(j, i))
          throw AlgebraError("matrix is not anti-symmetric: entry (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + ") != -entry (" +
                             std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
    rank_ = cy3::rank(m_);
  }

  /// Standard layout: +1 at (i, n+1-i) in the upper half of the
  /// anti-diagonal, -1 in the lower half.
  static AntiSymMatrix standard(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw AlgebraError("standard form needs even n >= 2");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = i < n / 2 ? 1 : -1;
    return AntiSymMatrix(std::move(m));
  }

  std::size_t size() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::size_t rank() const noexcept { return rank_; }
  bool invertible() const noexcept { return rank_ == size(); }

  friend bool operator==(const AntiSymMatrix& a, const AntiSymMatrix& b) { return a.m_ == b.m_; }

private:
  Matrix m_;
  std::size_t rank_ = 0;
};

/// P^t M P.
inline AntiSymMatrix congruence(const AntiSymMatrix& m, const Matrix& p) {
  if (p.rows() != m.size()) throw AlgebraError("congruence size mismatch");
  return AntiSymMatrix(p.transpose() * m.matrix() * p);
}

/// A = T(V)/<r> with r = sum_{ij} m_ij x_i x_j.
struct QuadraticPresentation {
  GeneratorSet gens;
  AntiSymMatrix matrix;
  NcPoly relation;
};

inline NcPoly relation_polynomial(const Matrix& m, std::size_t alphabet) {
  NcPoly r(alphabet);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.add_term(Word{static_cast<Letter>(i), static_cast<Letter>(j)}, m(i, j));
  return r;
}

enum class RequireInvertible { yes, no };

inline QuadraticPresentation relation_from_matrix(const AntiSymMatrix& m, const GeneratorSet& gens,
                                                  RequireInvertible demand = RequireInvertible::yes) {
  if (gens.size() != m.size())
    throw AlgebraError("matrix is " + std::to_string(m.size()) + "x" + std::to_string(m.size()) +
                       " but there are " + std::to_string(gens.size()) + " generators");
  if (gens.z_index()) throw AlgebraError("base alphabet must not contain the Ore variable");
  if (demand == RequireInvertible::yes && !m.invertible())
    throw AlgebraError("matrix is not invertible (rank " + std::to_string(m.rank()) + " of " +
                       std::to_string(m.size()) + ")");
  return {gens, m, relation_polynomial(m.matrix(), gens.size())};
}

/// n x n matrix of coefficients of a degree-2 tensor.
inline Matrix coefficient_matrix(const NcPoly& r) {
  if (!r.is_zero() && r.homogeneous_degree() != 2)
    throw AlgebraError("tensor rank needs a homogeneous degree-2 element");
  const std::size_t n = r.alphabet();
  Matrix c(n, n);
  for (const auto& [w, x] : r.terms()) c(w[0], w[1]) = x;
  return c;
}

/// Minimal number of simple tensors u (x) v summing to r.
inline std::size_t rank_of_tensor(const NcPoly& r) { return rank(coefficient_matrix(r)); }

inline bool is_standard(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || n % 2 != 0 || m.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational want = 0;
      if (j == n - 1 - i) want = i < n / 2 ? 1 : -1;
      if (m(i, j) != want) return false;
    }
  return true;
}
inline bool is_standard(const AntiSymMatrix& m) { return is_standard(m.matrix()); }

/// Invertible P with P^t M P standard. Builds a symplectic basis
/// e_1, f_1, ..., e_m, f_m for the form (u, v) -> u^t M v by skew
/// Gram-Schmidt (pivot: smallest index with nonzero pairing), then places
/// e_i in column i and f_i in column n+1-i.
inline Matrix reduce_to_standard(const AntiSymMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0 || !m.invertible()) throw AlgebraError("reduce_to_standard: matrix is singular");
  const Matrix& form = m.matrix();
  auto pair = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] != 0) s += u[i] * form(i, j) * v[j];
    }
    return s;
  };

  std::vector<std::vector<Rational>> pool;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    pool.push_back(std::move(e));
  }
  Matrix p(n, n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    std::vector<Rational> e = pool.front();
    std::size_t partner = 0;
    Rational w = 0;
    for (std::size_t j = 1; j < pool.size(); ++j) {
      w = pair(e, pool[j]);
      if (w != 0) {
        partner = j;
        break;
      }
    }
    if (partner == 0) throw AlgebraError("reduce_to_standard: degenerate form");
    std::vector<Rational> f = pool[partner];
    for (auto& x : f) x /= w;
    std::vector<std::vector<Rational>> rest;
    for (std::size_t j = 1; j < pool.size(); ++j) {
      if (j == partner) continue;
      auto v = pool[j];
      Rational vf = pair(v, f), ve = pair(v, e);
      for (std::size_t i = 0; i < n; ++i) v[i] += -vf * e[i] + ve * f[i];
      rest.push_back(std::move(v));
    }
    pool = std::move(rest);
    for (std::size_t i = 0; i < n; ++i) {
      p(i, k) = e[i];
      p(i, n - 1 - k) = f[i];
    }
  }
  if (!is_standard(p.transpose() * form * p))
    throw std::logic_error("reduce_to_standard: postcondition violated");
  return p;
}

/// Signed permutation that keeps the standard form standard and sends
/// generator j (0-based) to the last position.
inline Matrix standard_relabeling(std::size_t n, std::size_t j) {
  if (n == 0 || n % 2 != 0 || j >= n) throw AlgebraError("standard_relabeling: bad arguments");
  // x = P y; columns describe the new generators in the old basis.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::size_t pair_lo = std::min(j, n - 1 - j);
  std::swap(perm[0], perm[pair_lo]);
  std::swap(perm[n - 1], perm[n - 1 - pair_lo]);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = 1;
  // After the pair swap j sits at 0 or n-1; if at 0, rotate inside the pair:
  // old x_1 = y_n, old x_n = -y_1 keeps x_1 x_n - x_n x_1 invariant.
  std::size_t where = perm[0] == j ? 0 : n - 1;
  if (where == 0) {
    Matrix rot = Matrix::identity(n);
    rot(0, 0) = 0;
    rot(n - 1, n - 1) = 0;
    rot(0, n - 1) = 1;
    rot(n - 1, 0) = -1;
    p = p * rot;
  }
  return p;
}

/// Outcome of the hypotheses of the coherence statement.
struct CoherencePrecondition {
  bool standard = false;
  std::optional<std::size_t> witness;  ///< 0-based j with k^i_{jj} = 0 for all i
  std::string failure;                 ///< empty when both conditions hold
  bool holds() const { return failure.empty(); }
};

inline CoherencePrecondition coherence_precondition(const AntiSymMatrix& m,
                                                    const DerivationSpec& d) {
  if (d.size() != m.size()) throw AlgebraError("coherence_precondition: size mismatch");
  CoherencePrecondition out;
  out.standard = is_standard(m);
  for (std::size_t j = m.size(); j-- > 0;) {
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i) ok = d.coeff(i, j, j) == 0;
    if (ok) {
      out.witness = j;
      break;
    }
  }
  if (!out.standard) out.failure = "matrix is not standard";
  if (!out.witness) {
    if (!out.failure.empty()) out.failure += "; ";
    out.failure += "no j with k^i_jj = 0 for all i";
  }
  return out;
}

}  // namespace cy3
