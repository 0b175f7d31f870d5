#pragma once

// Shared builders and random generators for the test suites.

#include <algorithm>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "cy3/cy3.hpp"

namespace cy3::testing {

inline const std::string kFixtures = CY3_FIXTURES;

inline GeneratorSet xy() { return GeneratorSet({"x", "y"}); }

/// k[x,y] as T(V)/<xy - yx>.
inline QuadraticPresentation plane() {
  return relation_from_matrix(AntiSymMatrix(Matrix{{0, 1}, {-1, 0}}), xy());
}

/// delta(x) = b x^2 + c y^2, delta(y) = a x^2 - b xy - b yx.
inline DerivationSpec two_generator_derivation(const Rational& a, const Rational& b, const Rational& c) {
  DerivationSpec d(2);
  d.set(0, 0, 0, b);
  d.set(0, 1, 1, c);
  d.set(1, 0, 0, a);
  d.set(1, 0, 1, -b);
  d.set(1, 1, 0, -b);
  return d;
}

inline Matrix smith_matrix() {
  return Matrix{{0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, -1, 0}, {0, 0, 0, -1, 0, 0},
                {0, 0, 1, 0, 0, 0},  {0, 1, 0, 0, 0, 0},  {-1, 0, 0, 0, 0, 0}};
}

inline QuadraticPresentation smith_presentation() {
  return relation_from_matrix(AntiSymMatrix(smith_matrix()), GeneratorSet::numbered(6));
}

inline DerivationSpec smith_derivation() {
  // delta(x_i) as a list of (s, t, coefficient), 1-based like the source table.
  const std::vector<std::vector<std::tuple<int, int, int>>> table = {
      {{4, 2, 1}, {2, 4, -1}, {3, 5, 1}, {5, 3, -1}},
      {{1, 4, 1}, {4, 1, -1}, {3, 6, 1}, {6, 3, -1}},
      {{5, 1, 1}, {1, 5, -1}, {6, 2, 1}, {2, 6, -1}},
      {{2, 1, 1}, {1, 2, -1}, {5, 6, 1}, {6, 5, -1}},
      {{1, 3, 1}, {3, 1, -1}, {6, 4, 1}, {4, 6, -1}},
      {{2, 3, 1}, {3, 2, -1}, {4, 5, 1}, {5, 4, -1}}};
  DerivationSpec d(6);
  for (std::size_t i = 0; i < table.size(); ++i)
    for (auto [s, t, c] : table[i]) d.set(i, s - 1, t - 1, c);
  return d;
}

inline QuadraticPresentation standard_presentation(std::size_t n) {
  return relation_from_matrix(AntiSymMatrix::standard(n), GeneratorSet::numbered(n));
}

/// Generators x, y, z for the Ore extension of the plane.
inline GeneratorSet xyz() { return xy().with_ore_variable("z"); }

inline NcPoly poly(const std::string& text, const GeneratorSet& gens) { return parse_poly(text, gens); }

// ---- random generators -------------------------------------------------

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Word random_word(Rng& rng, std::size_t alphabet, std::size_t length) {
  std::uniform_int_distribution<std::size_t> letter(0, alphabet - 1);
  std::vector<std::size_t> letters(length);
  for (auto& l : letters) l = letter(rng);
  return Word(letters);
}

/// Homogeneous polynomial of the given degree with up to `terms` terms.
inline NcPoly random_homogeneous(Rng& rng, std::size_t alphabet, std::size_t degree, std::size_t terms = 5) {
  NcPoly p(alphabet);
  for (std::size_t k = 0; k < terms; ++k) p.add_term(random_word(rng, alphabet, degree), small_rational(rng));
  return p;
}

/// Mixed-degree polynomial, degrees 0..max_degree.
inline NcPoly random_poly(Rng& rng, std::size_t alphabet, std::size_t max_degree, std::size_t terms = 5) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  NcPoly p(alphabet);
  for (std::size_t k = 0; k < terms; ++k) p.add_term(random_word(rng, alphabet, deg(rng)), small_rational(rng));
  return p;
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range = 3, double zero_rate = 0.3) {
  std::bernoulli_distribution zero(zero_rate);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!zero(rng)) m(i, j) = small_rational(rng, range);
  return m;
}

inline Matrix random_antisymmetric(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = small_rational(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline AntiSymMatrix random_invertible_antisymmetric(Rng& rng, std::size_t n) {
  while (true) {
    AntiSymMatrix m(random_antisymmetric(rng, n));
    if (m.invertible()) return m;
  }
}

inline DerivationSpec random_derivation(Rng& rng, std::size_t n, double density = 0.3) {
  std::bernoulli_distribution keep(density);
  DerivationSpec d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (keep(rng)) d.set(i, s, t, small_rational(rng));
  return d;
}

/// Random signed permutation matrix.
inline Matrix random_signed_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution flip(0.5);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = flip(rng) ? -1 : 1;
  return p;
}

/// Derivations with delta(r) = 0 for r given by M: the kernel of
/// d -> delta(r), as a linear map from the n^3 coefficients, sampled with
/// random weights. Computed by elimination, so it is exact.
inline std::vector<DerivationSpec> compatible_derivation_basis(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<DerivationSpec> singles;
  std::vector<NcPoly> images;
  NcPoly r = relation_polynomial(m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        DerivationSpec d(n);
        d.set(i, s, t, 1);
        images.push_back(extend_derivation(d, r));
        singles.push_back(std::move(d));
      }
  Matrix a = graded_matrix(std::span<const NcPoly>(images), n, 3);
  // Null space by reducing [a^t | I]: rows of I that end up against zero rows of a^t.
  const std::size_t k = singles.size();
  std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(a.rows() + k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) rows[j][i] = a(i, j);
    rows[j][a.rows() + j] = 1;
  }
  std::size_t r0 = 0;
  for (std::size_t c = 0; c < a.rows() && r0 < k; ++c) {
    std::size_t piv = r0;
    while (piv < k && rows[piv][c] == 0) ++piv;
    if (piv == k) continue;
    std::swap(rows[piv], rows[r0]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r0 || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r0][c];
      for (std::size_t x = 0; x < rows[i].size(); ++x) rows[i][x] -= f * rows[r0][x];
    }
    ++r0;
  }
  std::vector<DerivationSpec> basis;
  for (std::size_t i = r0; i < k; ++i) {
    DerivationSpec d(n);
    for (std::size_t j = 0; j < k; ++j)
      if (rows[i][a.rows() + j] != 0) d.set(j / (n * n), (j / n) % n, j % n, rows[i][a.rows() + j]);
    basis.push_back(std::move(d));
  }
  return basis;
}

inline DerivationSpec random_compatible_derivation(Rng& rng, const std::vector<DerivationSpec>& basis) {
  const std::size_t n = basis.empty() ? 0 : basis.front().size();
  DerivationSpec d(n);
  std::bernoulli_distribution use(0.4);
  for (const auto& b : basis) {
    if (!use(rng)) continue;
    Rational c = small_rational(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
          if (b.coeff(i, s, t) != 0) d.add(i, s, t, c * b.coeff(i, s, t));
  }
  return d;
}

}  // namespace cy3::testing
