#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "derivation_spec.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "quadratic.hpp"

namespace cy3 {

/// Element of A^! = k + V^* + k r^*, stored by degree.
struct KoszulDualElement {
  Rational c0;
  std::vector<Rational> v;  ///< coordinates in x_1^*, ..., x_n^*
  Rational c2;              ///< coefficient of r^*

  static KoszulDualElement zero(std::size_t n) { return {0, std::vector<Rational>(n), 0}; }
  static KoszulDualElement unit(std::size_t n) { return {1, std::vector<Rational>(n), 0}; }
  static KoszulDualElement dual_generator(std::size_t n, std::size_t i) {
    auto e = zero(n);
    e.v.at(i) = 1;
    return e;
  }
  static KoszulDualElement top(std::size_t n) {
    auto e = zero(n);
    e.c2 = 1;
    return e;
  }

  std::size_t size() const { return v.size(); }
  bool is_zero() const {
    if (c0 != 0 || c2 != 0) return false;
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  bool has_degree1() const {
    for (const auto& x : v)
      if (x != 0) return true;
    return false;
  }
  /// Degree when exactly one graded part is nonzero.
  std::optional<std::size_t> degree() const {
    int parts = (c0 != 0) + has_degree1() + (c2 != 0);
    if (parts != 1) return std::nullopt;
    return c0 != 0 ? 0 : (c2 != 0 ? 2 : 1);
  }

  KoszulDualElement& operator+=(const KoszulDualElement& o) {
    c0 += o.c0;
    c2 += o.c2;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  KoszulDualElement scaled(const Rational& s) const {
    auto e = *this;
    e.c0 *= s;
    e.c2 *= s;
    for (auto& x : e.v) x *= s;
    return e;
  }

  friend bool operator==(const KoszulDualElement&, const KoszulDualElement&) = default;
};

/// a^t M b for coordinate vectors.
inline Rational bilinear(const std::vector<Rational>& a, const Matrix& m,
                         const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) s += a[i] * m(i, j) * b[j];
  }
  return s;
}

/// Product in A^!: degree-1 times degree-1 is (a^t M b) r^*; everything past
/// degree 2 vanishes. `form` is normally anti-symmetric; it is taken as a
/// plain matrix so negative controls can break that.
inline KoszulDualElement koszul_dual_mul(const KoszulDualElement& a, const KoszulDualElement& b,
                                         const Matrix& form) {
  const std::size_t n = a.size();
  if (b.size() != n || form.rows() != n) throw AlgebraError("A^! size mismatch");
  KoszulDualElement out = KoszulDualElement::zero(n);
  out.c0 = a.c0 * b.c0;
  for (std::size_t i = 0; i < n; ++i) out.v[i] = a.c0 * b.v[i] + a.v[i] * b.c0;
  out.c2 = a.c0 * b.c2 + a.c2 * b.c0 + bilinear(a.v, form, b.v);
  return out;
}
inline KoszulDualElement koszul_dual_mul(const KoszulDualElement& a, const KoszulDualElement& b,
                                         const AntiSymMatrix& m) {
  return koszul_dual_mul(a, b, m.matrix());
}

/// Element (first, second) of E(B) = A^! + A^!(-1): the degree-d part is
/// first_d + second_{d-1}.
struct YonedaElement {
  KoszulDualElement first;
  KoszulDualElement second;

  static YonedaElement zero(std::size_t n) {
    return {KoszulDualElement::zero(n), KoszulDualElement::zero(n)};
  }
  std::size_t size() const { return first.size(); }
  bool is_zero() const { return first.is_zero() && second.is_zero(); }

  /// Degree in E(B) when homogeneous.
  std::optional<std::size_t> degree() const {
    std::optional<std::size_t> d;
    auto note = [&](bool present, std::size_t deg) {
      if (!present) return true;
      if (d && *d != deg) return false;
      d = deg;
      return true;
    };
    bool ok = note(first.c0 != 0, 0) && note(first.has_degree1(), 1) &&
              note(first.c2 != 0, 2) && note(second.c0 != 0, 1) &&
              note(second.has_degree1(), 2) && note(second.c2 != 0, 3);
    if (!ok) return std::nullopt;
    return d;
  }

  YonedaElement& operator+=(const YonedaElement& o) {
    first += o.first;
    second += o.second;
    return *this;
  }
  YonedaElement scaled(const Rational& s) const { return {first.scaled(s), second.scaled(s)}; }

  friend bool operator==(const YonedaElement&, const YonedaElement&) = default;
};

/// (beta (x) alpha) o delta: the functional x_i -> sum_{s,t} k^i_{st} beta_s alpha_t.
inline std::vector<Rational> delta_pairing(const std::vector<Rational>& beta,
                                           const std::vector<Rational>& alpha,
                                           const DerivationSpec& d) {
  const std::size_t n = d.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s) {
      if (beta[s] == 0) continue;
      for (std::size_t t = 0; t < n; ++t)
        if (alpha[t] != 0) out[i] += d.coeff(i, s, t) * beta[s] * alpha[t];
    }
  return out;
}

/// Yoneda product on E(B):
///   (beta, k') * (alpha, k) = (beta alpha, k' alpha - k beta - (beta (x) alpha) o delta)
///   (r^*c, beta) * (alpha, k) = (k c + beta alpha) in E^3
///   (alpha, k) * (r^*c, beta) = (k c - alpha beta) in E^3
/// with the unit acting trivially and everything past degree 3 zero. E^3
/// is identified with k through the basis (0, r^*).
inline YonedaElement yoneda_mul(const YonedaElement& u, const YonedaElement& v, const Matrix& form,
                                const DerivationSpec& d) {
  const std::size_t n = u.size();
  if (v.size() != n || d.size() != n || form.rows() != n)
    throw AlgebraError("E(B) size mismatch");
  const auto& p = u.first;
  const auto& q = u.second;
  const auto& pp = v.first;
  const auto& qq = v.second;
  YonedaElement out = YonedaElement::zero(n);

  // Unit parts.
  out += v.scaled(p.c0);
  out += u.scaled(pp.c0);
  out.first.c0 -= p.c0 * pp.c0;

  // E^1 x E^1 -> E^2.
  out.first.c2 += bilinear(p.v, form, pp.v);
  auto corr = delta_pairing(p.v, pp.v, d);
  for (std::size_t i = 0; i < n; ++i)
    out.second.v[i] += q.c0 * pp.v[i] - qq.c0 * p.v[i] - corr[i];

  // E^2 x E^1 -> E^3.
  out.second.c2 += p.c2 * qq.c0 + bilinear(q.v, form, pp.v);
  // E^1 x E^2 -> E^3.
  out.second.c2 += q.c0 * pp.c2 - bilinear(p.v, form, qq.v);
  return out;
}
inline YonedaElement yoneda_mul(const YonedaElement& u, const YonedaElement& v,
                                const AntiSymMatrix& m, const DerivationSpec& d) {
  return yoneda_mul(u, v, m.matrix(), d);
}

/// Graded basis of E(B): E^0 = {(1,0)}, E^1 = {(x_i^*,0)} + {(0,1)},
/// E^2 = {(r^*,0)} + {(0,x_i^*)}, E^3 = {(0,r^*)}.
inline std::array<std::vector<YonedaElement>, 4> yoneda_basis(std::size_t n) {
  using K = KoszulDualElement;
  std::array<std::vector<YonedaElement>, 4> b;
  b[0].push_back({K::unit(n), K::zero(n)});
  for (std::size_t i = 0; i < n; ++i) b[1].push_back({K::dual_generator(n, i), K::zero(n)});
  b[1].push_back({K::zero(n), K::unit(n)});
  b[2].push_back({K::top(n), K::zero(n)});
  for (std::size_t i = 0; i < n; ++i) b[2].push_back({K::zero(n), K::dual_generator(n, i)});
  b[3].push_back({K::zero(n), K::top(n)});
  return b;
}

inline std::array<std::size_t, 4> yoneda_dims(std::size_t n) {
  auto b = yoneda_basis(n);
  return {b[0].size(), b[1].size(), b[2].size(), b[3].size()};
}

namespace detail {
inline void require_delta_r_zero(const Matrix& form, const DerivationSpec& d) {
  if (form.rows() != d.size()) throw AlgebraError("matrix and derivation sizes differ");
  if (!extend_derivation(d, relation_polynomial(form, d.size())).is_zero())
    throw AlgebraError("delta(r) != 0");
}
}  // namespace detail

struct GradedSymmetryResult {
  bool symmetric = true;
  /// First failing pair (index in E^1 basis, index in E^2 basis).
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// Phi * Theta == Theta * Phi for all basis Phi of E^1 and Theta of E^2.
inline GradedSymmetryResult graded_symmetry(const Matrix& form, const DerivationSpec& d) {
  detail::require_delta_r_zero(form, d);
  auto b = yoneda_basis(d.size());
  GradedSymmetryResult res;
  for (std::size_t i = 0; i < b[1].size(); ++i)
    for (std::size_t j = 0; j < b[2].size(); ++j)
      if (yoneda_mul(b[1][i], b[2][j], form, d) != yoneda_mul(b[2][j], b[1][i], form, d)) {
        res.symmetric = false;
        res.counterexample = {i, j};
        return res;
      }
  return res;
}
inline bool graded_symmetry_check(const Matrix& form, const DerivationSpec& d) {
  return graded_symmetry(form, d).symmetric;
}
inline bool graded_symmetry_check(const AntiSymMatrix& m, const DerivationSpec& d) {
  return graded_symmetry_check(m.matrix(), d);
}

/// Matrix of the pairing E^1 x E^2 -> E^3 = k (rows: E^1 basis, columns:
/// E^2 basis, entry: coefficient of (0, r^*)).
inline Matrix e3_pairing(const Matrix& form, const DerivationSpec& d) {
  auto b = yoneda_basis(d.size());
  Matrix p(b[1].size(), b[2].size());
  for (std::size_t i = 0; i < b[1].size(); ++i)
    for (std::size_t j = 0; j < b[2].size(); ++j)
      p(i, j) = yoneda_mul(b[1][i], b[2][j], form, d).second.c2;
  return p;
}

/// Product of the trivial extension A^! + I with I = A^!(-1) whose left
/// action is twisted by eps (eps = -1 on A^!_1):
/// (p, q)(p', q') = (p p', eps(p) q' + q p').
inline YonedaElement trivial_extension_mul(const YonedaElement& u, const YonedaElement& v,
                                           const Matrix& form) {
  KoszulDualElement eps = u.first;
  for (auto& x : eps.v) x = -x;
  YonedaElement out{koszul_dual_mul(u.first, v.first, form),
                    koszul_dual_mul(eps, v.second, form)};
  out.second += koszul_dual_mul(u.second, v.first, form);
  return out;
}

struct TrivialExtensionResult {
  bool coincides = true;
  /// First mismatching basis pair as ((degree, index), (degree, index)).
  std::optional<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>>
      mismatch;
};

/// Compares yoneda_mul with the trivial-extension product on every pair of
/// graded basis elements.
inline TrivialExtensionResult trivial_extension_check(const Matrix& form, const DerivationSpec& d) {
  auto b = yoneda_basis(d.size());
  TrivialExtensionResult res;
  for (std::size_t da = 0; da < 4; ++da)
    for (std::size_t ia = 0; ia < b[da].size(); ++ia)
      for (std::size_t db = 0; db < 4; ++db)
        for (std::size_t ib = 0; ib < b[db].size(); ++ib) {
          const auto& u = b[da][ia];
          const auto& v = b[db][ib];
          YonedaElement te = da + db > 3 ? YonedaElement::zero(d.size())
                                         : trivial_extension_mul(u, v, form);
          if (yoneda_mul(u, v, form, d) != te) {
            res.coincides = false;
            res.mismatch = {{da, ia}, {db, ib}};
            return res;
          }
        }
  return res;
}

/// Every degree-1 element of the trivial extension squares to zero, and a
/// graded isomorphism would preserve that. In E(B), (a, k)^2 = (0, -D(a, a)),
/// so a nonzero square exists iff some k^i has a nonzero symmetric part;
/// returns such an a.
inline std::optional<std::vector<Rational>> nonzero_degree1_square(const DerivationSpec& d) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = s; t < n; ++t) {
        if (d.coeff(i, s, t) + d.coeff(i, t, s) == 0) continue;
        std::vector<Rational> alpha(n);
        alpha[s] = 1;
        if (t != s) {
          // diagonal of the symmetric part vanishes here, so e_s + e_t works
          bool diag_zero = true;
          for (std::size_t j = 0; j < n; ++j) diag_zero = diag_zero && d.coeff(i, j, j) == 0;
          if (!diag_zero) continue;
          alpha[t] = 1;
        }
        return alpha;
      }
  return std::nullopt;
}

/// (u v) w == u (v w) over all triples of graded basis elements.
inline bool yoneda_associative(const Matrix& form, const DerivationSpec& d) {
  auto b = yoneda_basis(d.size());
  std::vector<YonedaElement> all;
  for (const auto& deg : b) all.insert(all.end(), deg.begin(), deg.end());
  for (const auto& u : all)
    for (const auto& v : all) {
      auto uv = yoneda_mul(u, v, form, d);
      for (const auto& w : all)
        if (yoneda_mul(uv, w, form, d) != yoneda_mul(u, yoneda_mul(v, w, form, d), form, d))
          return false;
    }
  return true;
}

}  // namespace cy3
