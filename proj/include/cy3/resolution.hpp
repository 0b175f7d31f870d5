#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "derivation_spec.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "quadratic.hpp"
#include "sparse.hpp"
#include "superpotential.hpp"

namespace cy3 {

/// Per-degree bookkeeping for one complex 0 -> P_L -> ... -> P_0 -> k -> 0.
/// Position p holds dims[p]; in_rank[p] is the rank of the map into P_p,
/// out_rank[p] that of the map out of it (P_0 -> k included).
struct DegreeExactness {
  std::size_t degree = 0;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> in_rank;
  std::vector<std::size_t> out_rank;
  std::vector<bool> exact;
  bool composites_zero = true;
  std::int64_t euler = 0;  ///< sum_p (-1)^p dims[p]
};

struct ResolutionReport {
  std::string name;
  std::size_t max_degree = 0;
  std::vector<DegreeExactness> degrees;

  bool exact() const {
    for (const auto& d : degrees)
      for (bool e : d.exact)
        if (!e) return false;
    return true;
  }
  bool composites_zero() const {
    for (const auto& d : degrees)
      if (!d.composites_zero) return false;
    return true;
  }
  /// sum_p (-1)^p dim P_p(k) == [k == 0] in every degree.
  bool euler_ok() const {
    for (const auto& d : degrees)
      if (d.euler != (d.degree == 0 ? 1 : 0)) return false;
    return true;
  }
  bool ok() const { return exact() && composites_zero() && euler_ok(); }
};

namespace detail {

/// A linear map between finite-dimensional pieces, by columns.
struct LinearMap {
  std::size_t rows = 0;
  std::vector<SparseVector> columns;
};

inline SparseVector apply_map(const LinearMap& f, const SparseVector& v) {
  SparseVector acc;
  for (const auto& [j, c] : v) acc = axpy(acc, c, f.columns.at(j));
  return acc;
}

/// Free module R (x) U for a generating space U of `gens` elements placed
/// in degree `shift`: degree-k part has basis (normal word of degree
/// k - shift, generator).
struct FreeModule {
  const TruncatedGB* gb;
  std::size_t gens;
  std::size_t shift;

  std::size_t dim(std::size_t k) const { return k < shift ? 0 : gb->dim(k - shift) * gens; }
  /// Coordinates of sum_g coeff[g] (x) u_g with coeff[g] of degree k - shift.
  SparseVector coords(const std::vector<NcPoly>& coeff) const {
    SparseVector v;
    for (std::size_t g = 0; g < gens; ++g) {
      if (coeff[g].is_zero()) continue;
      for (const auto& [idx, c] : gb->coordinates(coeff[g])) v.emplace_back(idx * gens + g, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }
};

inline SparseVector concat(const SparseVector& a, const SparseVector& b, std::size_t offset) {
  SparseVector out = a;
  for (const auto& [i, c] : b) out.emplace_back(i + offset, c);
  return out;
}

/// Fills a DegreeExactness from the maps P_L -> ... -> P_0 (maps[p] goes
/// P_{p+1} -> P_p) and the dimensions.
inline DegreeExactness assess(std::size_t k, const std::vector<std::size_t>& dims,
                              const std::vector<LinearMap>& maps) {
  DegreeExactness d;
  d.degree = k;
  d.dims = dims;
  const std::size_t len = dims.size();
  d.in_rank.assign(len, 0);
  d.out_rank.assign(len, 0);
  for (std::size_t p = 0; p + 1 < len; ++p) {
    std::size_t r = sparse_rank(maps[p].columns);
    d.out_rank[p + 1] = r;
    d.in_rank[p] = r;
  }
  d.out_rank[0] = (k == 0 && dims[0] > 0) ? 1 : 0;  // augmentation onto k
  for (std::size_t p = 0; p < len; ++p) d.exact.push_back(d.in_rank[p] + d.out_rank[p] == dims[p]);
  for (std::size_t p = 0; p + 2 < len; ++p)
    for (const auto& col : maps[p + 1].columns)
      if (!apply_map(maps[p], col).empty()) d.composites_zero = false;
  if (k == 0 && !maps.empty())
    for (const auto& col : maps[0].columns)
      if (!col.empty()) d.composites_zero = false;  // image must lie in the augmentation ideal
  for (std::size_t p = 0; p < len; ++p)
    d.euler += (p % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(dims[p]);
  return d;
}

/// u_i with r = sum_i u_i x_i, as degree-1 polynomials over `alphabet`.
inline std::vector<NcPoly> relation_left_factors(const Matrix& m, std::size_t alphabet) {
  const std::size_t n = m.rows();
  std::vector<NcPoly> u(n, NcPoly(alphabet));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u[i].add_term(Word::letter(j), m(j, i));
  return u;
}

/// y_ij with delta(x_i) = sum_j y_ij x_j.
inline std::vector<std::vector<NcPoly>> derivation_left_factors(const DerivationSpec& d,
                                                                std::size_t alphabet) {
  const std::size_t n = d.size();
  std::vector<std::vector<NcPoly>> y(n, std::vector<NcPoly>(n, NcPoly(alphabet)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (d.coeff(i, s, t) != 0) y[i][t].add_term(Word::letter(s), d.coeff(i, s, t));
  return y;
}

inline NcPoly word_poly(std::size_t alphabet, const Word& w) { return NcPoly::monomial(alphabet, w); }

}  // namespace detail

/// 0 -> R (x) kr -> R (x) V -> R -> k -> 0 with d1(1 (x) x) = x and
/// d2(1 (x) r) = sum_i u_i (x) x_i, checked in degrees 0..N. For A this is
/// the minimal resolution of k; over B the same complex (B tensored over A)
/// is exact except at B, where the cokernel is k[z].
inline ResolutionReport koszul_complex_report(const Matrix& m, const TruncatedGB& gb,
                                              std::size_t max_degree, const std::string& name) {
  if (max_degree > gb.bound()) throw AlgebraError("GB is not complete to the requested degree");
  const std::size_t n = m.rows();
  const std::size_t alpha = gb.alphabet();
  auto u = detail::relation_left_factors(m, alpha);
  detail::FreeModule p1{&gb, n, 1}, p2{&gb, 1, 2};
  ResolutionReport rep{name, max_degree, {}};
  for (std::size_t k = 0; k <= max_degree; ++k) {
    detail::LinearMap d1{gb.dim(k), {}}, d2{p1.dim(k), {}};
    if (k >= 1)
      for (const Word& b : gb.normal_words(k - 1))
        for (std::size_t i = 0; i < n; ++i)
          d1.columns.push_back(gb.coordinates(detail::word_poly(alpha, b + Word::letter(i))));
    if (k >= 2)
      for (const Word& b : gb.normal_words(k - 2)) {
        std::vector<NcPoly> coeff;
        for (std::size_t i = 0; i < n; ++i) coeff.push_back(detail::word_poly(alpha, b) * u[i]);
        d2.columns.push_back(p1.coords(coeff));
      }
    rep.degrees.push_back(detail::assess(k, {gb.dim(k), p1.dim(k), p2.dim(k)}, {d1, d2}));
  }
  return rep;
}

/// Exactness of the minimal resolution of k over A = T(V)/<r>.
inline ResolutionReport resolution_exactness_check(const QuadraticPresentation& pres,
                                                   const TruncatedGB& gb_a, std::size_t max_degree) {
  if (gb_a.alphabet() != pres.gens.size()) throw AlgebraError("GB is not over V");
  return koszul_complex_report(pres.matrix.matrix(), gb_a, max_degree, "A: 0 -> A(x)kr -> A(x)V -> A");
}

/// B (x)_A resolution of k over A: 0 -> B (x) kr -> B (x) V -> B -> B/BA_{>=1} -> 0.
/// Exact at the two free terms; the cokernel at B is k[z], one dimension per degree.
struct BaseChangeReport {
  ResolutionReport complex;
  std::vector<std::size_t> cokernel_dims;
  bool ok() const {
    for (const auto& d : complex.degrees) {
      if (!d.composites_zero) return false;
      for (std::size_t p = 1; p < d.exact.size(); ++p)
        if (!d.exact[p]) return false;
    }
    for (auto c : cokernel_dims)
      if (c != 1) return false;
    return true;
  }
};

inline BaseChangeReport base_change_sequence_check(const OrePresentation& op, const TruncatedGB& gb,
                                                   std::size_t max_degree) {
  if (gb.alphabet() != op.alphabet()) throw AlgebraError("GB is not over V-hat");
  BaseChangeReport rep{koszul_complex_report(op.base.matrix.matrix(), gb, max_degree,
                                             "B: 0 -> B(x)kr -> B(x)V -> B -> k[z]"),
                       {}};
  for (const auto& d : rep.complex.degrees) rep.cokernel_dims.push_back(d.dims[0] - d.in_rank[0]);
  return rep;
}

enum class ChainMapVariant { as_stated, without_delta };

namespace detail {

/// Chain maps f^{-2}(1 (x) r) = z (x) r, f^{-1}(1 (x) x_i) = z (x) x_i - delta(x_i),
/// f^0(1) = z on the complex B (x) [kr -> V -> k], realised on coefficient
/// polynomials.
struct OreChainMaps {
  const OrePresentation* op;
  ChainMapVariant variant;
  std::vector<NcPoly> u;
  std::vector<std::vector<NcPoly>> y;

  OreChainMaps(const OrePresentation& o, ChainMapVariant v)
      : op(&o), variant(v),
        u(relation_left_factors(o.base.matrix.matrix(), o.alphabet())),
        y(derivation_left_factors(o.derivation, o.alphabet())) {}

  std::size_t n() const { return op->n(); }
  NcPoly z() const { return NcPoly::generator(op->alphabet(), op->z()); }

  /// d^{-2}: b (x) r -> sum_i b u_i (x) x_i
  std::vector<NcPoly> d2(const NcPoly& b) const {
    std::vector<NcPoly> out;
    for (std::size_t i = 0; i < n(); ++i) out.push_back(b * u[i]);
    return out;
  }
  /// d^{-1}: sum_i c_i (x) x_i -> sum_i c_i x_i
  NcPoly d1(const std::vector<NcPoly>& c) const {
    NcPoly out(op->alphabet());
    for (std::size_t i = 0; i < n(); ++i) out += c[i] * NcPoly::generator(op->alphabet(), i);
    return out;
  }
  /// f^{-2}: b (x) r -> b z (x) r
  NcPoly f2(const NcPoly& b) const { return b * z(); }
  /// f^{-1}: sum_i c_i (x) x_i -> sum_i (c_i z (x) x_i - sum_j c_i y_ij (x) x_j)
  std::vector<NcPoly> f1(const std::vector<NcPoly>& c) const {
    std::vector<NcPoly> out(n(), NcPoly(op->alphabet()));
    for (std::size_t i = 0; i < n(); ++i) {
      out[i] += c[i] * z();
      if (variant == ChainMapVariant::as_stated)
        for (std::size_t j = 0; j < n(); ++j) out[j] -= c[i] * y[i][j];
    }
    return out;
  }
  /// f^0: b -> b z
  NcPoly f0(const NcPoly& b) const { return b * z(); }
};

inline std::vector<NcPoly> unit_vector(std::size_t n, std::size_t i, const NcPoly& c) {
  std::vector<NcPoly> v(n, NcPoly(c.alphabet()));
  v[i] = c;
  return v;
}

}  // namespace detail

/// The mapping cone of f: B (x) kr(-1) -> B (x) kr + B (x) V(-1) -> B (x) V + B(-1) -> B -> k,
/// with d3 = (f^{-2}, -d^{-2}), d2 = [[d^{-2}, f^{-1}], [0, -d^{-1}]], d1 = (d^{-1}, f^0).
inline ResolutionReport mapping_cone_exactness_check(const OrePresentation& op, const TruncatedGB& gb,
                                                     std::size_t max_degree) {
  if (max_degree > gb.bound()) throw AlgebraError("GB is not complete to the requested degree");
  if (gb.alphabet() != op.alphabet()) throw AlgebraError("GB is not over V-hat");
  const std::size_t n = op.n();
  const std::size_t alpha = op.alphabet();
  detail::OreChainMaps f(op, ChainMapVariant::as_stated);
  detail::FreeModule bv1{&gb, n, 1}, b1{&gb, 1, 1}, br2{&gb, 1, 2}, bv2{&gb, n, 2}, br3{&gb, 1, 3};

  ResolutionReport rep{"B: mapping cone", max_degree, {}};
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const std::size_t p1a = bv1.dim(k);  // offset of the B(-1) block in P1
    const std::size_t p2a = br2.dim(k);  // offset of the B(x)V(-1) block in P2
    std::vector<std::size_t> dims{gb.dim(k), p1a + b1.dim(k), p2a + bv2.dim(k), br3.dim(k)};

    detail::LinearMap m1{dims[0], {}}, m2{dims[1], {}}, m3{dims[2], {}};
    if (k >= 1) {
      for (const Word& b : gb.normal_words(k - 1))
        for (std::size_t i = 0; i < n; ++i)
          m1.columns.push_back(gb.coordinates(detail::word_poly(alpha, b + Word::letter(i))));
      for (const Word& b : gb.normal_words(k - 1))
        m1.columns.push_back(gb.coordinates(f.f0(detail::word_poly(alpha, b))));
    }
    if (k >= 2) {
      for (const Word& b : gb.normal_words(k - 2)) {
        auto top = bv1.coords(f.d2(detail::word_poly(alpha, b)));
        m2.columns.push_back(top);
      }
      for (const Word& c : gb.normal_words(k - 2))
        for (std::size_t i = 0; i < n; ++i) {
          auto cv = detail::unit_vector(n, i, detail::word_poly(alpha, c));
          auto top = bv1.coords(f.f1(cv));
          auto bottom = b1.coords({-f.d1(cv)});
          m2.columns.push_back(detail::concat(top, bottom, p1a));
        }
    }
    if (k >= 3) {
      for (const Word& b : gb.normal_words(k - 3)) {
        NcPoly bp = detail::word_poly(alpha, b);
        auto top = br2.coords({f.f2(bp)});
        std::vector<NcPoly> neg;
        for (auto& x : f.d2(bp)) neg.push_back(-x);
        m3.columns.push_back(detail::concat(top, bv2.coords(neg), p2a));
      }
    }
    rep.degrees.push_back(detail::assess(k, dims, {m1, m2, m3}));
  }
  return rep;
}

struct CommutationReport {
  bool left_square = true;   ///< f^{-1} d^{-2} == d^{-2} f^{-2}
  bool right_square = true;  ///< d^{-1} f^{-1} == f^0 d^{-1}
  std::size_t checked_through = 0;
  bool commutes() const { return left_square && right_square; }
};

/// Both squares of the chain map, on every basis element whose images have
/// degree <= N, compared through normal forms in B.
inline CommutationReport lemr1_commutation_check(const OrePresentation& op, const TruncatedGB& gb,
                                                 std::size_t max_degree,
                                                 ChainMapVariant variant = ChainMapVariant::as_stated) {
  if (max_degree > gb.bound()) throw AlgebraError("GB is not complete to the requested degree");
  const std::size_t n = op.n();
  const std::size_t alpha = op.alphabet();
  detail::OreChainMaps f(op, variant);
  CommutationReport rep;
  rep.checked_through = max_degree;
  auto same = [&](const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!gb.normal_form(a[i] - b[i]).is_zero()) return false;
    return true;
  };
  // Left square on b (x) r, coefficients reach degree deg(b) + 2.
  for (std::size_t k = 0; k + 2 <= max_degree; ++k)
    for (const Word& w : gb.normal_words(k)) {
      NcPoly b = detail::word_poly(alpha, w);
      if (!same(f.f1(f.d2(b)), f.d2(f.f2(b)))) rep.left_square = false;
    }
  // Right square on c (x) x_i, images of degree deg(c) + 2.
  for (std::size_t k = 0; k + 2 <= max_degree; ++k)
    for (const Word& w : gb.normal_words(k))
      for (std::size_t i = 0; i < n; ++i) {
        auto cv = detail::unit_vector(n, i, detail::word_poly(alpha, w));
        NcPoly lhs = f.d1(f.f1(cv));
        NcPoly rhs = f.f0(f.d1(cv));
        if (!gb.normal_form(lhs - rhs).is_zero()) rep.right_square = false;
      }
  return rep;
}

}  // namespace cy3
