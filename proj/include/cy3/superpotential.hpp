#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "errors.hpp"
#include "ncpoly.hpp"
#include "quadratic.hpp"
#include "sparse.hpp"

namespace cy3 {

/// B = A[z; delta] presented on V-hat = V + kz. The Ore variable is stored
/// last (index n), so it is the greatest letter; relations are
/// [r, r_1, ..., r_n] with r_i = z x_i - x_i z - delta(x_i).
struct OrePresentation {
  GeneratorSet gens_hat;
  QuadraticPresentation base;
  DerivationSpec derivation;
  std::vector<NcPoly> relations;

  std::size_t n() const { return base.gens.size(); }
  std::size_t z() const { return *gens_hat.z_index(); }
  std::size_t alphabet() const { return gens_hat.size(); }
};

namespace detail {
inline SparseVector coordinates_deg2(const NcPoly& p, std::size_t alphabet) {
  SparseVector v;
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != 2) throw AlgebraError("expected a homogeneous degree-2 element");
    v.emplace_back(w[0] * alphabet + w[1], c);
  }
  return v;  // std::map order on equal-length words is lexicographic
}
inline std::size_t rank_deg2(const std::vector<NcPoly>& ps, std::size_t alphabet) {
  std::vector<SparseVector> vs;
  for (const auto& p : ps) vs.push_back(coordinates_deg2(p, alphabet));
  return sparse_rank(vs);
}
}  // namespace detail

inline OrePresentation ore_presentation(const QuadraticPresentation& pres, const DerivationSpec& d,
                                        const std::string& z_name = "z") {
  const std::size_t n = pres.gens.size();
  if (d.size() != n)
    throw AlgebraError("derivation has size " + std::to_string(d.size()) + ", presentation " +
                       std::to_string(n));
  if (!check_delta_r_in_ideal(d, pres).member())
    throw AlgebraError("delta(r) is not in <r>; delta does not descend to A");
  OrePresentation op{pres.gens.with_ore_variable(z_name), pres, d, {}};
  const std::size_t m = n + 1;
  op.relations.push_back(widen(pres.relation, m));
  NcPoly z = NcPoly::generator(m, n);
  for (std::size_t i = 0; i < n; ++i) {
    NcPoly x = NcPoly::generator(m, i);
    op.relations.push_back(z * x - x * z - d.image(i, m));
  }
  if (detail::rank_deg2(op.relations, m) != n + 1)
    throw AlgebraError("Ore relations are linearly dependent");
  return op;
}

/// Degree-3 element of T(V-hat).
struct Superpotential {
  NcPoly w;
};

/// w = -z r + sum_{ij} m_ij x_i r_j, i.e. (z, x_1..x_n) diag(-1, M) (r, r_1..r_n)^t.
inline Superpotential build_superpotential(const OrePresentation& op) {
  if (!check_delta_r_zero(op.derivation, op.base))
    throw AlgebraError("superpotential needs delta(r) = 0");
  const std::size_t m = op.alphabet();
  NcPoly w = -(NcPoly::generator(m, op.z()) * op.relations[0]);
  for (std::size_t i = 0; i < op.n(); ++i)
    for (std::size_t j = 0; j < op.n(); ++j) {
      const Rational& mij = op.base.matrix(i, j);
      if (mij != 0) w.add_scaled_product(mij, Word::letter(i), op.relations[j + 1], Word{});
    }
  return {std::move(w)};
}

/// [alpha w] = [w alpha] for every coordinate functional alpha.
inline bool is_cyclic(const NcPoly& w) {
  for (std::size_t a = 0; a < w.alphabet(); ++a)
    if (apply_left_functional(a, w) != apply_right_functional(w, a)) return false;
  return true;
}

/// d_{x_i}(w) = [x_i^* w]; index i in storage order (z is index n).
inline NcPoly cyclic_partial(const Superpotential& s, std::size_t i) {
  return apply_left_functional(i, s.w);
}

inline std::vector<NcPoly> all_cyclic_partials(const Superpotential& s) {
  std::vector<NcPoly> out;
  for (std::size_t i = 0; i < s.w.alphabet(); ++i) out.push_back(cyclic_partial(s, i));
  return out;
}

struct JacobianComparison {
  std::size_t rank_partials = 0;
  std::size_t rank_relations = 0;
  std::size_t rank_union = 0;
  bool equal() const { return rank_partials == rank_relations && rank_union == rank_relations; }
};

inline JacobianComparison compare_jacobian_span(const OrePresentation& op, const Superpotential& s) {
  const std::size_t m = op.alphabet();
  auto partials = all_cyclic_partials(s);
  JacobianComparison out;
  out.rank_partials = detail::rank_deg2(partials, m);
  out.rank_relations = detail::rank_deg2(op.relations, m);
  auto both = partials;
  both.insert(both.end(), op.relations.begin(), op.relations.end());
  out.rank_union = detail::rank_deg2(both, m);
  return out;
}

/// span{d_{x_i} w : i = 0..n} == span{r, r_1, ..., r_n} inside V-hat (x) V-hat.
inline bool jacobian_presentation_check(const OrePresentation& op, const Superpotential& s) {
  if (s.w.alphabet() != op.alphabet()) return false;
  if (!s.w.is_zero() && s.w.homogeneous_degree() != 3) return false;
  return compare_jacobian_span(op, s).equal();
}

/// w == -r z + sum_{ij} m_ji r_i x_j.
inline bool rewritten_form_check(const OrePresentation& op, const Superpotential& s) {
  const std::size_t m = op.alphabet();
  NcPoly rhs = -(op.relations[0] * NcPoly::generator(m, op.z()));
  for (std::size_t i = 0; i < op.n(); ++i)
    for (std::size_t j = 0; j < op.n(); ++j) {
      const Rational& mji = op.base.matrix(j, i);
      if (mji != 0) rhs.add_scaled_product(mji, Word{}, op.relations[i + 1], Word::letter(j));
    }
  return rhs == s.w;
}

}  // namespace cy3
