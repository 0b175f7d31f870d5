#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "quadratic.hpp"
#include "sparse.hpp"
#include "superpotential.hpp"

namespace cy3 {

/// The same Ore extension written in coordinates x = P y.
inline OrePresentation transport_ore(const OrePresentation& op, const Matrix& p) {
  return ore_presentation(transport_presentation(op.base, p), transport_derivation(op.derivation, p),
                          op.gens_hat.name(op.z()));
}

/// Moves an Ore presentation with invertible M to the standard form; the
/// matrix used is returned alongside.
inline std::pair<OrePresentation, Matrix> standardize(const OrePresentation& op) {
  Matrix p = reduce_to_standard(op.base.matrix);
  return {transport_ore(op, p), p};
}

struct CoherenceReport {
  std::size_t n = 0;
  std::size_t max_degree = 0;
  bool noetherian_case = false;  ///< n = 2: B is Noetherian, witnesses not needed
  CoherencePrecondition precondition;
  std::optional<Matrix> relabeling;  ///< x = P y applied to move the witness index last

  // (a) B/I with I = <x_1, ..., x_{n-1}>
  std::vector<std::int64_t> quotient_dims;
  bool quotient_dims_ok = false;
  bool xn_z_commute = false;
  // (b) H_B - H_{B/I} == H_B * ((n-1)t - t^2)/(1-t)
  std::vector<std::int64_t> hilbert_b;
  std::vector<std::int64_t> ideal_series;
  std::vector<std::int64_t> free_series;
  bool hilbert_identity = false;
  // (c) x_1 x_n in B L, read off the relation
  bool relation_reduces = false;
  bool x1xn_in_BL = false;

  bool passes() const {
    if (noetherian_case) return true;
    return precondition.holds() && quotient_dims_ok && xn_z_commute && hilbert_identity &&
           relation_reduces && x1xn_in_BL;
  }
};

namespace detail {

inline void fill_coherence_witnesses(CoherenceReport& rep, const OrePresentation& op,
                                     std::size_t max_degree) {
  const std::size_t n = op.n();
  const std::size_t alpha = op.alphabet();
  const NcPoly xn = NcPoly::generator(alpha, n - 1);
  const NcPoly z = NcPoly::generator(alpha, op.z());

  TruncatedGB gb = complete_gb(op.relations, max_degree, alpha);

  std::vector<NcPoly> with_l = op.relations;
  for (std::size_t i = 0; i + 1 < n; ++i) with_l.push_back(NcPoly::generator(alpha, i));
  TruncatedGB quotient = complete_gb(with_l, max_degree, alpha);

  rep.quotient_dims = hilbert_coeffs(quotient).coeffs;
  rep.quotient_dims_ok = true;
  for (std::size_t k = 0; k < rep.quotient_dims.size(); ++k)
    if (rep.quotient_dims[k] != static_cast<std::int64_t>(k + 1)) rep.quotient_dims_ok = false;
  rep.xn_z_commute = max_degree < 2 || quotient.normal_form(z * xn - xn * z).is_zero();

  const std::size_t terms = max_degree + 1;
  rep.hilbert_b = hilbert_coeffs(gb).coeffs;
  rep.ideal_series.resize(terms);
  for (std::size_t k = 0; k < terms; ++k) rep.ideal_series[k] = rep.hilbert_b[k] - rep.quotient_dims[k];
  IntPoly hw = series_expand({0, static_cast<std::int64_t>(n) - 1, -1}, {1, -1}, terms);
  rep.free_series = series_mul(rep.hilbert_b, hw, terms);
  rep.hilbert_identity = rep.ideal_series == rep.free_series;

  if (max_degree >= 2) {
    rep.relation_reduces = gb.normal_form(op.relations[0]).is_zero();
    SparseEchelon bl;
    for (std::size_t a = 0; a < alpha; ++a)
      for (std::size_t l = 0; l + 1 < n; ++l)
        bl.insert(gb.coordinates(NcPoly::generator(alpha, a) * NcPoly::generator(alpha, l)));
    rep.x1xn_in_BL = bl.contains(gb.coordinates(NcPoly::generator(alpha, 0) * xn));
  }
}

}  // namespace detail

/// Structural and numerical witnesses that B is graded coherent, through
/// degree N. Needs n >= 4, standard M and an index j with k^i_jj = 0 for
/// every i; when that index is not the last one, generators are relabelled
/// (keeping M standard) before the witnesses are computed.
inline CoherenceReport coherence_witness_check(const OrePresentation& op, std::size_t max_degree) {
  CoherenceReport rep;
  rep.n = op.n();
  rep.max_degree = max_degree;
  if (op.n() == 2) {
    rep.noetherian_case = true;
    return rep;
  }
  rep.precondition = coherence_precondition(op.base.matrix, op.derivation);
  if (op.n() < 4) rep.precondition.failure = "coherence witnesses need n >= 4";
  if (!rep.precondition.holds()) return rep;

  const std::size_t j = *rep.precondition.witness;
  if (j + 1 == op.n()) {
    detail::fill_coherence_witnesses(rep, op, max_degree);
    return rep;
  }
  Matrix p = standard_relabeling(op.n(), j);
  OrePresentation moved = transport_ore(op, p);
  CoherencePrecondition after = coherence_precondition(moved.base.matrix, moved.derivation);
  if (!after.standard || *after.witness + 1 != moved.n())
    throw std::logic_error("relabeling did not move the witness index last");
  rep.relabeling = p;
  detail::fill_coherence_witnesses(rep, moved, max_degree);
  return rep;
}

}  // namespace cy3
