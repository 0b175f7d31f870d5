#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "derivation_spec.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"
#include "quadratic.hpp"

namespace cy3 {

/// Leibniz extension: delta(w_1...w_k) = sum_j w_1...delta(w_j)...w_k.
inline NcPoly extend_derivation(const DerivationSpec& d, const NcPoly& p) {
  if (p.alphabet() != d.size())
    throw AlgebraError("derivation over " + std::to_string(d.size()) +
                       " generators applied to a polynomial over " +
                       std::to_string(p.alphabet()));
  std::vector<NcPoly> images;
  for (std::size_t i = 0; i < d.size(); ++i) images.push_back(d.image(i));
  NcPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms())
    for (std::size_t k = 0; k < w.size(); ++k)
      out.add_scaled_product(c, w.subword(0, k), images[w[k]], w.subword(k + 1));
  return out;
}

inline bool check_delta_r_zero(const DerivationSpec& d, const QuadraticPresentation& pres) {
  return extend_derivation(d, pres.relation).is_zero();
}

/// target = sum_i left[i] x_i r + sum_i right[i] r x_i.
struct IdealCertificate {
  std::vector<Rational> left;
  std::vector<Rational> right;
};

struct IdealMembership {
  std::optional<IdealCertificate> certificate;
  /// On failure: functional on the spanning words that kills every x_i r
  /// and r x_i but not the target (pairs word -> weight).
  std::vector<std::pair<Word, Rational>> obstruction;
  bool member() const { return certificate.has_value(); }
};

/// Decides target in <r>_3 = V r + r V by one dense linear solve.
inline IdealMembership degree3_ideal_membership(const NcPoly& target, const NcPoly& r) {
  target.check_alphabet(r);
  if (!target.is_zero() && target.homogeneous_degree() != 3)
    throw AlgebraError("degree-3 membership needs a homogeneous degree-3 target");
  const std::size_t n = r.alphabet();
  std::vector<NcPoly> columns;
  for (std::size_t i = 0; i < n; ++i) columns.push_back(NcPoly::generator(n, i) * r);
  for (std::size_t i = 0; i < n; ++i) columns.push_back(r * NcPoly::generator(n, i));

  std::map<Word, std::size_t> rows;
  for (const auto& col : columns)
    for (const auto& [w, c] : col.terms()) rows.emplace(w, 0);
  for (const auto& [w, c] : target.terms()) rows.emplace(w, 0);
  std::size_t k = 0;
  for (auto& [w, idx] : rows) idx = k++;

  Matrix a(rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [w, c] : columns[j].terms()) a(rows[w], j) = c;
  std::vector<Rational> b(rows.size());
  for (const auto& [w, c] : target.terms()) b[rows[w]] = c;

  auto res = rank_and_solve(a, b);
  IdealMembership out;
  if (res.solution) {
    IdealCertificate cert;
    cert.left.assign(res.solution->begin(), res.solution->begin() + n);
    cert.right.assign(res.solution->begin() + n, res.solution->end());
    out.certificate = std::move(cert);
  } else {
    for (const auto& [w, idx] : rows)
      if ((*res.inconsistency)[idx] != 0) out.obstruction.emplace_back(w, (*res.inconsistency)[idx]);
  }
  return out;
}

/// delta(r) in <r>: the weaker condition under which delta descends to A.
inline IdealMembership check_delta_r_in_ideal(const DerivationSpec& d,
                                              const QuadraticPresentation& pres) {
  NcPoly dr = extend_derivation(d, pres.relation);
  if (dr.is_zero()) {
    std::size_t n = d.size();
    return {IdealCertificate{std::vector<Rational>(n), std::vector<Rational>(n)}, {}};
  }
  return degree3_ideal_membership(dr, pres.relation);
}

/// Derivation in the coordinates y given by x = P y, so that the algebra
/// map sending x_i to sum_j P_ij y_j intertwines d with the result.
inline DerivationSpec transport_derivation(const DerivationSpec& d, const Matrix& p) {
  const std::size_t n = d.size();
  if (p.rows() != n || p.cols() != n) throw AlgebraError("transport matrix has wrong size");
  Matrix pinv = inverse(p);
  std::vector<NcPoly> substituted;
  for (std::size_t i = 0; i < n; ++i) substituted.push_back(linear_substitution(d.image(i), p));
  std::vector<NcPoly> images;
  for (std::size_t a = 0; a < n; ++a) {
    NcPoly img(n);
    for (std::size_t i = 0; i < n; ++i)
      if (pinv(a, i) != 0) img += pinv(a, i) * substituted[i];
    images.push_back(std::move(img));
  }
  return DerivationSpec::from_images(images);
}

/// Presentation in the coordinates x = P y: matrix P^t M P.
inline QuadraticPresentation transport_presentation(const QuadraticPresentation& pres,
                                                    const Matrix& p) {
  return relation_from_matrix(congruence(pres.matrix, p), pres.gens,
                              pres.matrix.invertible() ? RequireInvertible::yes
                                                       : RequireInvertible::no);
}

}  // namespace cy3
