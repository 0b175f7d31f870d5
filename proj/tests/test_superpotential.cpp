#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

namespace cy3 {
namespace {

using testing::poly;
using testing::Rng;

OrePresentation twogen_ore(int a, int b, int c) {
  return ore_presentation(testing::plane(), testing::two_generator_derivation(a, b, c));
}

// Independent expansion of -z r + sum m_ij x_i r_j on letter triples, without NcPoly arithmetic.
std::map<std::vector<std::size_t>, Rational> expand_by_hand(const Matrix& m, const DerivationSpec& d) {
  const std::size_t n = m.rows(), z = n;
  std::map<std::vector<std::size_t>, Rational> out;
  auto add = [&](std::vector<std::size_t> w, const Rational& c) {
    out[w] += c;
    if (out[w] == 0) out.erase(w);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0) add({z, i, j}, -m(i, j));  // -z r
      if (m(i, j) == 0) continue;
      // x_i r_j = x_i z x_j - x_i x_j z - sum_st k^j_st x_i x_s x_t
      add({i, z, j}, m(i, j));
      add({i, j, z}, -m(i, j));
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
          if (d.coeff(j, s, t) != 0) add({i, s, t}, -m(i, j) * d.coeff(j, s, t));
    }
  return out;
}

std::map<std::vector<std::size_t>, Rational> as_map(const NcPoly& p) {
  std::map<std::vector<std::size_t>, Rational> out;
  for (const auto& [w, c] : p.terms()) {
    std::vector<std::size_t> letters;
    for (std::size_t k = 0; k < w.size(); ++k) letters.push_back(w[k]);
    out[letters] = c;
  }
  return out;
}

// Cyclic in degree 3 means the coefficients are invariant under rotation of words.
bool rotation_invariant(const NcPoly& w) {
  for (const auto& [word, c] : w.terms()) {
    Word rotated({static_cast<Letter>(word[1]), static_cast<Letter>(word[2]), static_cast<Letter>(word[0])});
    if (w.coefficient_of(rotated) != c) return false;
  }
  return true;
}

Matrix with_z_fixed(const Matrix& p) {
  const std::size_t n = p.rows();
  Matrix out(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = p(i, j);
  out(n, n) = 1;
  return out;
}

TEST(OrePresentation, ZeroDerivation) {
  auto op = ore_presentation(testing::plane(), DerivationSpec(2));
  auto g = testing::xyz();
  ASSERT_EQ(op.relations.size(), 3u);
  EXPECT_EQ(op.relations[0], poly("xy - yx", g));
  EXPECT_EQ(op.relations[1], poly("zx - xz", g));
  EXPECT_EQ(op.relations[2], poly("zy - yz", g));
  EXPECT_EQ(op.z(), 2u);
}

TEST(OrePresentation, TwoGeneratorFamily) {
  auto op = twogen_ore(1, 1, 1);
  auto g = testing::xyz();
  EXPECT_EQ(op.relations[1], poly("zx - xz - xx - yy", g));
  EXPECT_EQ(op.relations[2], poly("zy - yz - xx + xy + yx", g));
}

TEST(OrePresentation, SmithHasIndependentRelations) {
  auto op = ore_presentation(testing::smith_presentation(), testing::smith_derivation());
  EXPECT_EQ(op.relations.size(), 7u);
  EXPECT_EQ(detail::rank_deg2(op.relations, 7), 7u);
  EXPECT_EQ(op.gens_hat.name(6), "z");
}

TEST(OrePresentation, Errors) {
  EXPECT_THROW(ore_presentation(testing::plane(), DerivationSpec(3)), AlgebraError);
  DerivationSpec bad(4);
  bad.set(0, 0, 0, 1);
  EXPECT_THROW(ore_presentation(testing::standard_presentation(4), bad), AlgebraError);
}

TEST(BuildSuperpotential, TwoGeneratorPublishedForm) {
  auto w = build_superpotential(twogen_ore(1, 1, 1)).w;
  EXPECT_EQ(w, poly("yxz + zyx + xzy - xyz - zxy - yzx - xxx + yyy + xyx + xxy + yxx", testing::xyz()));
  EXPECT_EQ(w.terms().size(), 11u);
  EXPECT_EQ(w.coefficient_of(Word({1, 0, 2})), 1);
}

TEST(BuildSuperpotential, ZeroDerivationExpansion) {
  auto w = build_superpotential(ore_presentation(testing::plane(), DerivationSpec(2))).w;
  EXPECT_EQ(w, poly("-zxy + zyx + xzy - xyz - yzx + yxz", testing::xyz()));
  EXPECT_TRUE(rotation_invariant(w));
}

TEST(BuildSuperpotential, SmithMatchesHandExpansion) {
  auto op = ore_presentation(testing::smith_presentation(), testing::smith_derivation());
  auto w = build_superpotential(op).w;
  EXPECT_EQ(w.terms().size(), 42u);
  EXPECT_EQ(w.homogeneous_degree(), 3u);
  EXPECT_EQ(as_map(w), expand_by_hand(testing::smith_matrix(), testing::smith_derivation()));
  EXPECT_TRUE(is_cyclic(w));
  EXPECT_TRUE(rotation_invariant(w));
}

TEST(BuildSuperpotential, NeedsCompatibleDerivation) {
  DerivationSpec d(2);
  d.set(1, 0, 1, 1);  // delta(r) = x r: descends, but delta(r) != 0
  auto op = ore_presentation(testing::plane(), d);
  EXPECT_THROW(build_superpotential(op), AlgebraError);
}

TEST(BuildSuperpotentialProperty, HandExpansionAndCyclicity) {
  Rng rng(21);
  for (std::size_t n : {2, 4}) {
    auto pres = testing::standard_presentation(n);
    auto basis = testing::compatible_derivation_basis(pres.matrix.matrix());
    for (int trial = 0; trial < 25; ++trial) {
      DerivationSpec d = testing::random_compatible_derivation(rng, basis);
      auto w = build_superpotential(ore_presentation(pres, d)).w;
      ASSERT_EQ(as_map(w), expand_by_hand(pres.matrix.matrix(), d));
      ASSERT_TRUE(is_cyclic(w));
      ASSERT_TRUE(rotation_invariant(w));
    }
  }
}

TEST(IsCyclic, DetectsBrokenRotation) {
  auto g = testing::xyz();
  EXPECT_TRUE(is_cyclic(poly("xyz + yzx + zxy", g)));
  EXPECT_FALSE(is_cyclic(poly("xyz + yzx", g)));
  EXPECT_TRUE(is_cyclic(poly("xxx", g)));
}

TEST(CyclicPartial, TwoGeneratorFamily) {
  auto op = twogen_ore(1, 1, 1);
  auto s = build_superpotential(op);
  EXPECT_EQ(cyclic_partial(s, 0), op.relations[2]);   // d_x w = r_2
  EXPECT_EQ(cyclic_partial(s, 1), -op.relations[1]);  // d_y w = -r_1
  EXPECT_EQ(cyclic_partial(s, 2), -op.relations[0]);  // d_z w = -r
}

TEST(CyclicPartialProperty, MatchesMatrixCombination) {
  Rng rng(22);
  auto check = [](const OrePresentation& op) {
    auto s = build_superpotential(op);
    const std::size_t n = op.n();
    if (cyclic_partial(s, op.z()) != -op.relations[0]) return false;
    for (std::size_t k = 0; k < n; ++k) {
      NcPoly expect(n + 1);
      for (std::size_t j = 0; j < n; ++j) expect += op.base.matrix(k, j) * op.relations[j + 1];
      if (cyclic_partial(s, k) != expect) return false;
    }
    return true;
  };
  EXPECT_TRUE(check(ore_presentation(testing::smith_presentation(), testing::smith_derivation())));
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 * (1 + trial % 2);
    AntiSymMatrix m = testing::random_invertible_antisymmetric(rng, n);
    auto pres = relation_from_matrix(m, GeneratorSet::numbered(n));
    auto basis = testing::compatible_derivation_basis(m.matrix());
    ASSERT_TRUE(check(ore_presentation(pres, testing::random_compatible_derivation(rng, basis))));
  }
}

TEST(JacobianPresentation, Holds) {
  for (auto op : {twogen_ore(1, 1, 1), twogen_ore(0, 0, 0), twogen_ore(2, -1, 1),
                  ore_presentation(testing::smith_presentation(), testing::smith_derivation())})
    EXPECT_TRUE(jacobian_presentation_check(op, build_superpotential(op)));
}

TEST(JacobianPresentation, PerturbedPotentialFails) {
  auto op = twogen_ore(1, 1, 1);
  auto s = build_superpotential(op);
  s.w += poly("xxx", testing::xyz());
  EXPECT_FALSE(jacobian_presentation_check(op, s));
  auto cmp = compare_jacobian_span(op, s);
  EXPECT_GT(cmp.rank_union, cmp.rank_relations);
}

TEST(JacobianPresentation, WrongDegreeFails) {
  auto op = twogen_ore(1, 1, 1);
  Superpotential s{poly("xy - yx", testing::xyz())};
  EXPECT_FALSE(jacobian_presentation_check(op, s));
}

TEST(RewrittenForm, Holds) {
  for (auto op : {twogen_ore(1, 1, 1), twogen_ore(0, 0, 0),
                  ore_presentation(testing::smith_presentation(), testing::smith_derivation())})
    EXPECT_TRUE(rewritten_form_check(op, build_superpotential(op)));
  auto op = twogen_ore(1, 1, 1);
  auto s = build_superpotential(op);
  s.w += poly("xxx", testing::xyz());
  EXPECT_FALSE(rewritten_form_check(op, s));
}

TEST(SuperpotentialProperty, CommutesWithChangeOfCoordinates) {
  Rng rng(23);
  const QuadraticPresentation pres = testing::smith_presentation();
  const DerivationSpec d = testing::smith_derivation();
  const NcPoly w = build_superpotential(ore_presentation(pres, d)).w;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix p;
    if (trial % 2 == 0) {
      p = testing::random_signed_permutation(rng, 6);
    } else {
      do p = testing::random_matrix(rng, 6, 6, 2, 0.6);
      while (rank(p) != 6);
    }
    auto moved = ore_presentation(transport_presentation(pres, p), transport_derivation(d, p));
    ASSERT_EQ(build_superpotential(moved).w, linear_substitution(w, with_z_fixed(p))) << "trial " << trial;
  }
}

}  // namespace
}  // namespace cy3
