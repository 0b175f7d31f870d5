#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "ncpoly.hpp"
#include "sparse.hpp"
#include "word.hpp"

namespace cy3 {

/// Homogeneous two-sided Groebner basis of T(V), complete through degree N
/// for the degree-lexicographic order (letter index order, so the Ore
/// variable, stored last, is greatest). Elements are monic in their
/// largest word and leading words are pairwise non-divisible.
class TruncatedGB {
public:
  struct Occurrence {
    std::size_t element;
    std::size_t position;
  };

  std::size_t alphabet() const noexcept { return alphabet_; }
  std::size_t bound() const noexcept { return bound_; }
  const std::vector<NcPoly>& elements() const noexcept { return elements_; }
  const Word& leading_word(std::size_t i) const { return leading_[i]; }

  /// Leftmost occurrence of a leading word inside w (shortest first).
  std::optional<Occurrence> find_occurrence(const Word& w) const {
    for (std::size_t len : lengths_) {
      if (len > w.size()) break;
      for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
        auto it = lookup_.find(w.key().substr(pos, len));
        if (it != lookup_.end()) return Occurrence{it->second, pos};
      }
    }
    return std::nullopt;
  }

  std::vector<Occurrence> all_occurrences(const Word& w) const {
    std::vector<Occurrence> out;
    for (std::size_t len : lengths_) {
      if (len > w.size()) break;
      for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
        auto it = lookup_.find(w.key().substr(pos, len));
        if (it != lookup_.end()) out.push_back({it->second, pos});
      }
    }
    return out;
  }

  bool is_normal(const Word& w) const { return !find_occurrence(w).has_value(); }

  /// Unique representative supported on normal words. Rewrites the largest
  /// reducible term first.
  NcPoly normal_form(const NcPoly& p) const {
    check(p);
    return reduce_unchecked(p);
  }

  /// Same result reached by rewriting a randomly chosen reducible term at a
  /// randomly chosen occurrence each step; exists to exercise confluence.
  template <class Rng>
  NcPoly normal_form_random(const NcPoly& p, Rng& rng) const {
    check(p);
    NcPoly cur = p;
    while (true) {
      std::vector<std::pair<Word, std::vector<Occurrence>>> reducible;
      for (const auto& [w, c] : cur.terms()) {
        auto occ = all_occurrences(w);
        if (!occ.empty()) reducible.emplace_back(w, std::move(occ));
      }
      if (reducible.empty()) return cur;
      auto& [w, occs] = reducible[std::uniform_int_distribution<std::size_t>(
          0, reducible.size() - 1)(rng)];
      const Occurrence& o =
          occs[std::uniform_int_distribution<std::size_t>(0, occs.size() - 1)(rng)];
      Rational c = cur.coefficient_of(w);
      rewrite(cur, w, c, o);
    }
  }

  /// Normal words of degree k, increasing.
  const std::vector<Word>& normal_words(std::size_t k) const {
    if (k > bound_) throw AlgebraError("degree " + std::to_string(k) + " exceeds GB bound " +
                                       std::to_string(bound_));
    return normal_[k];
  }
  std::size_t dim(std::size_t k) const { return normal_words(k).size(); }

  /// Position of a normal word in normal_words(w.size()).
  std::size_t index_of(const Word& w) const {
    auto it = index_[w.size()].find(w);
    if (it == index_[w.size()].end()) throw AlgebraError("word is not normal");
    return it->second;
  }

  /// Coordinates of a homogeneous polynomial of degree k in the normal-word
  /// basis (after reduction).
  SparseVector coordinates(const NcPoly& p) const {
    NcPoly nf = normal_form(p);
    SparseVector v;
    for (const auto& [w, c] : nf.terms()) v.emplace_back(index_of(w), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  /// Every ambiguity of total degree <= N resolves (re-checked from scratch).
  bool overlaps_resolve() const {
    for (std::size_t g = 0; g < elements_.size(); ++g)
      for (std::size_t h = 0; h < elements_.size(); ++h)
        for (const auto& s : overlap_polys(g, h, bound_))
          if (!reduce_unchecked(s).is_zero()) return false;
    return true;
  }

  /// No leading word is a subword of another.
  bool inter_reduced() const {
    for (std::size_t i = 0; i < leading_.size(); ++i)
      for (std::size_t j = 0; j < leading_.size(); ++j)
        if (i != j && leading_[j].find(leading_[i]) != std::string::npos) return false;
    return true;
  }

private:
  friend TruncatedGB complete_gb(const std::vector<NcPoly>&, std::size_t, std::size_t);

  void check(const NcPoly& p) const {
    if (p.alphabet() != alphabet_) throw AlgebraError("polynomial over the wrong alphabet");
    if (p.max_degree() > bound_)
      throw AlgebraError("degree " + std::to_string(p.max_degree()) + " exceeds GB bound " +
                         std::to_string(bound_));
  }

  void rewrite(NcPoly& cur, const Word& w, const Rational& c, const Occurrence& o) const {
    const Word& lw = leading_[o.element];
    cur.add_scaled_product(-c, w.subword(0, o.position), elements_[o.element],
                           w.subword(o.position + lw.size()));
  }

  NcPoly reduce_unchecked(const NcPoly& p) const {
    NcPoly rem = p, out(p.alphabet());
    while (!rem.is_zero()) {
      Word w = rem.leading_term().first;
      Rational c = rem.leading_term().second;
      if (auto o = find_occurrence(w)) {
        rewrite(rem, w, c, *o);
      } else {
        out.add_term(w, c);
        rem.add_term(w, -c);
      }
    }
    return out;
  }

  /// S-polynomials g * B - A * h for LW(g) = A C, LW(h) = C B, |C| >= 1,
  /// with total length <= max_degree (or == exact_degree when given).
  std::vector<NcPoly> overlap_polys(std::size_t g, std::size_t h, std::size_t max_degree,
                                    std::optional<std::size_t> exact_degree = std::nullopt) const {
    std::vector<NcPoly> out;
    const Word& lg = leading_[g];
    const Word& lh = leading_[h];
    for (std::size_t k = 1; k < lg.size() && k < lh.size(); ++k) {
      std::size_t total = lg.size() + lh.size() - k;
      if (total > max_degree) continue;
      if (exact_degree && total != *exact_degree) continue;
      if (lg.key().compare(lg.size() - k, k, lh.key(), 0, k) != 0) continue;
      NcPoly s(alphabet_);
      s.add_scaled_product(1, Word{}, elements_[g], lh.subword(k));
      s.add_scaled_product(-1, lg.subword(0, lg.size() - k), elements_[h], Word{});
      out.push_back(std::move(s));
    }
    return out;
  }

  void insert(NcPoly p) {
    Rational inv = 1 / p.leading_term().second;
    p *= inv;
    Word lw = p.leading_term().first;
    lookup_.emplace(lw.key(), elements_.size());
    if (!std::binary_search(lengths_.begin(), lengths_.end(), lw.size()))
      lengths_.insert(std::lower_bound(lengths_.begin(), lengths_.end(), lw.size()), lw.size());
    leading_.push_back(std::move(lw));
    elements_.push_back(std::move(p));
  }

  void enumerate_normal_words() {
    normal_.assign(bound_ + 1, {});
    index_.assign(bound_ + 1, {});
    normal_[0].push_back(Word{});
    for (std::size_t k = 1; k <= bound_; ++k) {
      for (const Word& w : normal_[k - 1])
        for (std::size_t a = 0; a < alphabet_; ++a) {
          Word v = w + Word::letter(a);
          bool ok = true;
          for (std::size_t len : lengths_) {
            if (len > v.size()) break;
            if (lookup_.count(v.key().substr(v.size() - len))) {
              ok = false;
              break;
            }
          }
          if (ok) normal_[k].push_back(std::move(v));
        }
      // Extending an increasing list letter by letter keeps it increasing.
      for (std::size_t i = 0; i < normal_[k].size(); ++i) index_[k].emplace(normal_[k][i], i);
    }
  }

  std::size_t alphabet_ = 0;
  std::size_t bound_ = 0;
  std::vector<NcPoly> elements_;
  std::vector<Word> leading_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<std::size_t> lengths_;
  std::vector<std::vector<Word>> normal_;
  std::vector<std::unordered_map<Word, std::size_t, WordHash>> index_;
};

/// Degree-by-degree completion of a homogeneous generating set. At degree d
/// every ambiguity of total length d only involves elements of lower degree,
/// so once degree d is processed nothing of degree <= d is missing.
inline TruncatedGB complete_gb(const std::vector<NcPoly>& relations, std::size_t bound,
                               std::size_t alphabet) {
  TruncatedGB gb;
  gb.alphabet_ = alphabet;
  gb.bound_ = bound;
  for (const auto& r : relations) {
    if (r.alphabet() != alphabet) throw AlgebraError("relation over the wrong alphabet");
    if (!r.is_homogeneous()) throw AlgebraError("relations must be homogeneous");
    if (!r.is_zero() && r.homogeneous_degree() == 0)
      throw AlgebraError("nonzero constant relation");
  }
  for (std::size_t d = 1; d <= bound; ++d) {
    std::vector<NcPoly> candidates;
    for (const auto& r : relations)
      if (!r.is_zero() && r.homogeneous_degree() == d) candidates.push_back(r);
    const std::size_t existing = gb.elements_.size();
    for (std::size_t g = 0; g < existing; ++g)
      for (std::size_t h = 0; h < existing; ++h)
        for (auto& s : gb.overlap_polys(g, h, d, d)) candidates.push_back(std::move(s));
    for (const auto& c : candidates) {
      NcPoly red = gb.reduce_unchecked(c);
      if (!red.is_zero()) gb.insert(std::move(red));
    }
  }
  gb.enumerate_normal_words();
  return gb;
}

inline NcPoly normal_form(const NcPoly& p, const TruncatedGB& gb) { return gb.normal_form(p); }

}  // namespace cy3
