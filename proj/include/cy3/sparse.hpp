#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cy3 {

/// Sparse rational vector: (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// v + s * w
inline SparseVector axpy(const SparseVector& v, const Rational& s, const SparseVector& w) {
  SparseVector out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, s * w[j].second);
      ++j;
    } else {
      Rational x = v[i].second + s * w[j].second;
      if (x != 0) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Row echelon form built one vector at a time. Each stored row is monic in
/// its leading (smallest) index and leading indices are distinct, so a
/// vector lies in the span iff leading-index reduction sends it to zero.
class SparseEchelon {
public:
  SparseVector reduce(SparseVector v) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) break;
      Rational s = -v.front().second;
      v = axpy(v, s, it->second);
    }
    return v;
  }

  /// Returns true when v was independent of the rows already stored.
  bool insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rational inv = 1 / v.front().second;
    for (auto& [idx, x] : v) x *= inv;
    std::size_t lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const noexcept { return pivots_.size(); }

private:
  std::unordered_map<std::size_t, SparseVector> pivots_;
};

/// Exact rank of the span of the given vectors.
inline std::size_t sparse_rank(const std::vector<SparseVector>& vectors) {
  SparseEchelon e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace cy3
