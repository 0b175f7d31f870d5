#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"

namespace cy3 {

/// Integer polynomial / truncated power series, constant term first.
using IntPoly = std::vector<std::int64_t>;

struct HilbertData {
  std::vector<std::int64_t> coeffs;  ///< h_0 .. h_N
  std::optional<std::pair<IntPoly, IntPoly>> closed_form;
};

/// First `terms` coefficients of num/den; den[0] must be +-1.
inline IntPoly series_expand(const IntPoly& num, const IntPoly& den, std::size_t terms) {
  if (den.empty() || (den[0] != 1 && den[0] != -1))
    throw AlgebraError("series denominator must have constant term +-1");
  IntPoly out(terms, 0);
  for (std::size_t k = 0; k < terms; ++k) {
    std::int64_t acc = k < num.size() ? num[k] : 0;
    for (std::size_t j = 1; j < den.size() && j <= k; ++j) acc -= den[j] * out[k - j];
    out[k] = acc * den[0];
  }
  return out;
}

/// Truncated product of two series.
inline IntPoly series_mul(const IntPoly& a, const IntPoly& b, std::size_t terms) {
  IntPoly out(terms, 0);
  for (std::size_t i = 0; i < a.size() && i < terms; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// 1 - (n+1) t + (n+1) t^2 - t^3
inline IntPoly ore_hilbert_denominator(std::size_t n) {
  auto m = static_cast<std::int64_t>(n + 1);
  return {1, -m, m, -1};
}
/// 1 - n t + t^2
inline IntPoly quadratic_hilbert_denominator(std::size_t n) {
  return {1, -static_cast<std::int64_t>(n), 1};
}

/// h_k = number of normal words of degree k, k <= N.
inline HilbertData hilbert_coeffs(const TruncatedGB& gb) {
  HilbertData h;
  for (std::size_t k = 0; k <= gb.bound(); ++k)
    h.coeffs.push_back(static_cast<std::int64_t>(gb.dim(k)));
  return h;
}

inline bool closed_form_check(const HilbertData& h, const IntPoly& num, const IntPoly& den) {
  return series_expand(num, den, h.coeffs.size()) == h.coeffs;
}

/// Component dimensions of the 3x3 upper-triangular algebra with diagonal k
/// and blocks B_1, B_2, B_1.
inline std::array<std::array<std::int64_t, 3>, 3> beilinson_dims(const HilbertData& h) {
  if (h.coeffs.size() < 3) throw AlgebraError("Beilinson grid needs h_0, h_1, h_2");
  const auto h1 = h.coeffs[1], h2 = h.coeffs[2];
  return {{{1, h1, h2}, {0, 1, h1}, {0, 0, 1}}};
}

inline std::int64_t beilinson_total(const std::array<std::array<std::int64_t, 3>, 3>& grid) {
  std::int64_t s = 0;
  for (const auto& row : grid)
    for (auto x : row) s += x;
  return s;
}

}  // namespace cy3
