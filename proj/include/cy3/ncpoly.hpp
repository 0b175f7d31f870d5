#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "generators.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace cy3 {

/// Element of the tensor algebra T(V) over an alphabet of fixed size:
/// a finite map Word -> Rational with no stored zeros.
class NcPoly {
public:
  using Terms = std::map<Word, Rational>;

  NcPoly() = default;
  explicit NcPoly(std::size_t alphabet) : alphabet_(alphabet) {}

  static NcPoly constant(std::size_t alphabet, const Rational& c) {
    NcPoly p(alphabet);
    p.add_term(Word{}, c);
    return p;
  }
  static NcPoly monomial(std::size_t alphabet, const Word& w, const Rational& c = 1) {
    NcPoly p(alphabet);
    p.add_term(w, c);
    return p;
  }
  static NcPoly generator(std::size_t alphabet, std::size_t i) {
    return monomial(alphabet, Word::letter(i));
  }

  std::size_t alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    if (!w.empty() && w.max_letter() >= alphabet_)
      throw AlgebraError("word uses a letter outside the alphabet");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient_of(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Common word length when every stored word has it; nullopt when
  /// inhomogeneous. The zero polynomial reports nullopt as well.
  std::optional<std::size_t> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t d = terms_.begin()->first.size();
    if (terms_.rbegin()->first.size() != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

  std::size_t max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

  /// Largest word under the degree-lexicographic order.
  const std::pair<const Word, Rational>& leading_term() const {
    if (terms_.empty()) throw AlgebraError("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  NcPoly& operator+=(const NcPoly& rhs) {
    check_alphabet(rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& rhs) {
    check_alphabet(rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
  }
  NcPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  /// this += s * left * rhs * right, without forming temporaries.
  void add_scaled_product(const Rational& s, const Word& left, const NcPoly& rhs,
                          const Word& right) {
    check_alphabet(rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(left + w + right, s * c);
  }

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
  friend NcPoly operator*(const Rational& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(NcPoly a, const Rational& s) { return a *= s; }

  /// Concatenation product extended bilinearly.
  friend NcPoly operator*(const NcPoly& p, const NcPoly& q) {
    p.check_alphabet(q);
    NcPoly out(p.alphabet_);
    for (const auto& [u, a] : p.terms_)
      for (const auto& [v, b] : q.terms_) out.add_term(u + v, a * b);
    return out;
  }

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  void check_alphabet(const NcPoly& other) const {
    if (alphabet_ != other.alphabet_)
      throw AlgebraError("alphabet mismatch: " + std::to_string(alphabet_) + " vs " +
                         std::to_string(other.alphabet_) + " generators");
  }

private:
  std::size_t alphabet_ = 0;
  Terms terms_;
};

/// Same words over a larger alphabet (e.g. T(V) inside T(V-hat)).
inline NcPoly widen(const NcPoly& p, std::size_t alphabet) {
  if (alphabet < p.alphabet()) throw AlgebraError("cannot narrow an alphabet");
  NcPoly out(alphabet);
  for (const auto& [w, c] : p.terms()) out.add_term(w, c);
  return out;
}

inline NcPoly nc_mul(const NcPoly& p, const NcPoly& q) { return p * q; }

inline Rational coefficient_of(const NcPoly& p, const Word& w) { return p.coefficient_of(w); }

namespace detail {
inline std::size_t functional_degree(const NcPoly& p) {
  if (p.is_zero()) return 1;
  auto d = p.homogeneous_degree();
  if (!d) throw AlgebraError("functional applied to an inhomogeneous polynomial");
  if (*d == 0) throw AlgebraError("functional applied to a degree-0 polynomial");
  return *d;
}
}  // namespace detail

/// [alpha p] = (alpha (x) 1 (x) ... )(p) for the coordinate functional dual
/// to generator `alpha`: keeps words starting with that letter and drops it.
inline NcPoly apply_left_functional(std::size_t alpha, const NcPoly& p) {
  detail::functional_degree(p);
  if (alpha >= p.alphabet()) throw AlgebraError("dual index out of range");
  NcPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms())
    if (w.front() == alpha) out.add_term(w.subword(1), c);
  return out;
}

/// [p alpha]: mirror image on trailing letters.
inline NcPoly apply_right_functional(const NcPoly& p, std::size_t alpha) {
  detail::functional_degree(p);
  if (alpha >= p.alphabet()) throw AlgebraError("dual index out of range");
  NcPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms())
    if (w.back() == alpha) out.add_term(w.subword(0, w.size() - 1), c);
  return out;
}

/// Human-readable rendering in increasing word order, e.g. "xy - yx".
inline std::string format_poly(const NcPoly& p, const GeneratorSet& gens) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1 || w.empty()) {
      out += to_string(mag);
      if (!w.empty()) out += "*";
    }
    if (!w.empty()) out += gens.format_word(w);
  }
  return out;
}

/// Parses sums of terms like "yxz - 2/3 x^2y + x1*x6". Single-character
/// labels may be juxtaposed; '^k' repeats the preceding generator.
inline NcPoly parse_poly(std::string_view text, const GeneratorSet& gens) {
  NcPoly out(gens.size());
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("polynomial '" + std::string(text) + "' at column " +
                     std::to_string(i + 1) + ": " + what);
  };
  skip_ws();
  if (i < text.size() && text[i] == '0') {
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == text.size()) return out;
  }
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    const bool has_coeff = i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
    if (has_coeff) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
        ++i;
      coeff = parse_rational(text.substr(start, i - start));
      skip_ws();
      if (i < text.size() && text[i] == '*') ++i;
      skip_ws();
    }
    Word w;
    while (i < text.size()) {
      if (text[i] == '*') {
        ++i;
        continue;
      }
      if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_') break;
      // Longest label that matches at this position.
      std::size_t best = 0, best_len = 0;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto& nm = gens.name(g);
        if (nm.size() > best_len && text.substr(i, nm.size()) == nm) {
          best = g;
          best_len = nm.size();
        }
      }
      if (best_len == 0) fail("unknown generator");
      i += best_len;
      std::size_t power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail("missing exponent");
        power = std::stoul(std::string(text.substr(start, i - start)));
      }
      for (std::size_t k = 0; k < power; ++k) w += Word::letter(best);
    }
    if (!has_coeff && w.empty()) fail("expected a term");
    out.add_term(w, sign * coeff);
  }
  return out;
}

}  // namespace cy3
