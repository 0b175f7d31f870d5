#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cy3 {

using Letter = std::uint8_t;

/// Monomial of the tensor algebra: a finite sequence of generator indices.
/// Ordered degree-lexicographically (length first, then letter by letter
/// with smaller index smaller).
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) {
    for (Letter l : letters) letters_.push_back(static_cast<char>(l));
  }
  explicit Word(const std::vector<std::size_t>& letters) {
    for (std::size_t l : letters) letters_.push_back(static_cast<char>(l));
  }

  static Word letter(std::size_t index) {
    Word w;
    w.letters_.push_back(static_cast<char>(index));
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  std::size_t operator[](std::size_t i) const {
    return static_cast<unsigned char>(letters_[i]);
  }
  std::size_t front() const { return (*this)[0]; }
  std::size_t back() const { return (*this)[size() - 1]; }

  Word subword(std::size_t pos, std::size_t len = std::string::npos) const {
    Word w;
    w.letters_ = letters_.substr(pos, len);
    return w;
  }

  /// Position of the first occurrence of `pattern`, or npos.
  std::size_t find(const Word& pattern, std::size_t from = 0) const {
    return letters_.find(pattern.letters_, from);
  }
  bool starts_with(const Word& prefix) const {
    return letters_.compare(0, prefix.size(), prefix.letters_) == 0 &&
           prefix.size() <= size();
  }
  bool ends_with(const Word& suffix) const {
    return suffix.size() <= size() &&
           letters_.compare(size() - suffix.size(), suffix.size(), suffix.letters_) == 0;
  }

  Word& operator+=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  std::size_t max_letter() const {
    std::size_t m = 0;
    for (char c : letters_) m = std::max<std::size_t>(m, static_cast<unsigned char>(c));
    return m;
  }

  /// Raw letter bytes; stable key for hashing.
  const std::string& key() const noexcept { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    int c = a.letters_.compare(b.letters_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string>{}(w.key());
  }
};

/// All words of the given length over an alphabet of `n` letters, in
/// increasing order.
inline std::vector<Word> all_words(std::size_t n, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * n);
    for (const Word& w : out)
      for (std::size_t a = 0; a < n; ++a) next.push_back(w + Word::letter(a));
    out = std::move(next);
  }
  return out;
}

}  // namespace cy3
