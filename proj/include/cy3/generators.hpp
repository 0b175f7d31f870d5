#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace cy3 {

/// Ordered, degree-one generator labels. The order fixes the monomial order
/// for every computation done over this alphabet.
class GeneratorSet {
public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::vector<std::string> names,
                        std::optional<std::size_t> z_index = std::nullopt)
      : names_(std::move(names)), z_index_(z_index) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw AlgebraError("empty generator label");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw AlgebraError("duplicate generator label '" + names_[i] + "'");
    }
    if (names_.size() > 250) throw AlgebraError("too many generators");
    if (z_index_ && *z_index_ >= names_.size())
      throw AlgebraError("Ore variable index out of range");
  }

  /// x_1, ..., x_n.
  static GeneratorSet numbered(std::size_t n, const std::string& stem = "x") {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return GeneratorSet(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> z_index() const noexcept { return z_index_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == label) return i;
    return std::nullopt;
  }

  /// V-hat = V + kz, with z appended after the existing generators so that
  /// it is the greatest letter.
  GeneratorSet with_ore_variable(const std::string& z_name = "z") const {
    if (z_index_) throw AlgebraError("alphabet already has an Ore variable");
    auto names = names_;
    names.push_back(z_name);
    return GeneratorSet(std::move(names), names_.size());
  }

  /// Single-character labels are juxtaposed ("xyz"), longer ones joined by '*'.
  std::string format_word(const Word& w) const {
    if (w.empty()) return "1";
    bool compact = true;
    for (std::size_t i = 0; i < w.size(); ++i) compact = compact && name(w[i]).size() == 1;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i > 0) out += '*';
      out += name(w[i]);
    }
    return out;
  }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
  std::vector<std::string> names_;
  std::optional<std::size_t> z_index_;
};

}  // namespace cy3
