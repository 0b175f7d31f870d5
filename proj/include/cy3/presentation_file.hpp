#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "derivation_spec.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace cy3 {

/// Malformed input, located at 1-based line and column of the source.
class PresentationError : public ParseError {
public:
  PresentationError(std::size_t line, std::size_t column, const std::string& what)
      : ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   what),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_, column_;
};

/// In-memory form of a .cy3 file.
///
///   GENERATORS      x y
///   MATRIX          one row per line, entries p or p/q
///   DERIVATION      lines "i s t value": coefficient of x_s x_t in delta(x_i), 1-based;
///                   value is a rational, a parameter name, or c*name
///   OPTIONS         N=<int>, z=<label>, <parameter>=<rational>
///
/// '#' starts a comment. Parameters may be overridden at load time.
struct PresentationFile {
  GeneratorSet gens;
  Matrix matrix;
  DerivationSpec derivation;
  std::optional<std::size_t> max_degree;
  std::string z_name = "z";
  std::map<std::string, Rational> parameters;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

/// A coefficient that may mention a parameter: rational, [-]name or rational*name.
struct Coefficient {
  Rational factor = 1;
  std::optional<std::string> parameter;
};

inline Coefficient parse_coefficient(const Token& tok, std::size_t line) {
  std::string_view s = tok.text;
  Coefficient c;
  try {
    if (auto star = s.find('*'); star != std::string_view::npos) {
      c.factor = parse_rational(s.substr(0, star));
      c.parameter = std::string(s.substr(star + 1));
    } else if (is_identifier(s.front() == '-' ? s.substr(1) : s)) {
      c.factor = s.front() == '-' ? -1 : 1;
      c.parameter = std::string(s.front() == '-' ? s.substr(1) : s);
    } else {
      c.factor = parse_rational(s);
    }
  } catch (const ParseError& e) {
    throw PresentationError(line, tok.column, e.what());
  }
  if (c.parameter && !is_identifier(*c.parameter))
    throw PresentationError(line, tok.column, "bad parameter name '" + *c.parameter + "'");
  return c;
}

inline std::size_t parse_index(const Token& tok, std::size_t line, std::size_t n) {
  std::size_t v = 0;
  for (char ch : tok.text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || v > n)
      throw PresentationError(line, tok.column, "expected a generator index, got '" + tok.text + "'");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  if (v < 1 || v > n)
    throw PresentationError(line, tok.column,
                            "index " + tok.text + " out of range 1.." + std::to_string(n));
  return v - 1;
}

}  // namespace detail

/// Parses and validates a presentation. `overrides` replace (or supply)
/// parameter values declared under OPTIONS.
inline PresentationFile parse_presentation_text(std::string_view text,
                                                const std::map<std::string, Rational>& overrides = {}) {
  enum class Section { none, generators, matrix, derivation, options };
  Section section = Section::none;
  std::vector<std::string> names;
  std::size_t names_line = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> row_lines;
  struct RawEntry {
    std::size_t line;
    std::vector<detail::Token> toks;
  };
  std::vector<RawEntry> raw_entries;
  PresentationFile out;
  bool seen[5] = {false, false, false, false, false};

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = detail::tokenize(raw);
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      Section next = Section::none;
      if (toks[0].text == "GENERATORS") next = Section::generators;
      if (toks[0].text == "MATRIX") next = Section::matrix;
      if (toks[0].text == "DERIVATION") next = Section::derivation;
      if (toks[0].text == "OPTIONS") next = Section::options;
      if (next != Section::none) {
        if (seen[static_cast<int>(next)])
          throw PresentationError(line_no, toks[0].column, "duplicate section " + toks[0].text);
        seen[static_cast<int>(next)] = true;
        section = next;
        continue;
      }
    }
    switch (section) {
      case Section::none:
        throw PresentationError(line_no, toks[0].column, "content before the first section header");
      case Section::generators:
        if (!names.empty())
          throw PresentationError(line_no, toks[0].column, "generators must be listed on one line");
        for (const auto& t : toks) names.push_back(t.text);
        names_line = line_no;
        break;
      case Section::matrix: {
        std::vector<Rational> row;
        for (const auto& t : toks) {
          try {
            row.push_back(parse_rational(t.text));
          } catch (const ParseError& e) {
            throw PresentationError(line_no, t.column, e.what());
          }
        }
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
        break;
      }
      case Section::derivation:
        if (toks.size() != 4)
          throw PresentationError(line_no, toks[0].column,
                                  "derivation entries are 'i s t value', got " +
                                      std::to_string(toks.size()) + " fields");
        raw_entries.push_back({line_no, toks});
        break;
      case Section::options:
        for (const auto& t : toks) {
          auto eq = t.text.find('=');
          if (eq == std::string::npos || eq == 0 || eq + 1 == t.text.size())
            throw PresentationError(line_no, t.column, "options are key=value, got '" + t.text + "'");
          std::string key = t.text.substr(0, eq), value = t.text.substr(eq + 1);
          std::size_t vcol = t.column + eq + 1;
          if (key == "N") {
            std::size_t v = 0;
            for (char ch : value) {
              if (!std::isdigit(static_cast<unsigned char>(ch)) || v > 1000)
                throw PresentationError(line_no, vcol, "N must be a small non-negative integer");
              v = v * 10 + static_cast<std::size_t>(ch - '0');
            }
            out.max_degree = v;
          } else if (key == "z") {
            out.z_name = value;
          } else if (detail::is_identifier(key)) {
            try {
              out.parameters[key] = parse_rational(value);
            } catch (const ParseError& e) {
              throw PresentationError(line_no, vcol, e.what());
            }
          } else {
            throw PresentationError(line_no, t.column, "bad option name '" + key + "'");
          }
        }
        break;
    }
  }

  if (names.empty()) throw PresentationError(line_no + 1, 1, "missing GENERATORS section");
  try {
    out.gens = GeneratorSet(names);
    if (out.gens.index_of(out.z_name))
      throw AlgebraError("Ore variable '" + out.z_name + "' clashes with a generator");
    (void)out.gens.with_ore_variable(out.z_name);
  } catch (const AlgebraError& e) {
    throw PresentationError(names_line, 1, e.what());
  }
  const std::size_t n = names.size();

  if (rows.empty()) throw PresentationError(line_no + 1, 1, "missing MATRIX section");
  if (rows.size() != n)
    throw PresentationError(row_lines.back(), 1,
                            "matrix has " + std::to_string(rows.size()) + " rows, expected " +
                                std::to_string(n));
  out.matrix = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw PresentationError(row_lines[i], 1,
                              "row has " + std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = rows[i][j];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (out.matrix(i, j) != -out.matrix(j, i))
        throw PresentationError(row_lines[i], 1,
                                "anti-symmetry violated: m" + std::to_string(i + 1) +
                                    std::to_string(j + 1) + " != -m" + std::to_string(j + 1) +
                                    std::to_string(i + 1));

  for (const auto& [name, value] : overrides) out.parameters[name] = value;

  out.derivation = DerivationSpec(n);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> first_seen;
  for (const auto& e : raw_entries) {
    std::size_t i = detail::parse_index(e.toks[0], e.line, n);
    std::size_t s = detail::parse_index(e.toks[1], e.line, n);
    std::size_t t = detail::parse_index(e.toks[2], e.line, n);
    auto c = detail::parse_coefficient(e.toks[3], e.line);
    if (auto [it, fresh] = first_seen.emplace(std::tuple{i, s, t}, e.line); !fresh)
      throw PresentationError(e.line, e.toks[0].column,
                              "duplicate derivation entry (first given on line " +
                                  std::to_string(it->second) + ")");
    Rational v = c.factor;
    if (c.parameter) {
      auto p = out.parameters.find(*c.parameter);
      if (p == out.parameters.end())
        throw PresentationError(e.line, e.toks[3].column,
                                "parameter '" + *c.parameter + "' has no value");
      v *= p->second;
    }
    out.derivation.set(i, s, t, v);
  }
  return out;
}

inline PresentationFile parse_presentation(const std::string& path,
                                           const std::map<std::string, Rational>& overrides = {}) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_presentation_text(ss.str(), overrides);
}

}  // namespace cy3
