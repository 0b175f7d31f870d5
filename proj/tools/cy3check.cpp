// cy3check: verify graded 3-Calabi-Yau Ore extensions described in .cy3 files.
//
//   cy3check all fixtures/smith.cy3
//   cy3check hilbert fixtures/twogen.cy3 --max-degree 8 --param a=1/2
//   cy3check reduce-standard fixtures/smith.cy3 > standard.cy3
//
// Exit status: 0 when every selected check passes, 1 when one fails,
// 2 on unreadable or invalid input.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cy3/pipeline.hpp"

namespace {

struct Common {
  std::string input;
  std::optional<std::size_t> max_degree;
  std::string output;
  std::string format = "text";
  std::vector<std::string> params;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("file", c.input, ".cy3 presentation")->required();
  cmd->add_option("-N,--max-degree", c.max_degree, "degree bound for Groebner/Hilbert/resolution checks");
  cmd->add_option("-o,--output", c.output, "write the report here instead of standard output");
  cmd->add_option("--format", c.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--param", c.params, "parameter value, name=p/q (repeatable)");
  cmd->add_flag("--timing", c.timing, "include wall-clock time in the report");
}

std::map<std::string, cy3::Rational> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, cy3::Rational> out;
  for (const auto& p : raw) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw cy3::ParseError("--param expects name=value, got '" + p + "'");
    out[p.substr(0, eq)] = cy3::parse_rational(p.substr(eq + 1));
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw cy3::ParseError("cannot write '" + path + "'");
  f << text;
}

std::string rational_row(const cy3::Matrix& m, std::size_t i) {
  std::string s;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::string e = cy3::to_string(m(i, j));
    if (e.size() < 3) e.insert(0, 3 - e.size(), ' ');
    s += (j ? " " : "") + e;
  }
  return s;
}

/// The presentation rewritten in coordinates where the matrix is standard.
std::string standard_form_output(const cy3::PresentationFile& f, const Common& c) {
  cy3::AntiSymMatrix m(f.matrix);
  cy3::Matrix p = cy3::reduce_to_standard(m);
  cy3::AntiSymMatrix ms = cy3::congruence(m, p);
  cy3::DerivationSpec d = cy3::transport_derivation(f.derivation, p);
  const std::size_t n = f.gens.size();
  if (c.format == "structured") {
    cy3::Json entries = cy3::Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
          if (d.coeff(i, s, t) != 0)
            entries.push_back(cy3::Json::array({i + 1, s + 1, t + 1, cy3::to_string(d.coeff(i, s, t))}));
    cy3::Json out{{"P", cy3::detail::matrix_json(p)},
                  {"matrix", cy3::detail::matrix_json(ms.matrix())},
                  {"derivation", std::move(entries)}};
    return out.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "# coordinates x = P y with P =\n";
  for (std::size_t i = 0; i < n; ++i) s << "#   " << rational_row(p, i) << "\n";
  s << "\nGENERATORS\n";
  for (std::size_t i = 0; i < n; ++i) s << (i ? " " : "") << f.gens.name(i);
  s << "\n\nMATRIX\n";
  for (std::size_t i = 0; i < n; ++i) s << rational_row(ms.matrix(), i) << "\n";
  s << "\nDERIVATION\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (d.coeff(i, a, b) != 0)
          s << i + 1 << " " << a + 1 << " " << b + 1 << " " << cy3::to_string(d.coeff(i, a, b)) << "\n";
  s << "\nOPTIONS\nz=" << f.z_name << "\n";
  if (f.max_degree) s << "N=" << *f.max_degree << "\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify graded 3-Calabi-Yau Ore extensions of 2-Calabi-Yau algebras"};
  app.require_subcommand(1);
  Common common;
  struct Verb {
    const char* name;
    const char* help;
    cy3::Selection selection;
  };
  cy3::Selection none = cy3::Selection::only_validation();
  auto with = [&](auto setter) {
    cy3::Selection s = none;
    setter(s);
    return s;
  };
  const std::vector<Verb> verbs = {
      {"validate", "check the matrix, delta(r) and the Ore presentation", none},
      {"superpotential", "build w and check cyclicity and the Jacobian presentation",
       with([](cy3::Selection& s) { s.superpotential = true; })},
      {"hilbert", "Groebner basis, Hilbert series and Beilinson grid",
       with([](cy3::Selection& s) { s.hilbert = s.beilinson = true; })},
      {"cy-check", "Yoneda graded symmetry, resolutions and the chain map",
       with([](cy3::Selection& s) { s.yoneda = s.resolution = true; })},
      {"coherence", "coherence witnesses (or the Noetherian case for n = 2)",
       with([](cy3::Selection& s) { s.coherence = true; })},
      {"all", "every check", cy3::Selection::everything()},
  };
  for (const auto& v : verbs) add_common(app.add_subcommand(v.name, v.help), common);
  add_common(app.add_subcommand("reduce-standard", "rewrite the presentation with a standard matrix"),
             common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cy3::PresentationFile file = cy3::parse_presentation(common.input, parse_params(common.params));
    if (app.got_subcommand("reduce-standard")) {
      emit(standard_form_output(file, common), common.output);
      return 0;
    }
    cy3::PipelineOptions opts;
    opts.max_degree = common.max_degree;
    for (const auto& v : verbs)
      if (app.got_subcommand(v.name)) opts.selection = v.selection;
    cy3::Report rep = cy3::run_pipeline(file, opts);
    if (common.format == "structured")
      emit(cy3::report_json(rep, common.timing).dump(2) + "\n", common.output);
    else
      emit(cy3::report_text(rep, common.timing), common.output);
    return rep.passed() ? 0 : 1;
  } catch (const cy3::ParseError& e) {
    std::cerr << "cy3check: " << common.input << ": " << e.what() << "\n";
    return 2;
  } catch (const cy3::AlgebraError& e) {
    std::cerr << "cy3check: " << common.input << ": " << e.what() << "\n";
    return 2;
  }
}
