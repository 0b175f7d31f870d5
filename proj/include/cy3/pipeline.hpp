#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coherence.hpp"
#include "derivation.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "presentation_file.hpp"
#include "quadratic.hpp"
#include "resolution.hpp"
#include "superpotential.hpp"
#include "yoneda.hpp"

namespace cy3 {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, skipped };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  Status status = Status::skipped;
  std::string reason;  ///< why it failed or was skipped
  Json witness = Json::object();
};

/// Which optional stages run. Validation and the delta(r) stages always do.
struct Selection {
  bool ore = true;
  bool superpotential = true;
  bool yoneda = true;
  bool trivial_extension = true;
  bool hilbert = true;
  bool resolution = true;
  bool coherence = true;
  bool beilinson = true;

  static Selection everything() { return {}; }
  static Selection only_validation() { return {true, false, false, false, false, false, false, false}; }
};

struct PipelineOptions {
  std::optional<std::size_t> max_degree;  ///< overrides the file's N
  Selection selection;
};

struct Report {
  std::vector<std::string> generators;
  std::size_t max_degree = 0;
  std::vector<CheckResult> checks;
  std::optional<double> seconds;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// N used when neither the command line nor the file gives one.
inline std::size_t default_max_degree(std::size_t n) { return n <= 4 ? 6 : 4; }

namespace detail {

inline std::string q(const Rational& x) { return to_string(x); }

inline Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(q(x));
  return a;
}

inline Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(q(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

/// Polynomial as its rendering plus an explicit word -> coefficient list.
inline Json poly_json(const NcPoly& p, const GeneratorSet& gens) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back(Json::array({gens.format_word(w), q(c)}));
  return Json{{"text", format_poly(p, gens)}, {"terms", std::move(terms)}};
}

inline Json ints_json(const std::vector<std::int64_t>& v) { return Json(v); }

inline Json resolution_json(const ResolutionReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json exact = Json::array();
    for (bool e : d.exact) exact.push_back(e);
    degrees.push_back(Json{{"degree", d.degree},
                           {"dims", d.dims},
                           {"rank_in", d.in_rank},
                           {"rank_out", d.out_rank},
                           {"exact", std::move(exact)},
                           {"composites_zero", d.composites_zero},
                           {"euler", d.euler}});
  }
  return Json{{"complex", r.name}, {"degrees", std::move(degrees)}};
}

class Recorder {
public:
  explicit Recorder(Report& r) : report_(r) {}

  CheckResult& add(std::string name, bool ok, Json witness = Json::object(), std::string reason = {}) {
    CheckResult c{std::move(name), ok ? Status::pass : Status::fail, ok ? std::string{} : std::move(reason),
                  std::move(witness)};
    if (!ok && c.reason.empty()) c.reason = "check returned false";
    report_.checks.push_back(std::move(c));
    return report_.checks.back();
  }
  void skip(std::string name, std::string reason, Json witness = Json::object()) {
    report_.checks.push_back({std::move(name), Status::skipped, std::move(reason), std::move(witness)});
  }

private:
  Report& report_;
};

}  // namespace detail

/// Runs, in order: validation, delta(r) checks, Ore presentation,
/// superpotential (cyclicity, Jacobian), Yoneda CY certificate, trivial
/// extension comparison, Groebner basis and Hilbert series, resolutions,
/// coherence witnesses and the Beilinson grid. A failed stage skips the
/// stages that depend on it, and each skip names the cause.
inline Report run_pipeline(const PresentationFile& file, const PipelineOptions& opts = {}) {
  const auto started = std::chrono::steady_clock::now();
  const Selection& sel = opts.selection;
  const std::size_t n = file.gens.size();
  Report rep;
  rep.generators = file.gens.names();
  rep.max_degree = opts.max_degree ? *opts.max_degree
                                   : file.max_degree.value_or(default_max_degree(n));
  const std::size_t N = rep.max_degree;
  detail::Recorder rec(rep);
  auto finish = [&]() -> Report {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
  };
  auto skip_all = [&](std::initializer_list<std::pair<bool, const char*>> stages, const std::string& why) {
    for (const auto& [on, name] : stages)
      if (on) rec.skip(name, why);
  };
  const std::initializer_list<std::pair<bool, const char*>> after_ore = {
      {sel.superpotential, "superpotential"},
      {sel.superpotential, "cyclicity"},
      {sel.superpotential, "jacobian"},
      {sel.yoneda, "cy_certificate"},
      {sel.trivial_extension, "trivial_extension"},
      {sel.hilbert, "hilbert_B"},
      {sel.hilbert, "hilbert_A"},
      {sel.resolution, "resolution_A"},
      {sel.resolution, "base_change_sequence"},
      {sel.resolution, "resolution_B"},
      {sel.resolution, "chain_map"},
      {sel.coherence, "coherence"},
      {sel.beilinson, "beilinson"}};

  // Validation
  AntiSymMatrix m(file.matrix);
  const bool even = n % 2 == 0;
  const bool invertible = m.invertible();
  std::string why;
  if (!even) why = "n = " + std::to_string(n) + " is odd, so no anti-symmetric matrix is invertible";
  else if (!invertible) why = "matrix has rank " + std::to_string(m.rank()) + " < " + std::to_string(n);
  rec.add("validation", even && invertible,
          Json{{"n", n}, {"rank", m.rank()}, {"matrix", detail::matrix_json(file.matrix)}}, why);
  if (!(even && invertible)) {
    skip_all({{true, "delta_r_in_ideal"}, {true, "delta_r_zero"}, {sel.ore, "ore_presentation"}},
             "validation failed");
    skip_all(after_ore, "validation failed");
    return finish();
  }
  QuadraticPresentation pres = relation_from_matrix(m, file.gens);

  // delta(r)
  NcPoly dr = extend_derivation(file.derivation, pres.relation);
  IdealMembership mem = check_delta_r_in_ideal(file.derivation, pres);
  {
    Json w{{"r", detail::poly_json(pres.relation, file.gens)},
           {"delta_r", detail::poly_json(dr, file.gens)}};
    if (mem.member()) {
      w["certificate"] = Json{{"left", detail::rationals_json(mem.certificate->left)},
                              {"right", detail::rationals_json(mem.certificate->right)}};
    } else {
      Json ob = Json::array();
      for (const auto& [word, c] : mem.obstruction)
        ob.push_back(Json::array({file.gens.format_word(word), detail::q(c)}));
      w["obstruction"] = std::move(ob);
    }
    rec.add("delta_r_in_ideal", mem.member(), std::move(w), "delta(r) is not in <r>");
  }
  rec.add("delta_r_zero", dr.is_zero(), Json{{"delta_r", detail::poly_json(dr, file.gens)}},
          "delta(r) = " + format_poly(dr, file.gens) + " != 0");
  if (!dr.is_zero()) {
    if (sel.ore) rec.skip("ore_presentation", "delta(r) != 0");
    skip_all(after_ore, "delta(r) != 0");
    return finish();
  }

  OrePresentation op = ore_presentation(pres, file.derivation, file.z_name);
  const GeneratorSet& gh = op.gens_hat;
  if (sel.ore) {
    Json rels = Json::array();
    for (const auto& r : op.relations) rels.push_back(detail::poly_json(r, gh));
    rec.add("ore_presentation", detail::rank_deg2(op.relations, op.alphabet()) == n + 1,
            Json{{"relations", std::move(rels)}, {"rank", detail::rank_deg2(op.relations, op.alphabet())}});
  }

  if (sel.superpotential) {
    Superpotential s = build_superpotential(op);
    rec.add("superpotential", rewritten_form_check(op, s),
            Json{{"w", detail::poly_json(s.w, gh)}, {"term_count", s.w.term_count()},
                 {"rewritten_form", rewritten_form_check(op, s)}},
            "w differs from -r z + sum m_ji r_i x_j");
    Json cyc = Json::array();
    bool all_cyclic = true;
    for (std::size_t a = 0; a < op.alphabet(); ++a) {
      NcPoly l = apply_left_functional(a, s.w), r = apply_right_functional(s.w, a);
      all_cyclic = all_cyclic && l == r;
      cyc.push_back(Json{{"functional", gh.name(a) + "*"}, {"left", format_poly(l, gh)},
                         {"right", format_poly(r, gh)}, {"equal", l == r}});
    }
    rec.add("cyclicity", all_cyclic, Json{{"functionals", std::move(cyc)}}, "[aw] != [wa] for some a");
    auto jac = compare_jacobian_span(op, s);
    Json partials = Json::array();
    for (std::size_t a = 0; a < op.alphabet(); ++a)
      partials.push_back(Json{{"variable", gh.name(a)}, {"partial", detail::poly_json(cyclic_partial(s, a), gh)}});
    rec.add("jacobian", jac.equal(),
            Json{{"rank_partials", jac.rank_partials}, {"rank_relations", jac.rank_relations},
                 {"rank_union", jac.rank_union}, {"partials", std::move(partials)}},
            "span of cyclic partials differs from span of relations");
  }

  if (sel.yoneda) {
    auto sym = graded_symmetry(m.matrix(), file.derivation);
    Matrix pairing = e3_pairing(m.matrix(), file.derivation);
    std::size_t pr = rank(pairing);
    Json w{{"graded_symmetric", sym.symmetric}, {"pairing", detail::matrix_json(pairing)},
           {"pairing_rank", pr}, {"e_dims", yoneda_dims(n)}};
    if (sym.counterexample)
      w["counterexample"] = Json::array({sym.counterexample->first, sym.counterexample->second});
    rec.add("cy_certificate", sym.symmetric && pr == n + 1, std::move(w),
            !sym.symmetric ? "E(B) is not graded symmetric" : "E^1 x E^2 -> E^3 pairing is degenerate");
  }

  if (sel.trivial_extension) {
    auto te = trivial_extension_check(m.matrix(), file.derivation);
    auto sq = nonzero_degree1_square(file.derivation);
    Json w{{"coincides", te.coincides}};
    if (te.mismatch)
      w["mismatch"] = Json{{"left", {te.mismatch->first.first, te.mismatch->first.second}},
                           {"right", {te.mismatch->second.first, te.mismatch->second.second}}};
    // A nonzero square in E^1 rules out any graded isomorphism, not just equality.
    w["isomorphism_excluded"] = sq.has_value();
    if (sq) w["nonzero_square"] = detail::rationals_json(*sq);
    rec.add("trivial_extension", te.coincides, std::move(w),
            sq ? "E(B) has a degree-1 element with nonzero square; the trivial extension has none"
               : "Yoneda product differs from the trivial-extension product");
  }

  const bool need_gb = sel.hilbert || sel.resolution || sel.beilinson;
  std::optional<TruncatedGB> gb_b, gb_a;
  if (need_gb) {
    gb_b = complete_gb(op.relations, N, op.alphabet());
    gb_a = complete_gb({pres.relation}, N, n);
  }

  if (sel.hilbert) {
    auto h = hilbert_coeffs(*gb_b);
    auto den = ore_hilbert_denominator(n);
    auto expected = series_expand({1}, den, N + 1);
    Json w{{"coeffs", h.coeffs}, {"expected", expected}, {"denominator", den},
           {"gb_size", gb_b->elements().size()}, {"overlaps_resolve", gb_b->overlaps_resolve()},
           {"inter_reduced", gb_b->inter_reduced()}};
    bool ok = closed_form_check(h, {1}, den) && gb_b->overlaps_resolve() && gb_b->inter_reduced();
    rec.add("hilbert_B", ok, std::move(w), "dim B_k differs from 1/(1-(n+1)t+(n+1)t^2-t^3)");
    auto ha = hilbert_coeffs(*gb_a);
    auto dena = quadratic_hilbert_denominator(n);
    rec.add("hilbert_A", closed_form_check(ha, {1}, dena),
            Json{{"coeffs", ha.coeffs}, {"expected", series_expand({1}, dena, N + 1)}, {"denominator", dena}},
            "dim A_k differs from 1/(1-nt+t^2)");
  }

  if (sel.resolution) {
    auto ra = resolution_exactness_check(pres, *gb_a, N);
    rec.add("resolution_A", ra.ok(), detail::resolution_json(ra), "resolution of k over A is not exact");
    auto seq = base_change_sequence_check(op, *gb_b, N);
    Json sw = detail::resolution_json(seq.complex);
    sw["cokernel_dims"] = seq.cokernel_dims;
    rec.add("base_change_sequence", seq.ok(), std::move(sw), "B (x)_A (resolution of A) is not as expected");
    auto rb = mapping_cone_exactness_check(op, *gb_b, N);
    rec.add("resolution_B", rb.ok(), detail::resolution_json(rb), "mapping cone is not a resolution of k");
    auto cm = lemr1_commutation_check(op, *gb_b, N);
    rec.add("chain_map", cm.commutes(),
            Json{{"left_square", cm.left_square}, {"right_square", cm.right_square}, {"through_degree", N}},
            "chain map squares do not commute");
  }

  if (sel.coherence) {
    if (n == 2) {
      rec.skip("coherence", "Noetherian case: n = 2, so B is Noetherian and hence coherent",
               Json{{"noetherian", true}});
    } else {
      Json w = Json::object();
      OrePresentation target = op;
      if (!is_standard(m)) {
        auto [moved, p] = standardize(op);
        target = std::move(moved);
        w["standardized_by"] = detail::matrix_json(p);
      }
      CoherenceReport cr = coherence_witness_check(target, N);
      if (!cr.precondition.holds()) {
        w["precondition"] = cr.precondition.failure;
        rec.add("coherence", false, std::move(w), "precondition fails: " + cr.precondition.failure);
      } else {
        if (cr.relabeling) w["relabeled_by"] = detail::matrix_json(*cr.relabeling);
        w["quotient_dims"] = cr.quotient_dims;
        w["xn_z_commute"] = cr.xn_z_commute;
        w["hilbert_B"] = cr.hilbert_b;
        w["H_I"] = cr.ideal_series;
        w["H_B_times_H_W"] = cr.free_series;
        w["relation_reduces"] = cr.relation_reduces;
        w["x1xn_in_BL"] = cr.x1xn_in_BL;
        rec.add("coherence", cr.passes(), std::move(w), "a coherence witness fails");
      }
    }
  }

  if (sel.beilinson) {
    if (N < 2) {
      rec.skip("beilinson", "needs N >= 2");
    } else {
      auto grid = beilinson_dims(hilbert_coeffs(*gb_b));
      Json g = Json::array();
      for (const auto& row : grid) g.push_back(Json(row));
      rec.add("beilinson", true, Json{{"grid", std::move(g)}, {"total", beilinson_total(grid)}});
    }
  }
  return finish();
}

/// Deterministic structured form; timing only when asked for.
inline Json report_json(const Report& rep, bool with_timing = false) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json j{{"name", c.name}, {"status", std::string(to_string(c.status))}};
    if (!c.reason.empty()) j["reason"] = c.reason;
    j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  Json out{{"generators", rep.generators},
           {"max_degree", rep.max_degree},
           {"passed", rep.passed()},
           {"checks", std::move(checks)}};
  if (with_timing && rep.seconds) out["seconds"] = *rep.seconds;
  return out;
}

/// One line per check plus the tables a reader usually wants.
inline std::string report_text(const Report& rep, bool with_timing = false) {
  std::string out;
  for (const auto& c : rep.checks) {
    std::string line = std::string(to_string(c.status));
    line.resize(8, ' ');
    out += line + c.name;
    if (!c.reason.empty()) out += "  (" + c.reason + ")";
    out += "\n";
    const Json& w = c.witness;
    if (c.name == "superpotential" && w.contains("w"))
      out += "        w = " + w["w"]["text"].get<std::string>() + "\n";
    if ((c.name == "hilbert_B" || c.name == "hilbert_A") && w.contains("coeffs"))
      out += "        dims " + w["coeffs"].dump() + "\n";
    if (c.name == "coherence" && w.contains("quotient_dims"))
      out += "        B/I dims " + w["quotient_dims"].dump() + "\n";
    if (c.name == "beilinson" && w.contains("grid"))
      out += "        grid " + w["grid"].dump() + ", total " + w["total"].dump() + "\n";
  }
  out += rep.passed() ? "all selected checks pass\n" : "some checks fail\n";
  if (with_timing && rep.seconds) out += "time " + std::to_string(*rep.seconds) + " s\n";
  return out;
}

}  // namespace cy3
