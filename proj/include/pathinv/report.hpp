#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "pathinv/action.hpp"
#include "pathinv/invariants.hpp"
#include "pathinv/quiver.hpp"
#include "pathinv/reptype.hpp"

namespace pathinv {

struct WordRow {
  std::string word;
  std::string source, target;
  std::size_t degree = 0;
  std::size_t space_dim = 0;
  std::size_t dim_invariant = 0;
  std::size_t dim_composite = 0;
  std::size_t dim_irreducible = 0;
  std::size_t psi_lhs = 0, psi_rhs = 0;
  bool psi_ok = false;
};

struct GradedArrowRow {
  std::string source, target;
  std::size_t degree = 0;
  std::size_t multiplicity = 0;
};

struct OracleRow {
  std::string word;
  std::size_t kernel_dim = 0;
  std::string character_value;
  bool match = false;
};

struct ComponentRow {
  std::string type;
  std::string family;
  std::vector<std::string> vertices;
};

struct VerdictRow {
  std::string type;
  std::string summary;
  std::vector<ComponentRow> components;
};

struct ComputeReport {
  std::vector<std::string> vertices;
  std::string field_name;
  std::size_t max_degree = 0;
  std::size_t closure_cap = 0;
  std::size_t stabilization_window = 0;

  std::size_t closure_order = 0;
  bool closure_complete = false;

  std::vector<WordRow> words;
  std::vector<std::size_t> dimensions_by_degree;  // index 0 = number of vertices

  std::vector<GradedArrowRow> graded_arrows;
  bool stabilized = false;

  bool psi_all_ok = false;
  bool freeness_ok = false;
  std::string oracle_status;  // "checked" or "skipped (...)"
  std::vector<OracleRow> oracle_rows;

  VerdictRow original_verdict;
  VerdictRow invariant_verdict;
  std::optional<bool> preserved;
  std::optional<bool> cycle_structure_ok;
  std::optional<bool> cycle_degree_witness_ok;
  std::vector<std::string> caveats;
};

struct RunOptions {
  std::size_t max_degree = 1;
  std::size_t closure_cap = 1024;
  std::size_t stabilization_window = 2;
  std::string field_name = "rational";
  bool run_oracle = true;
};

namespace detail {

inline VerdictRow verdict_row(const GraphVerdict& v, const std::vector<std::string>& names) {
  VerdictRow row;
  row.type = rep_type_name(v.overall);
  row.summary = verdict_str(v);
  for (const ComponentVerdict& c : v.components) {
    ComponentRow cr;
    cr.type = rep_type_name(c.type);
    cr.family = c.family;
    for (int x : c.vertices) cr.vertices.push_back(names[static_cast<std::size_t>(x)]);
    row.components.push_back(std::move(cr));
  }
  return row;
}

}  // namespace detail

// Full pipeline: decompositions, invariant quiver, freeness and oracle
// checks, classification, preservation. The action must already validate.
// A ψ identity failure propagates as PsiIdentityViolation.
template <Field F>
ComputeReport run_compute(const HomogeneousAction<F>& a, const RunOptions& opt) {
  ComputeReport rep;
  const Quiver& q = a.quiver;
  rep.vertices = q.names();
  rep.field_name = opt.field_name;
  rep.max_degree = opt.max_degree;
  rep.closure_cap = opt.closure_cap;
  rep.stabilization_window = opt.stabilization_window;

  EngineResult<F> engine = invariant_quiver(a, opt.max_degree, opt.stabilization_window);
  rep.psi_all_ok = true;

  rep.dimensions_by_degree.assign(opt.max_degree + 1, 0);
  rep.dimensions_by_degree[0] = q.vertex_count();
  for (std::size_t n = 1; n <= opt.max_degree; ++n) {
    for (const PathWord& w : enumerate_paths_all(q, n)) {
      const InvariantDecomposition<F>& dec = engine.table.at(w);
      WordRow row;
      row.word = w.str(q);
      row.source = q.name(w.source());
      row.target = q.name(w.target());
      row.degree = n;
      row.space_dim = space_dim(q, w);
      row.dim_invariant = dec.invariant.dim();
      row.dim_composite = dec.composite.dim();
      row.dim_irreducible = dec.irreducible.dim();
      rep.dimensions_by_degree[n] += dec.invariant.dim();
      rep.words.push_back(std::move(row));
    }
  }
  for (std::size_t k = 0; k < engine.psi_rows.size(); ++k) {
    const PsiRow& pr = engine.psi_rows[k];
    WordRow& row = rep.words[k];
    row.psi_lhs = pr.lhs;
    row.psi_rhs = pr.rhs;
    row.psi_ok = pr.ok;
  }

  for (const auto& [key, mult] : engine.iq.graded_arrows) {
    GradedArrowRow row;
    row.source = q.name(std::get<0>(key));
    row.target = q.name(std::get<1>(key));
    row.degree = static_cast<std::size_t>(std::get<2>(key));
    row.multiplicity = mult;
    rep.graded_arrows.push_back(std::move(row));
  }
  std::sort(rep.graded_arrows.begin(), rep.graded_arrows.end(),
            [&](const GradedArrowRow& x, const GradedArrowRow& y) {
              return std::tuple(x.degree, q.index_of(x.source), q.index_of(x.target)) <
                     std::tuple(y.degree, q.index_of(y.source), q.index_of(y.target));
            });
  rep.stabilized = engine.iq.stabilized;

  rep.freeness_ok = freeness_convolution_check(engine.iq, q, engine.table, opt.max_degree);

  GroupClosure<F> closure = close_group(a, opt.closure_cap);
  rep.closure_order = closure.order();
  rep.closure_complete = closure.complete;

  if (!opt.run_oracle) {
    rep.oracle_status = "skipped (disabled)";
  } else if (!closure.complete) {
    rep.oracle_status = "skipped (incomplete closure)";
  } else if constexpr (!std::is_same_v<F, Rational>) {
    rep.oracle_status = "skipped (modular field)";
  } else {
    rep.oracle_status = "checked";
    for (std::size_t n = 1; n <= opt.max_degree; ++n)
      for (const PathWord& w : enumerate_paths_all(q, n)) {
        OracleRow row;
        row.word = w.str(q);
        row.kernel_dim = engine.table.at(w).invariant.dim();
        const Rational value = char_dim_invariants(closure, w);
        row.character_value = value.str();
        row.match = value == Rational(static_cast<long long>(row.kernel_dim));
        rep.oracle_rows.push_back(std::move(row));
      }
  }

  PreservationReport pres = preservation_check(q, engine.iq, closure.complete);
  rep.original_verdict = detail::verdict_row(pres.original_verdict, rep.vertices);
  rep.invariant_verdict = detail::verdict_row(pres.invariant_verdict, rep.vertices);
  rep.preserved = pres.preserved;
  rep.cycle_structure_ok = pres.cycle_structure_ok;
  rep.caveats = pres.caveats;
  rep.cycle_degree_witness_ok = cycle_degree_witness(a, closure, opt.max_degree);

  return rep;
}

namespace detail {

inline nlohmann::ordered_json opt_bool(const std::optional<bool>& v) {
  if (!v.has_value()) return nullptr;
  return *v;
}

inline nlohmann::ordered_json verdict_json(const VerdictRow& v) {
  nlohmann::ordered_json j;
  j["type"] = v.type;
  j["summary"] = v.summary;
  j["components"] = nlohmann::ordered_json::array();
  for (const ComponentRow& c : v.components) {
    nlohmann::ordered_json cj;
    cj["type"] = c.type;
    cj["family"] = c.family;
    cj["vertices"] = c.vertices;
    j["components"].push_back(std::move(cj));
  }
  return j;
}

}  // namespace detail

// Canonical machine report: fixed key order, no volatile fields, so the
// same instance always serializes to the same bytes.
inline std::string report_to_json(const ComputeReport& rep) {
  using nlohmann::ordered_json;
  ordered_json j;

  ordered_json inst;
  inst["vertices"] = rep.vertices;
  inst["field"] = rep.field_name;
  inst["max_degree"] = rep.max_degree;
  inst["closure_cap"] = rep.closure_cap;
  inst["stabilization_window"] = rep.stabilization_window;
  j["instance"] = std::move(inst);

  ordered_json closure;
  closure["order"] = rep.closure_order;
  closure["complete"] = rep.closure_complete;
  j["closure"] = std::move(closure);

  j["words"] = ordered_json::array();
  for (const WordRow& w : rep.words) {
    ordered_json wj;
    wj["word"] = w.word;
    wj["source"] = w.source;
    wj["target"] = w.target;
    wj["degree"] = w.degree;
    wj["space_dim"] = w.space_dim;
    wj["dim_invariant"] = w.dim_invariant;
    wj["dim_composite"] = w.dim_composite;
    wj["dim_irreducible"] = w.dim_irreducible;
    wj["psi_lhs"] = w.psi_lhs;
    wj["psi_rhs"] = w.psi_rhs;
    wj["psi_ok"] = w.psi_ok;
    j["words"].push_back(std::move(wj));
  }

  j["dimensions_by_degree"] = rep.dimensions_by_degree;

  ordered_json iq;
  iq["vertices"] = rep.vertices;
  iq["graded_arrows"] = ordered_json::array();
  for (const GradedArrowRow& g : rep.graded_arrows) {
    ordered_json gj;
    gj["source"] = g.source;
    gj["target"] = g.target;
    gj["degree"] = g.degree;
    gj["multiplicity"] = g.multiplicity;
    iq["graded_arrows"].push_back(std::move(gj));
  }
  iq["truncation_degree"] = rep.max_degree;
  iq["stabilized"] = rep.stabilized;
  j["invariant_quiver"] = std::move(iq);

  ordered_json checks;
  checks["psi_all_ok"] = rep.psi_all_ok;
  checks["freeness_ok"] = rep.freeness_ok;
  ordered_json oracle;
  oracle["status"] = rep.oracle_status;
  oracle["rows"] = ordered_json::array();
  for (const OracleRow& r : rep.oracle_rows) {
    ordered_json rj;
    rj["word"] = r.word;
    rj["kernel_dim"] = r.kernel_dim;
    rj["character_value"] = r.character_value;
    rj["match"] = r.match;
    oracle["rows"].push_back(std::move(rj));
  }
  checks["oracle"] = std::move(oracle);
  j["checks"] = std::move(checks);

  ordered_json verdicts;
  verdicts["original"] = detail::verdict_json(rep.original_verdict);
  verdicts["invariant"] = detail::verdict_json(rep.invariant_verdict);
  j["verdicts"] = std::move(verdicts);

  ordered_json pres;
  pres["preserved"] = detail::opt_bool(rep.preserved);
  pres["cycle_structure_ok"] = detail::opt_bool(rep.cycle_structure_ok);
  pres["cycle_degree_witness"] = detail::opt_bool(rep.cycle_degree_witness_ok);
  pres["caveats"] = rep.caveats;
  j["preservation"] = std::move(pres);

  return j.dump(2) + "\n";
}

// DOT rendering of the invariant quiver: one edge per (source, target,
// degree), multiplicity in the label.
inline std::string report_to_dot(const ComputeReport& rep) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string dot = "digraph invariant_quiver {\n  rankdir=LR;\n";
  for (const std::string& v : rep.vertices) dot += "  " + quote(v) + ";\n";
  for (const GradedArrowRow& g : rep.graded_arrows)
    dot += "  " + quote(g.source) + " -> " + quote(g.target) + " [label=\"d=" +
           std::to_string(g.degree) + " ×" + std::to_string(g.multiplicity) + "\"];\n";
  dot += "}\n";
  return dot;
}

}  // namespace pathinv
