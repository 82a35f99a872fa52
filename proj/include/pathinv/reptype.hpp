#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pathinv/action.hpp"
#include "pathinv/graph.hpp"
#include "pathinv/invariants.hpp"
#include "pathinv/quiver.hpp"

namespace pathinv {

// The invariant quiver as a plain quiver: degree labels forgotten, one arrow
// per unit of multiplicity.
inline Quiver quiver_of_invariants(const InvariantQuiver& iq) {
  Quiver q(iq.vertices);
  std::map<std::pair<int, int>, int> total;
  for (const auto& [key, mult] : iq.graded_arrows)
    total[{std::get<0>(key), std::get<1>(key)}] += static_cast<int>(mult);
  for (const auto& [pair, d] : total)
    if (d > 0) q.set_arrow_dim(pair.first, pair.second, d);
  return q;
}

inline GraphVerdict classify_invariant(const InvariantQuiver& iq) {
  return classify_graph(underlying_graph(quiver_of_invariants(iq)));
}

// For oriented-cycle originals: every vertex may source at most one
// generator-arrow of the invariant quiver and target at most one, counting
// multiplicity across all degrees. Not applicable otherwise.
inline std::optional<bool> cycle_structure_check(const InvariantQuiver& iq,
                                                 const Quiver& original) {
  if (!is_oriented_cycle(original)) return std::nullopt;
  for (int v = 0; v < static_cast<int>(iq.vertices.size()); ++v)
    if (iq.total_from(v) > 1 || iq.total_into(v) > 1) return false;
  return true;
}

// On an n-cycle under a group of order m, every path of length m*n must be
// fully invariant. Applicable only for oriented cycles with a complete
// closure and m*n within the truncation degree.
template <Field F>
std::optional<bool> cycle_degree_witness(const HomogeneousAction<F>& a,
                                         const GroupClosure<F>& closure, std::size_t N) {
  if (!is_oriented_cycle(a.quiver) || !closure.complete) return std::nullopt;
  const std::size_t m = closure.order();
  const std::size_t n = a.quiver.vertex_count();
  if (m * n > N) return std::nullopt;
  for (const PathWord& w : enumerate_paths_all(a.quiver, m * n))
    if (fixed_subspace(a, w).dim() != space_dim(a.quiver, w)) return false;
  return true;
}

struct PreservationReport {
  GraphVerdict original_verdict;
  GraphVerdict invariant_verdict;
  std::optional<bool> preserved;           // defined only for Finite or Tame originals
  std::optional<bool> cycle_structure_ok;  // oriented-cycle originals only
  std::vector<std::string> caveats;
};

// Finite must stay Finite; Tame may fall to Finite or stay Tame. A Wild
// original makes no claim. Non-stabilized truncations leave Finite and Tame
// verdicts provisional (arrow counts only grow with N), so they are flagged;
// an incomplete closure leaves the finiteness hypothesis unverified.
inline PreservationReport preservation_check(const Quiver& original, const InvariantQuiver& iq,
                                             bool closure_complete) {
  PreservationReport r;
  r.original_verdict = classify_graph(underlying_graph(original));
  r.invariant_verdict = classify_invariant(iq);
  r.cycle_structure_ok = cycle_structure_check(iq, original);
  if (r.original_verdict.overall == RepType::Finite)
    r.preserved = r.invariant_verdict.overall == RepType::Finite;
  else if (r.original_verdict.overall == RepType::Tame)
    r.preserved = r.invariant_verdict.overall != RepType::Wild;
  if (!iq.stabilized)
    r.caveats.push_back("invariant quiver not stabilized at degree " +
                        std::to_string(iq.truncation_degree) +
                        "; Finite and Tame verdicts are lower bounds");
  if (!closure_complete)
    r.caveats.push_back("group closure exceeded the cap; group finiteness unverified");
  return r;
}

// "Tame (A~2)", "Finite (A4, A1)", "Wild".
inline std::string verdict_str(const GraphVerdict& v) {
  std::string families;
  for (const ComponentVerdict& c : v.components) {
    if (c.family.empty()) continue;
    if (!families.empty()) families += ", ";
    families += c.family;
  }
  std::string s = rep_type_name(v.overall);
  if (!families.empty() && v.overall != RepType::Wild) s += " (" + families + ")";
  return s;
}

}  // namespace pathinv
