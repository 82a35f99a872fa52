#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pathinv/quiver.hpp"

namespace pathinv {

// Undirected multigraph: edge multiplicities per unordered vertex pair plus
// loop counts per vertex.
struct Multigraph {
  std::size_t n = 0;
  std::map<std::pair<int, int>, int> edges;  // key (i, j) with i < j
  std::vector<int> loops;

  void add_edge(int i, int j, int mult = 1) {
    if (mult <= 0) return;
    if (i == j)
      loops[i] += mult;
    else
      edges[{std::min(i, j), std::max(i, j)}] += mult;
  }
};

// Directions forgotten, multiplicities kept, loops kept.
inline Multigraph underlying_graph(const Quiver& q) {
  Multigraph g;
  g.n = q.vertex_count();
  g.loops.assign(g.n, 0);
  for (int i = 0; i < static_cast<int>(g.n); ++i)
    for (int j = 0; j < static_cast<int>(g.n); ++j) g.add_edge(i, j, q.arrow_dim(i, j));
  return g;
}

enum class RepType { Finite, Tame, Wild };

inline std::string rep_type_name(RepType t) {
  switch (t) {
    case RepType::Finite: return "Finite";
    case RepType::Tame: return "Tame";
    default: return "Wild";
  }
}

// Worst-first ordering: Wild > Tame > Finite.
inline RepType worse(RepType a, RepType b) {
  auto rank = [](RepType t) { return t == RepType::Wild ? 2 : t == RepType::Tame ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

struct ComponentVerdict {
  RepType type = RepType::Wild;
  std::string family;  // "A4", "D5", "E6", "A~0", "D~4", "E~8", ... ; empty for Wild
  std::vector<int> vertices;
};

struct GraphVerdict {
  RepType overall = RepType::Finite;
  std::vector<ComponentVerdict> components;
};

namespace detail {

inline ComponentVerdict classify_component(const Multigraph& g, const std::vector<int>& comp) {
  ComponentVerdict v;
  v.vertices = comp;

  const std::size_t n = comp.size();
  std::map<int, std::size_t> local;
  for (std::size_t k = 0; k < n; ++k) local[comp[k]] = k;

  int total_loops = 0;
  for (int x : comp) total_loops += g.loops[x];

  std::vector<int> degree(n, 0);
  int edge_count = 0;
  int max_pair_mult = 0;
  int double_pairs = 0;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [key, mult] : g.edges) {
    auto it1 = local.find(key.first);
    if (it1 == local.end()) continue;
    std::size_t a = it1->second, b = local.at(key.second);
    degree[a] += mult;
    degree[b] += mult;
    edge_count += mult;
    max_pair_mult = std::max(max_pair_mult, mult);
    if (mult >= 2) ++double_pairs;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  if (total_loops > 0) {
    if (n == 1 && total_loops == 1 && edge_count == 0) {
      v.type = RepType::Tame;
      v.family = "A~0";
    }
    return v;  // any other loop configuration is wild
  }
  if (max_pair_mult >= 3) return v;
  if (max_pair_mult == 2) {
    if (n == 2 && edge_count == 2 && double_pairs == 1) {
      v.type = RepType::Tame;
      v.family = "A~1";
    }
    return v;
  }

  // Simple connected graph from here on.
  if (edge_count > static_cast<int>(n)) return v;

  if (edge_count == static_cast<int>(n)) {
    // Unicyclic: a pure cycle iff every degree is 2.
    for (std::size_t k = 0; k < n; ++k)
      if (degree[k] != 2) return v;
    v.type = RepType::Tame;
    v.family = "A~" + std::to_string(n - 1);
    return v;
  }

  // Tree (connected with n-1 edges). Classify by branch structure.
  const int max_deg = n == 1 ? 0 : *std::max_element(degree.begin(), degree.end());
  std::vector<std::size_t> deg3, deg4;
  for (std::size_t k = 0; k < n; ++k) {
    if (degree[k] == 3) deg3.push_back(k);
    if (degree[k] >= 4) deg4.push_back(k);
  }

  if (max_deg <= 2) {
    v.type = RepType::Finite;
    v.family = "A" + std::to_string(n);
    return v;
  }

  // Arm lengths from a branch vertex: edge counts of the paths to the leaves.
  auto arm_lengths = [&](std::size_t b) {
    std::vector<int> arms;
    for (std::size_t nb : adj[b]) {
      int len = 1;
      std::size_t prev = b, at = nb;
      while (degree[at] == 2) {
        std::size_t step = (adj[at][0] == prev) ? adj[at][1] : adj[at][0];
        prev = at;
        at = step;
        ++len;
      }
      if (degree[at] != 1) return std::vector<int>{};  // runs into another branch
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
  };

  if (deg4.size() == 1 && deg3.empty() && degree[deg4[0]] == 4) {
    if (n == 5) {
      v.type = RepType::Tame;
      v.family = "D~4";
    }
    return v;
  }
  if (!deg4.empty()) return v;

  if (deg3.size() == 1) {
    std::vector<int> arms = arm_lengths(deg3[0]);
    if (arms.size() != 3) return v;
    const int a = arms[0], b = arms[1], c = arms[2];
    if (a == 1 && b == 1) {
      v.type = RepType::Finite;
      v.family = "D" + std::to_string(c + 3);
    } else if (a == 1 && b == 2 && c >= 2 && c <= 4) {
      v.type = RepType::Finite;
      v.family = "E" + std::to_string(c + 4);
    } else if (a == 2 && b == 2 && c == 2) {
      v.type = RepType::Tame;
      v.family = "E~6";
    } else if (a == 1 && b == 3 && c == 3) {
      v.type = RepType::Tame;
      v.family = "E~7";
    } else if (a == 1 && b == 2 && c == 5) {
      v.type = RepType::Tame;
      v.family = "E~8";
    }
    return v;
  }

  if (deg3.size() == 2) {
    // Affine D: both branch vertices carry exactly two pendant leaves.
    for (std::size_t b : deg3) {
      int leaf_neighbors = 0;
      for (std::size_t nb : adj[b])
        if (degree[nb] == 1) ++leaf_neighbors;
      if (leaf_neighbors != 2) return v;
    }
    v.type = RepType::Tame;
    v.family = "D~" + std::to_string(n - 1);
    return v;
  }

  return v;  // three or more branch vertices
}

}  // namespace detail

// Per-component Dynkin / Euclidean recognition; the whole-graph verdict is
// the worst component.
inline GraphVerdict classify_graph(const Multigraph& g) {
  GraphVerdict verdict;
  std::vector<bool> seen(g.n, false);
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [key, mult] : g.edges) {
    adj[key.first].push_back(key.second);
    adj[key.second].push_back(key.first);
  }
  for (int start = 0; start < static_cast<int>(g.n); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int at = stack.back();
      stack.pop_back();
      comp.push_back(at);
      for (int nb : adj[at])
        if (!seen[nb]) {
          seen[nb] = true;
          stack.push_back(nb);
        }
    }
    std::sort(comp.begin(), comp.end());
    verdict.components.push_back(detail::classify_component(g, comp));
  }
  verdict.overall = RepType::Finite;
  for (const ComponentVerdict& c : verdict.components) verdict.overall = worse(verdict.overall, c.type);
  return verdict;
}

}  // namespace pathinv
