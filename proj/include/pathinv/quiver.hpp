#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathinv {

// Quiver stored by arrow-space dimensions: dim(i, j) is the dimension of the
// space of arrows from vertex i to vertex j (0 = no arrows). A basis of each
// arrow space is implicit (standard coordinates).
class Quiver {
public:
  Quiver() = default;
  explicit Quiver(std::vector<std::string> vertex_names)
      : names_(std::move(vertex_names)),
        dim_(names_.size(), std::vector<int>(names_.size(), 0)) {}

  std::size_t vertex_count() const { return names_.size(); }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    throw std::out_of_range("Quiver: unknown vertex '" + name + "'");
  }

  void set_arrow_dim(int source, int target, int d) {
    check_vertex(source);
    check_vertex(target);
    if (d < 0) throw std::invalid_argument("Quiver: negative arrow dimension");
    dim_[source][target] = d;
  }

  int arrow_dim(int source, int target) const {
    check_vertex(source);
    check_vertex(target);
    return dim_[source][target];
  }

  bool operator==(const Quiver& o) const { return names_ == o.names_ && dim_ == o.dim_; }

private:
  void check_vertex(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= names_.size())
      throw std::out_of_range("Quiver: vertex index out of range");
  }

  std::vector<std::string> names_;
  std::vector<std::vector<int>> dim_;
};

// Composable word of arrow spaces, stored as its vertex sequence
// v0 -> v1 -> ... -> vm. The associated path space is the ordered tensor
// product of the arrow spaces, last arrow as the most significant factor.
struct PathWord {
  std::vector<int> verts;

  std::size_t length() const { return verts.empty() ? 0 : verts.size() - 1; }
  int source() const { return verts.front(); }
  int target() const { return verts.back(); }
  std::pair<int, int> arrow(std::size_t k) const { return {verts[k], verts[k + 1]}; }

  // Contiguous subword spanning arrows [from, from+len).
  PathWord subword(std::size_t from, std::size_t len) const {
    return PathWord{std::vector<int>(verts.begin() + from, verts.begin() + from + len + 1)};
  }

  auto operator<=>(const PathWord&) const = default;

  std::string str(const Quiver& q) const {
    std::string s;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      if (k) s += "->";
      s += q.name(verts[k]);
    }
    return s;
  }
};

inline PathWord make_word(const Quiver& q, const std::vector<int>& verts) {
  if (verts.size() < 2) throw std::invalid_argument("PathWord: length must be >= 1");
  for (std::size_t k = 0; k + 1 < verts.size(); ++k)
    if (q.arrow_dim(verts[k], verts[k + 1]) < 1)
      throw std::invalid_argument("PathWord: zero arrow space along the word");
  return PathWord{verts};
}

inline std::size_t space_dim(const Quiver& q, const PathWord& w) {
  std::size_t d = 1;
  for (std::size_t k = 0; k < w.length(); ++k) {
    auto [s, t] = w.arrow(k);
    d *= static_cast<std::size_t>(q.arrow_dim(s, t));
  }
  return d;
}

// All composable words of length n from i to j through nonzero arrow spaces,
// in lexicographic order of vertex sequences.
inline std::vector<PathWord> enumerate_paths(const Quiver& q, int i, int j, std::size_t n) {
  if (i < 0 || static_cast<std::size_t>(i) >= q.vertex_count() || j < 0 ||
      static_cast<std::size_t>(j) >= q.vertex_count())
    throw std::out_of_range("enumerate_paths: unknown vertex");
  if (n < 1) throw std::invalid_argument("enumerate_paths: length must be >= 1");

  std::vector<PathWord> out;
  std::vector<int> verts{i};
  auto extend = [&](auto&& self, int at, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (at == j) out.push_back(PathWord{verts});
      return;
    }
    for (int next = 0; next < static_cast<int>(q.vertex_count()); ++next) {
      if (q.arrow_dim(at, next) < 1) continue;
      verts.push_back(next);
      self(self, next, remaining - 1);
      verts.pop_back();
    }
  };
  extend(extend, i, n);
  return out;
}

// All words of length n, grouped by source then target vertex order.
inline std::vector<PathWord> enumerate_paths_all(const Quiver& q, std::size_t n) {
  std::vector<PathWord> out;
  for (int i = 0; i < static_cast<int>(q.vertex_count()); ++i)
    for (int j = 0; j < static_cast<int>(q.vertex_count()); ++j) {
      std::vector<PathWord> part = enumerate_paths(q, i, j, n);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

// True iff the quiver is connected and every vertex has exactly one outgoing
// and one incoming arrow space, each of dimension 1.
inline bool is_oriented_cycle(const Quiver& q) {
  const int n = static_cast<int>(q.vertex_count());
  if (n == 0) return false;
  std::vector<int> next(n, -1);
  for (int i = 0; i < n; ++i) {
    int out_count = 0, in_count = 0;
    for (int j = 0; j < n; ++j) {
      if (q.arrow_dim(i, j) > 0) {
        if (q.arrow_dim(i, j) != 1) return false;
        ++out_count;
        next[i] = j;
      }
      if (q.arrow_dim(j, i) > 0) ++in_count;
    }
    if (out_count != 1 || in_count != 1) return false;
  }
  // One out / one in everywhere makes the quiver a disjoint union of cycles;
  // connectivity means a single orbit.
  std::vector<bool> seen(n, false);
  int at = 0, visited = 0;
  while (!seen[at]) {
    seen[at] = true;
    ++visited;
    at = next[at];
  }
  return visited == n;
}

}  // namespace pathinv
