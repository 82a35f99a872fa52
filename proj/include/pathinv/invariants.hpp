#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pathinv/action.hpp"
#include "pathinv/matrix.hpp"
#include "pathinv/quiver.hpp"
#include "pathinv/subspace.hpp"

namespace pathinv {

// Per-word invariant decomposition V_w^G = irreducible ⊕ composite.
template <Field F>
struct InvariantDecomposition {
  PathWord word;
  Subspace<F> invariant;    // fixed vectors of the path-space action
  Subspace<F> composite;    // image of the sum over 2-partitions
  Subspace<F> irreducible;  // deterministic complement of composite in invariant
};

template <Field F>
using DecompositionTable = std::map<PathWord, InvariantDecomposition<F>>;

// Fixed vectors of the induced action on V_w: the intersection over the
// generators of ker(g - id), which equals the fixed space of the generated
// group.
template <Field F>
Subspace<F> fixed_subspace(const HomogeneousAction<F>& a, const PathWord& w) {
  const std::size_t d = space_dim(a.quiver, w);
  Subspace<F> fix = Subspace<F>::full(d);
  for (const GeneratorBlocks<F>& g : a.generators) {
    Matrix<F> m = act_on_path(g, w) - Matrix<F>::identity(d);
    fix = intersect(fix, kernel(m));
    if (fix.dim() == 0) break;
  }
  return fix;
}

namespace detail {

// Ordered compositions of m into l positive parts, each listed first-factor
// first: (c_1, ..., c_l) with c_1 the length of the earliest subword.
inline std::vector<std::vector<std::size_t>> compositions(std::size_t m, std::size_t l) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t parts) -> void {
    if (parts == 1) {
      if (remaining >= 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (std::size_t c = 1; c + (parts - 1) <= remaining; ++c) {
      cur.push_back(c);
      self(self, remaining - c, parts - 1);
      cur.pop_back();
    }
  };
  if (l >= 1 && l <= m) rec(rec, m, l);
  return out;
}

// All ordered compositions of m (every number of parts).
inline std::vector<std::vector<std::size_t>> all_compositions(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t l = 1; l <= m; ++l) {
    auto part = compositions(m, l);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Span of the Kronecker products of the factors' invariant bases over all
// compositions of w into exactly l subwords. Factor order matches the path
// tensor convention: the last subword is the most significant factor.
template <Field F>
Subspace<F> composition_span(const Quiver& q, const DecompositionTable<F>& table,
                             const PathWord& w, std::size_t l) {
  const std::size_t m = w.length();
  const std::size_t ambient = space_dim(q, w);
  Matrix<F> rows(0, ambient);

  for (const std::vector<std::size_t>& parts : compositions(m, l)) {
    std::vector<const InvariantDecomposition<F>*> pieces;
    std::size_t at = 0;
    bool degenerate = false;
    for (std::size_t c : parts) {
      const PathWord piece = w.subword(at, c);
      at += c;
      auto it = table.find(piece);
      if (it == table.end())
        throw std::out_of_range("composition_span: missing table entry for subword");
      if (it->second.invariant.dim() == 0) {
        degenerate = true;
        break;
      }
      pieces.push_back(&it->second);
    }
    if (degenerate) continue;

    // Cartesian product over the factors' basis vectors.
    std::vector<std::size_t> choice(pieces.size(), 0);
    while (true) {
      std::vector<F> v = pieces.back()->invariant.basis().row(choice.back());
      for (std::size_t t = pieces.size() - 1; t-- > 0;)
        v = kron_vec(v, pieces[t]->invariant.basis().row(choice[t]));
      Matrix<F> one(1, ambient, std::move(v));
      rows = vstack(rows, one);

      std::size_t k = 0;
      while (k < pieces.size()) {
        if (++choice[k] < pieces[k]->invariant.dim()) break;
        choice[k] = 0;
        ++k;
      }
      if (k == pieces.size()) break;
    }
  }
  return Subspace<F>::from_rows(rows);
}

}  // namespace detail

// Image of φ_w: the sum over all 2-partitions w = w2·w1 of the span of
// {u2 ⊗ u1}. By convention zero for words of length 1.
template <Field F>
Subspace<F> composite_image(const Quiver& q, const DecompositionTable<F>& table,
                            const PathWord& w) {
  if (w.length() < 2) return Subspace<F>::zero(space_dim(q, w));
  return detail::composition_span(q, table, w, 2);
}

// l-composite filtration [V_w^G]^l: invariants generated by ordered l-fold
// products of subword invariants; decreasing in l, with level 1 the whole
// invariant space and level 2 the composite image.
template <Field F>
Subspace<F> l_composite_filtration(const Quiver& q, const DecompositionTable<F>& table,
                                   const PathWord& w, std::size_t l) {
  if (l < 1 || l > w.length())
    throw std::invalid_argument("l_composite_filtration: l out of range");
  if (l == 1) {
    auto it = table.find(w);
    if (it == table.end()) throw std::out_of_range("l_composite_filtration: word not in table");
    return it->second.invariant;
  }
  return detail::composition_span(q, table, w, l);
}

// Deterministic complement of the composite invariants inside the invariant
// space; containment is re-verified because a violation signals a bug.
template <Field F>
Subspace<F> irreducible_complement(const Subspace<F>& composite, const Subspace<F>& invariant) {
  if (!invariant.contains(composite))
    throw std::logic_error("irreducible_complement: composite not inside invariant");
  return complement_within(composite, invariant);
}

struct PsiRow {
  PathWord word;
  std::size_t lhs = 0;  // dim V_w^G
  std::size_t rhs = 0;  // sum over ordered partitions of products of irreducible dims
  bool ok = false;
};

// Graded dimension identity behind the bijectivity of ψ_w: the invariant
// dimension must equal the sum over all ordered partitions of w of the
// products of the subwords' irreducible dimensions.
template <Field F>
PsiRow psi_dimension_check(const DecompositionTable<F>& table, const PathWord& w) {
  auto self = table.find(w);
  if (self == table.end()) throw std::out_of_range("psi_dimension_check: word not in table");

  std::size_t rhs = 0;
  for (const std::vector<std::size_t>& parts : detail::all_compositions(w.length())) {
    std::size_t prod = 1;
    std::size_t at = 0;
    for (std::size_t c : parts) {
      const PathWord piece = w.subword(at, c);
      at += c;
      auto it = table.find(piece);
      if (it == table.end()) throw std::out_of_range("psi_dimension_check: incomplete table");
      prod *= it->second.irreducible.dim();
      if (prod == 0) break;
    }
    rhs += prod;
  }
  PsiRow row;
  row.word = w;
  row.lhs = self->second.invariant.dim();
  row.rhs = rhs;
  row.ok = row.lhs == row.rhs;
  return row;
}

// Graded arrow multiplicities of the invariant quiver:
// c(i, j, d) = sum of dim V_{w,irr}^G over words w of length d from i to j.
struct InvariantQuiver {
  std::vector<std::string> vertices;
  std::map<std::tuple<int, int, int>, std::size_t> graded_arrows;  // (source, target, degree)
  std::size_t truncation_degree = 0;
  bool stabilized = false;

  std::size_t multiplicity(int source, int target, int degree) const {
    auto it = graded_arrows.find({source, target, degree});
    return it == graded_arrows.end() ? 0 : it->second;
  }

  std::size_t total_from(int source) const {
    std::size_t n = 0;
    for (const auto& [key, mult] : graded_arrows)
      if (std::get<0>(key) == source) n += mult;
    return n;
  }

  std::size_t total_into(int target) const {
    std::size_t n = 0;
    for (const auto& [key, mult] : graded_arrows)
      if (std::get<1>(key) == target) n += mult;
    return n;
  }
};

struct PsiIdentityViolation : std::runtime_error {
  explicit PsiIdentityViolation(const std::string& word, std::size_t lhs, std::size_t rhs)
      : std::runtime_error("psi dimension identity failed on word " + word + ": invariant dim " +
                           std::to_string(lhs) + " != partition sum " + std::to_string(rhs)),
        word_str(word) {}
  std::string word_str;
};

template <Field F>
struct EngineResult {
  InvariantQuiver iq;
  DecompositionTable<F> table;
  std::vector<PsiRow> psi_rows;
};

// Full decomposition pipeline up to degree N, in increasing word length so
// every composite image finds its factors already decided. Any ψ failure
// aborts: it would contradict the bijectivity of ψ_w and therefore flags an
// implementation fault, never an input property.
template <Field F>
EngineResult<F> invariant_quiver(const HomogeneousAction<F>& a, std::size_t N,
                                 std::size_t stabilization_window = 2) {
  if (N < 1) throw std::invalid_argument("invariant_quiver: N must be >= 1");
  {
    std::vector<ActionError> errors = validate(a);
    if (!errors.empty())
      throw std::invalid_argument("invariant_quiver: invalid action: " +
                                  errors.front().str(a.quiver));
  }

  EngineResult<F> result;
  result.iq.vertices = a.quiver.names();
  result.iq.truncation_degree = N;

  for (std::size_t n = 1; n <= N; ++n) {
    for (const PathWord& w : enumerate_paths_all(a.quiver, n)) {
      InvariantDecomposition<F> dec;
      dec.word = w;
      dec.invariant = fixed_subspace(a, w);
      dec.composite = composite_image(a.quiver, result.table, w);
      dec.irreducible = irreducible_complement(dec.composite, dec.invariant);
      const std::size_t irr_dim = dec.irreducible.dim();
      result.table.emplace(w, std::move(dec));

      PsiRow row = psi_dimension_check(result.table, w);
      result.psi_rows.push_back(row);
      if (!row.ok) throw PsiIdentityViolation(w.str(a.quiver), row.lhs, row.rhs);

      if (irr_dim > 0)
        result.iq.graded_arrows[{w.source(), w.target(), static_cast<int>(n)}] += irr_dim;
    }
  }

  // Stabilized: no irreducible appears in the trailing degree window.
  const std::size_t window_begin =
      N >= stabilization_window ? N - stabilization_window + 1 : 1;
  result.iq.stabilized = true;
  for (const auto& [key, mult] : result.iq.graded_arrows) {
    const std::size_t degree = static_cast<std::size_t>(std::get<2>(key));
    if (mult > 0 && degree >= window_begin) {
      result.iq.stabilized = false;
      break;
    }
  }
  return result;
}

// Element of the degree-truncated algebra: one coordinate block per degree
// 0..N. Degree 0 is indexed by the stationary idempotents; degree n >= 1 by
// the concatenation of the path spaces of all words of length n in
// enumeration order.
template <Field F>
struct TruncatedElement {
  std::vector<std::vector<F>> components;
};

// Coordinate layout of the degree-n blocks for a fixed quiver.
struct DegreeLayout {
  std::vector<std::vector<PathWord>> words_by_degree;  // index 1..N; [0] empty
  std::vector<std::size_t> degree_dims;                // [0] = vertex count

  static DegreeLayout build(const Quiver& q, std::size_t N) {
    DegreeLayout layout;
    layout.words_by_degree.resize(N + 1);
    layout.degree_dims.assign(N + 1, 0);
    layout.degree_dims[0] = q.vertex_count();
    for (std::size_t n = 1; n <= N; ++n) {
      layout.words_by_degree[n] = enumerate_paths_all(q, n);
      std::size_t total = 0;
      for (const PathWord& w : layout.words_by_degree[n]) total += space_dim(q, w);
      layout.degree_dims[n] = total;
    }
    return layout;
  }

  template <Field F>
  TruncatedElement<F> zero_element() const {
    TruncatedElement<F> x;
    for (std::size_t dim : degree_dims) x.components.emplace_back(dim, F(0));
    return x;
  }
};

// Order function ν truncated at N: the lowest degree with a nonzero
// component, or nullopt when every component vanishes (ν >= N + 1; the
// truncation cannot distinguish 0 from high order).
template <Field F>
std::optional<std::size_t> order_of(const TruncatedElement<F>& x) {
  for (std::size_t n = 0; n < x.components.size(); ++n)
    for (const F& c : x.components[n])
      if (!c.is_zero()) return n;
  return std::nullopt;
}

// Graded invariant dimensions D_n(i, j) = sum of dim V_w^G over words of
// length n from i to j, with D_0(i, j) = [i = j].
template <Field F>
std::map<std::tuple<int, int, int>, std::size_t> invariant_dims_by_degree(
    const Quiver& q, const DecompositionTable<F>& table, std::size_t N) {
  std::map<std::tuple<int, int, int>, std::size_t> D;
  const int V = static_cast<int>(q.vertex_count());
  for (int i = 0; i < V; ++i) D[{i, i, 0}] = 1;
  for (const auto& [w, dec] : table)
    if (w.length() <= N) D[{w.source(), w.target(), static_cast<int>(w.length())}] += dec.invariant.dim();
  return D;
}

// Tensor-algebra freeness as a graded dimension identity: for every i, j and
// every n <= N,
//   D_n(i,j) = [n=0][i=j] + sum_{d=1..n} sum_k c(k,j,d) * D_{n-d}(i,k).
template <Field F>
bool freeness_convolution_check(const InvariantQuiver& iq, const Quiver& q,
                                const DecompositionTable<F>& table, std::size_t N) {
  auto D = invariant_dims_by_degree(q, table, N);
  auto d_at = [&](int i, int j, int n) -> std::size_t {
    auto it = D.find({i, j, n});
    return it == D.end() ? 0 : it->second;
  };
  const int V = static_cast<int>(q.vertex_count());
  for (int i = 0; i < V; ++i)
    for (int j = 0; j < V; ++j)
      for (int n = 0; n <= static_cast<int>(N); ++n) {
        std::size_t rhs = (n == 0 && i == j) ? 1 : 0;
        for (int d = 1; d <= n; ++d)
          for (int k = 0; k < V; ++k)
            rhs += iq.multiplicity(k, j, d) * d_at(i, k, n - d);
        if (d_at(i, j, n) != rhs) return false;
      }
  return true;
}

}  // namespace pathinv
