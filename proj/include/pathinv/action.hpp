#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pathinv/matrix.hpp"
#include "pathinv/quiver.hpp"
#include "pathinv/rational.hpp"

namespace pathinv {

// One automorphism generator: an invertible block per nonzero arrow space.
// Degree-1 data extends multiplicatively to every path space, so a valid
// block family is automatically a homogeneous continuous algebra
// automorphism fixing each stationary idempotent.
template <Field F>
struct GeneratorBlocks {
  std::string name;
  std::map<std::pair<int, int>, Matrix<F>> blocks;

  const Matrix<F>& block(int source, int target) const {
    auto it = blocks.find({source, target});
    if (it == blocks.end())
      throw std::out_of_range("Generator '" + name + "': no block for arrow space");
    return it->second;
  }

  bool operator==(const GeneratorBlocks& o) const { return blocks == o.blocks; }
};

template <Field F>
struct HomogeneousAction {
  Quiver quiver;
  std::vector<GeneratorBlocks<F>> generators;
};

enum class ActionErrorKind { MissingBlock, ShapeMismatch, SingularBlock, UnknownBlock };

struct ActionError {
  ActionErrorKind kind;
  std::string generator;
  int source = -1;
  int target = -1;

  std::string str(const Quiver& q) const {
    std::string k;
    switch (kind) {
      case ActionErrorKind::MissingBlock: k = "MissingBlock"; break;
      case ActionErrorKind::ShapeMismatch: k = "ShapeMismatch"; break;
      case ActionErrorKind::SingularBlock: k = "SingularBlock"; break;
      case ActionErrorKind::UnknownBlock: k = "UnknownBlock"; break;
    }
    return k + " " + generator + " (" + q.name(source) + "," + q.name(target) + ")";
  }
};

// Every nonzero arrow space needs exactly one block of the right shape with
// nonzero determinant; blocks on zero arrow spaces are rejected.
template <Field F>
std::vector<ActionError> validate(const HomogeneousAction<F>& a) {
  std::vector<ActionError> errors;
  const int n = static_cast<int>(a.quiver.vertex_count());
  for (const GeneratorBlocks<F>& g : a.generators) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int d = a.quiver.arrow_dim(i, j);
        auto it = g.blocks.find({i, j});
        if (d == 0) {
          if (it != g.blocks.end())
            errors.push_back({ActionErrorKind::UnknownBlock, g.name, i, j});
          continue;
        }
        if (it == g.blocks.end()) {
          errors.push_back({ActionErrorKind::MissingBlock, g.name, i, j});
          continue;
        }
        const Matrix<F>& b = it->second;
        if (b.rows() != static_cast<std::size_t>(d) || b.cols() != static_cast<std::size_t>(d)) {
          errors.push_back({ActionErrorKind::ShapeMismatch, g.name, i, j});
          continue;
        }
        if (!is_invertible(b)) errors.push_back({ActionErrorKind::SingularBlock, g.name, i, j});
      }
  }
  return errors;
}

// Induced action on the path space of w: the Kronecker product of the blocks
// along the word, last arrow as the most significant factor.
template <Field F>
Matrix<F> act_on_path(const GeneratorBlocks<F>& g, const PathWord& w) {
  const std::size_t m = w.length();
  if (m == 0) throw std::invalid_argument("act_on_path: empty word");
  auto [s, t] = w.arrow(m - 1);
  Matrix<F> acc = g.block(s, t);
  for (std::size_t k = m - 1; k-- > 0;) {
    auto [ks, kt] = w.arrow(k);
    acc = kron(acc, g.block(ks, kt));
  }
  return acc;
}

template <Field F>
struct GroupClosure {
  std::vector<GeneratorBlocks<F>> elements;  // contains the identity
  bool complete = false;

  std::size_t order() const { return elements.size(); }
};

namespace detail {

template <Field F>
GeneratorBlocks<F> identity_element(const Quiver& q) {
  GeneratorBlocks<F> e;
  e.name = "id";
  const int n = static_cast<int>(q.vertex_count());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.arrow_dim(i, j) > 0)
        e.blocks.emplace(std::make_pair(i, j), Matrix<F>::identity(q.arrow_dim(i, j)));
  return e;
}

template <Field F>
GeneratorBlocks<F> compose(const GeneratorBlocks<F>& g, const GeneratorBlocks<F>& h) {
  // (g ∘ h) restricted to each arrow space is the block product.
  GeneratorBlocks<F> r;
  r.name = g.name + "*" + h.name;
  for (const auto& [key, gb] : g.blocks) r.blocks.emplace(key, gb * h.blocks.at(key));
  return r;
}

template <Field F>
std::string blocks_key(const GeneratorBlocks<F>& g) {
  std::string s;
  for (const auto& [key, b] : g.blocks) {
    s += std::to_string(key.first) + "," + std::to_string(key.second) + ":";
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        s += b(i, j).str();
        s += ";";
      }
  }
  return s;
}

}  // namespace detail

// Breadth-first closure of the generators under composition. Exact scalar
// equality makes the element identity test syntactic. If the closure
// exceeds cap, the partial element list is returned with complete = false.
template <Field F>
GroupClosure<F> close_group(const HomogeneousAction<F>& a, std::size_t cap) {
  GroupClosure<F> c;
  std::map<std::string, std::size_t> seen;

  auto push = [&](GeneratorBlocks<F> g) -> bool {
    std::string key = detail::blocks_key(g);
    if (seen.count(key)) return false;
    seen.emplace(std::move(key), c.elements.size());
    c.elements.push_back(std::move(g));
    return true;
  };

  push(detail::identity_element<F>(a.quiver));
  std::size_t frontier_begin = 0;
  while (frontier_begin < c.elements.size()) {
    const std::size_t frontier_end = c.elements.size();
    if (frontier_end > cap) {
      c.complete = false;
      return c;
    }
    for (std::size_t e = frontier_begin; e < frontier_end; ++e)
      for (const GeneratorBlocks<F>& g : a.generators) {
        if (c.elements.size() > cap) {
          c.complete = false;
          return c;
        }
        push(detail::compose(c.elements[e], g));
      }
    frontier_begin = frontier_end;
  }
  c.complete = c.elements.size() <= cap;
  return c;
}

struct IncompleteClosureError : std::runtime_error {
  IncompleteClosureError() : std::runtime_error("character oracle requires a complete closure") {}
};
struct ModularFieldError : std::runtime_error {
  ModularFieldError() : std::runtime_error("character oracle requires characteristic 0") {}
};

// Character-averaging dimension oracle for dim V_w^G, valid over the
// rationals with a complete closure:
//   (1/|G|) * sum over g of the product of the block traces along w.
template <Field F>
Rational char_dim_invariants(const GroupClosure<F>& c, const PathWord& w) {
  if constexpr (!std::is_same_v<F, Rational>) {
    throw ModularFieldError{};
  } else {
    if (!c.complete) throw IncompleteClosureError{};
    Rational total(0);
    for (const GeneratorBlocks<Rational>& g : c.elements) {
      Rational prod(1);
      for (std::size_t k = 0; k < w.length(); ++k) {
        auto [s, t] = w.arrow(k);
        prod *= trace(g.block(s, t));
      }
      total += prod;
    }
    return total / Rational(static_cast<long long>(c.elements.size()));
  }
}

}  // namespace pathinv
