#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pathinv/matrix.hpp"

namespace pathinv {

// Subspace of F^ambient, stored as its unique reduced row-echelon basis.
// Two subspaces are equal iff their stored bases are entrywise equal.
template <Field F>
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<F>(0, ambient);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    return from_rows(Matrix<F>::identity(ambient));
  }

  // Span of the rows of m; zero rows are dropped by the reduction.
  static Subspace from_rows(const Matrix<F>& m) {
    RrefResult<F> r = rref(m);
    Subspace s;
    s.ambient_ = m.cols();
    s.pivots_ = r.pivots;
    s.basis_ = Matrix<F>(r.rank(), m.cols());
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Remainder of v after reduction against the basis; zero iff v is a member.
  std::vector<F> reduce(std::vector<F> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (std::size_t t = 0; t < basis_.rows(); ++t) {
      const F& c = v[pivots_[t]];
      if (c.is_zero()) continue;
      const F coeff = c;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] = v[j] - coeff * basis_(t, j);
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    for (const F& x : reduce(v))
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) return false;
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_.row(i))) return false;
    return true;
  }

private:
  std::size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

// Null space {v : m v = 0}, canonicalized.
template <Field F>
Subspace<F> kernel(const Matrix<F>& m) {
  RrefResult<F> r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  Matrix<F> basis(n - r.rank(), n);
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(row, f) = F(1);
    for (std::size_t t = 0; t < r.rank(); ++t) basis(row, r.pivots[t]) = -r.reduced(t, f);
    ++row;
  }
  return Subspace<F>::from_rows(basis);
}

template <Field F>
Subspace<F> sum(const Subspace<F>& s1, const Subspace<F>& s2) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw std::invalid_argument("sum: ambient mismatch");
  return Subspace<F>::from_rows(vstack(s1.basis(), s2.basis()));
}

// Intersection through annihilators: ann(s1 ∩ s2) = ann(s1) + ann(s2) under
// the standard pairing, valid over any field.
template <Field F>
Subspace<F> intersect(const Subspace<F>& s1, const Subspace<F>& s2) {
  if (s1.ambient_dim() != s2.ambient_dim())
    throw std::invalid_argument("intersect: ambient mismatch");
  Subspace<F> ann1 = kernel(s1.basis());
  Subspace<F> ann2 = kernel(s2.basis());
  return kernel(vstack(ann1.basis(), ann2.basis()));
}

// Deterministic complement of inner within outer: scan outer's canonical
// basis rows in increasing pivot order and keep each row that is independent
// from inner plus the rows already kept.
template <Field F>
Subspace<F> complement_within(const Subspace<F>& inner, const Subspace<F>& outer) {
  if (inner.ambient_dim() != outer.ambient_dim())
    throw std::invalid_argument("complement_within: ambient mismatch");
  if (!outer.contains(inner))
    throw std::invalid_argument("complement_within: inner not contained in outer");

  Matrix<F> kept(0, outer.ambient_dim());
  Matrix<F> accumulated = inner.basis();
  std::size_t current_rank = inner.dim();
  for (std::size_t t = 0; t < outer.dim(); ++t) {
    Matrix<F> candidate(1, outer.ambient_dim());
    for (std::size_t j = 0; j < outer.ambient_dim(); ++j) candidate(0, j) = outer.basis()(t, j);
    Matrix<F> trial = vstack(accumulated, candidate);
    if (rref(trial).rank() > current_rank) {
      kept = vstack(kept, candidate);
      accumulated = std::move(trial);
      ++current_rank;
    }
    if (current_rank == outer.dim()) break;
  }
  return Subspace<F>::from_rows(kept);
}

}  // namespace pathinv
