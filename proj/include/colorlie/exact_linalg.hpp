#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <utility>
#include <vector>

#include "colorlie/scalar.hpp"

namespace colorlie {

using Index = Eigen::Index;

template <ExactScalar S>
using ExactMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <ExactScalar S>
using ExactVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <ExactScalar S>
ExactMatrix<S> zero_matrix(Index rows, Index cols) {
  return ExactMatrix<S>::Constant(rows, cols, S(0));
}

template <ExactScalar S>
ExactVector<S> zero_vector(Index size) {
  return ExactVector<S>::Constant(size, S(0));
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Reduced row echelon form together with its pivot columns.
template <ExactScalar S>
struct Echelon {
  ExactMatrix<S> reduced;
  std::vector<Index> pivot_cols;

  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

/// Gauss-Jordan elimination. Pivots are taken column by column, first
/// nonzero row from the top, so the output is a pure function of the input.
template <ExactScalar S>
Echelon<S> reduced_echelon(ExactMatrix<S> a) {
  Echelon<S> out;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const S factor = a(i, col);
      for (Index j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) = a(i, j) - factor * a(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

/// Rank by forward Gaussian elimination, touching only nonzero entries.
/// Differential matrices are sparse, which keeps Q(t) arithmetic cheap.
template <ExactScalar S>
Index rank(ExactMatrix<S> a) {
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    std::vector<Index> support;
    for (Index j = col + 1; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) support.push_back(j);
    const S inv = S(1) / a(row, col);
    for (Index i = row + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const S factor = a(i, col) * inv;
      for (Index j : support) a(i, j) = a(i, j) - factor * a(row, j);
      a(i, col) = S(0);
    }
    ++row;
  }
  return row;
}

/// Rank by fraction-free (Bareiss) forward elimination: every update is
/// (p*a_ij - a_ic*a_rj) / p_prev, an exact division when entries are
/// integral, so integer and polynomial inputs never leave their ring.
template <ExactScalar S>
Index fraction_free_rank(ExactMatrix<S> a) {
  Index row = 0;
  S prev(1);
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const S p = a(row, col);
    for (Index i = row + 1; i < a.rows(); ++i) {
      const S lead = a(i, col);
      for (Index j = col + 1; j < a.cols(); ++j) {
        S updated = p * a(i, j);
        if (!lead.is_zero() && !a(row, j).is_zero()) updated = updated - lead * a(row, j);
        a(i, j) = updated / prev;
      }
      a(i, col) = S(0);
    }
    prev = p;
    ++row;
  }
  return row;
}

template <ExactScalar S>
struct RankKernel {
  Index rank = 0;
  /// Kernel basis read off the reduced echelon form: one vector per free
  /// column, with a 1 in that column.
  std::vector<ExactVector<S>> kernel_basis;
};

template <ExactScalar S>
RankKernel<S> rank_kernel(const ExactMatrix<S>& m) {
  const Echelon<S> e = reduced_echelon<S>(m);
  RankKernel<S> out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    ExactVector<S> v = zero_vector<S>(m.cols());
    v(free) = S(1);
    for (Index r = 0; r < e.rank(); ++r) {
      const S& entry = e.reduced(r, free);
      if (!entry.is_zero()) v(e.pivot_cols[static_cast<std::size_t>(r)]) = -entry;
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

/// Echelonized basis of the column space (rows of rref(M^T), as columns).
template <ExactScalar S>
std::vector<ExactVector<S>> image_basis(const ExactMatrix<S>& m) {
  const Echelon<S> e = reduced_echelon<S>(m.transpose());
  std::vector<ExactVector<S>> out;
  for (Index r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row(r).transpose());
  return out;
}

/// Stacks vectors of equal length as the columns of a matrix.
template <ExactScalar S>
ExactMatrix<S> columns_matrix(const std::vector<ExactVector<S>>& vs, Index rows) {
  ExactMatrix<S> m = zero_matrix<S>(rows, static_cast<Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Index>(j)) = vs[j];
  return m;
}

/// A subspace held as the reduced echelon form of its spanning vectors
/// (one row per basis vector). `normal_form` is the canonical
/// representative of a vector modulo the subspace.
template <ExactScalar S>
class Subspace {
 public:
  Subspace(const std::vector<ExactVector<S>>& span, Index ambient) : ambient_(ambient) {
    ExactMatrix<S> rows = zero_matrix<S>(static_cast<Index>(span.size()), ambient);
    for (std::size_t i = 0; i < span.size(); ++i) rows.row(static_cast<Index>(i)) = span[i].transpose();
    echelon_ = reduced_echelon<S>(std::move(rows));
  }

  Index dimension() const { return echelon_.rank(); }
  Index ambient() const { return ambient_; }

  ExactVector<S> normal_form(ExactVector<S> v) const {
    for (Index r = 0; r < echelon_.rank(); ++r) {
      const Index c = echelon_.pivot_cols[static_cast<std::size_t>(r)];
      if (v(c).is_zero()) continue;
      const S factor = v(c);
      for (Index j = 0; j < ambient_; ++j)
        if (!echelon_.reduced(r, j).is_zero()) v(j) = v(j) - factor * echelon_.reduced(r, j);
    }
    return v;
  }

  bool contains(const ExactVector<S>& v) const { return is_zero(normal_form(v)); }

  std::vector<ExactVector<S>> basis() const {
    std::vector<ExactVector<S>> out;
    for (Index r = 0; r < echelon_.rank(); ++r) out.push_back(echelon_.reduced.row(r).transpose());
    return out;
  }

 private:
  Index ambient_;
  Echelon<S> echelon_;
};

/// Equality of spans, by comparing reduced echelon forms.
template <ExactScalar S>
bool same_span(const std::vector<ExactVector<S>>& a, const std::vector<ExactVector<S>>& b, Index ambient) {
  const Subspace<S> sa(a, ambient);
  const Subspace<S> sb(b, ambient);
  if (sa.dimension() != sb.dimension()) return false;
  for (const auto& v : b)
    if (!sa.contains(v)) return false;
  return true;
}

/// Entry-wise specialization t -> value of a Q(t) matrix.
inline ExactMatrix<Rational> specialize(const ExactMatrix<RationalFunction>& m, const Rational& value) {
  ExactMatrix<Rational> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).evaluate(value);
  return out;
}

}  // namespace colorlie
