#pragma once

// Exact sparse linear algebra over Q and over Q(q): incremental row spaces
// for rank/membership questions and a nullspace solver for commutant
// computations.

#include "pq/frac.hpp"
#include "pq/superspace.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace pq {

inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const Frac& x) { return x.is_zero(); }

template <class F>
using SparseRow = std::map<std::uint64_t, F>;

template <class F>
void row_axpy(SparseRow<F>& dst, const F& c, const SparseRow<F>& src) {
  for (const auto& [k, v] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      F t = c * v;
      if (!field_is_zero(t)) dst.emplace(k, std::move(t));
    } else {
      it->second = it->second + c * v;
      if (field_is_zero(it->second)) dst.erase(it);
    }
  }
}

// Row space in echelon form; add() reduces the row and reports whether it
// enlarged the span.
template <class F>
class RowSpace {
public:
  // Reduce `row` against the current pivots (in place).
  void reduce(SparseRow<F>& row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.begin()->first);
      if (it == pivots_.end()) return;
      F c = F(0) - row.begin()->second;  // pivot rows are normalized to 1
      row_axpy(row, c, it->second);
    }
  }

  bool contains(SparseRow<F> row) const {
    reduce(row);
    return row.empty();
  }

  bool add(SparseRow<F> row) {
    reduce(row);
    if (row.empty()) return false;
    F lead = row.begin()->second;
    for (auto& [k, v] : row) v = v / lead;
    pivots_.emplace(row.begin()->first, std::move(row));
    return true;
  }

  // Eliminate every pivot column of `row`, not only the leading one.
  void reduce_all(SparseRow<F>& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      std::uint64_t col = it->first;
      F c = F(0) - it->second;
      row_axpy(row, c, p->second);
      it = row.upper_bound(col);
    }
  }

  size_t rank() const { return pivots_.size(); }

  const std::map<std::uint64_t, SparseRow<F>>& pivot_rows() const { return pivots_; }

private:
  std::map<std::uint64_t, SparseRow<F>> pivots_;
};

// Nullspace of a sparse system (rows of coefficients in `cols` unknowns),
// returned as a basis of sparse solution vectors.
template <class F>
std::vector<SparseRow<F>> sparse_nullspace(std::vector<SparseRow<F>> rows,
                                           std::uint64_t cols) {
  // Echelonize: pivot column -> normalized row.
  std::map<std::uint64_t, SparseRow<F>> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.begin()->first);
      if (it == pivots.end()) break;
      F c = F(0) - row.begin()->second;
      row_axpy(row, c, it->second);
    }
    if (row.empty()) continue;
    F lead = row.begin()->second;
    for (auto& [k, v] : row) v = v / lead;
    pivots.emplace(row.begin()->first, std::move(row));
  }
  // Back-substitute so each pivot row is zero on the other pivot columns.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    for (auto jt = pivots.begin(); jt != pivots.end(); ++jt) {
      if (jt->first == it->first) continue;
      auto e = jt->second.find(it->first);
      if (e == jt->second.end()) continue;
      F c = F(0) - e->second;
      row_axpy(jt->second, c, it->second);
    }
  }
  // Free columns parameterize the nullspace.
  std::vector<SparseRow<F>> basis;
  for (std::uint64_t c = 0; c < cols; ++c) {
    if (pivots.count(c)) continue;
    SparseRow<F> sol;
    sol[c] = F(1);
    for (const auto& [pc, row] : pivots) {
      auto e = row.find(c);
      if (e != row.end()) sol[pc] = F(0) - e->second;
    }
    basis.push_back(std::move(sol));
  }
  return basis;
}

// Flatten a graded operator's entries into a sparse row (row-major over the
// full matrix), with Scalar entries promoted to the field F.
template <class F>
SparseRow<F> operator_row(const GradedOperator& op) {
  SparseRow<F> r;
  std::uint64_t cols = op.cols();
  for (const auto& [k, v] : op.entries()) r[k.first * cols + k.second] = F(v);
  return r;
}

inline SparseRow<Rational> operator_row_rational(const GradedOperator& op) {
  SparseRow<Rational> r;
  std::uint64_t cols = op.cols();
  for (const auto& [k, v] : op.entries()) {
    if (v.terms().size() != 1 || v.terms().begin()->first != 0)
      throw std::logic_error("operator entry is not q-free");
    r[k.first * cols + k.second] = v.terms().begin()->second;
  }
  return r;
}

}  // namespace pq
