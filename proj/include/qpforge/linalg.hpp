// Exact dense-ish row reduction over Q(z). Rows are sparse coefficient
// vectors; the reducer keeps a reduced row echelon basis at all times, so the
// stored rows are canonical for the row space regardless of insertion order.
// The elimination kernel is deliberately self-contained so it can be swapped.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qpforge/scalar.hpp"

namespace qpforge {

// Sorted, duplicate-free (index, coefficient) pairs; zero coefficients pruned.
using SparseVec = std::vector<std::pair<uint32_t, Cyc3>>;

inline void vec_prune(SparseVec& v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const auto& p) { return p.second.is_zero(); }),
          v.end());
}

// dst += c * src
inline void vec_axpy(SparseVec& dst, const Cyc3& c, const SparseVec& src) {
  if (c.is_zero() || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() && b != src.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (a->first > b->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Cyc3 s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, dst.end());
  for (; b != src.end(); ++b) out.emplace_back(b->first, c * b->second);
  vec_prune(out);
  dst = std::move(out);
}

inline void vec_scale(SparseVec& v, const Cyc3& c) {
  if (c.is_zero()) {
    v.clear();
    return;
  }
  for (auto& [i, x] : v) x *= c;
}

inline const Cyc3* vec_get(const SparseVec& v, uint32_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& p, uint32_t i) { return p.first < i; });
  return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

class RowReducer {
 public:
  // Reduce v against the current pivot rows without inserting it.
  SparseVec reduce(SparseVec v) const {
    for (auto it = rows_.begin(); it != rows_.end() && !v.empty();) {
      if (it->first < v.front().first) {
        ++it;
        continue;
      }
      if (const Cyc3* c = vec_get(v, it->first)) vec_axpy(v, -*c, it->second);
      ++it;
    }
    return v;
  }

  // Insert a row; returns the pivot column if the row was independent.
  std::optional<uint32_t> insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return std::nullopt;
    uint32_t pivot = v.front().first;
    vec_scale(v, cyc3_inv(v.front().second));
    // back-substitute, keeping earlier rows fully reduced
    for (auto& [p, row] : rows_)
      if (const Cyc3* c = vec_get(row, pivot)) vec_axpy(row, -*c, v);
    rows_.emplace(pivot, std::move(v));
    return pivot;
  }

  bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

  size_t rank() const { return rows_.size(); }
  const std::map<uint32_t, SparseVec>& rows() const { return rows_; }
  bool is_pivot(uint32_t col) const { return rows_.count(col) != 0; }

 private:
  std::map<uint32_t, SparseVec> rows_;  // pivot column -> unit-leading reduced row
};

// Null space of the system {row . x = 0}. One basis vector per free column,
// in ascending column order, with a 1 at its own free column and 0 at every
// other free column. `free_cols`, when given, receives those columns.
inline std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& equations,
                                           uint32_t ncols,
                                           std::vector<uint32_t>* free_cols = nullptr) {
  RowReducer red;
  for (const auto& r : equations) red.insert(r);
  std::vector<SparseVec> basis;
  for (uint32_t col = 0; col < ncols; ++col) {
    if (red.is_pivot(col)) continue;
    SparseVec v{{col, Cyc3::one()}};
    for (const auto& [p, row] : red.rows())
      if (const Cyc3* c = vec_get(row, col)) vec_axpy(v, -*c, SparseVec{{p, Cyc3::one()}});
    if (free_cols) free_cols->push_back(col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Minimal dense matrix over Q(z) for module representations. Entries are
// indexed (row, col); apply() is matrix * column-vector.
struct DenseMat {
  size_t rows = 0, cols = 0;
  std::vector<Cyc3> entries;

  DenseMat() = default;
  DenseMat(size_t r, size_t c) : rows(r), cols(c), entries(r * c) {}

  Cyc3& at(size_t r, size_t c) { return entries[r * cols + c]; }
  const Cyc3& at(size_t r, size_t c) const { return entries[r * cols + c]; }

  std::vector<Cyc3> apply(const std::vector<Cyc3>& v) const {
    std::vector<Cyc3> out(rows);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c)
        if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
  }

  bool is_zero() const {
    for (const auto& e : entries)
      if (!e.is_zero()) return false;
    return true;
  }

  static DenseMat product(const DenseMat& a, const DenseMat& b) {
    DenseMat out(a.rows, b.cols);
    for (size_t r = 0; r < a.rows; ++r)
      for (size_t k = 0; k < a.cols; ++k) {
        if (a.at(r, k).is_zero()) continue;
        for (size_t c = 0; c < b.cols; ++c)
          if (!b.at(k, c).is_zero()) out.at(r, c) += a.at(r, k) * b.at(k, c);
      }
    return out;
  }
};

}  // namespace qpforge
