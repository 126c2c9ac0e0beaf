#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/fields.hpp"

namespace koszul {

// ---------------------------------------------------------------------------
// Dense matrices over an exact field.
// ---------------------------------------------------------------------------

template <class F>
void row_axpy(const F& f, typename F::Elem* y, const typename F::Elem* x,
              const typename F::Elem& c, int n) {
  for (int i = 0; i < n; ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
}

inline void row_axpy(const PrimeField& f, uint32_t* y, const uint32_t* x,
                     const uint32_t& c, int n) {
  f.kernels().axpy(y, x, c, static_cast<size_t>(n), f.modulus());
}

template <class F>
void row_scale(const F& f, typename F::Elem* x, const typename F::Elem& c, int n) {
  for (int i = 0; i < n; ++i) x[i] = f.mul(c, x[i]);
}

inline void row_scale(const PrimeField& f, uint32_t* x, const uint32_t& c, int n) {
  f.kernels().scale(x, c, static_cast<size_t>(n), f.modulus());
}

template <class F>
class DenseMat {
 public:
  using Elem = typename F::Elem;

  DenseMat(F f, int rows, int cols)
      : field_(std::move(f)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, field_.zero()) {}

  static DenseMat identity(F f, int n) {
    DenseMat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  const F& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Elem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Elem* row(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }
  const Elem* row(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  bool operator==(const DenseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!field_.eq(a_[i], o.a_[i])) return false;
    return true;
  }

  DenseMat transpose() const {
    DenseMat t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  DenseMat multiply(const DenseMat& o) const {
    assert(cols_ == o.rows_);
    DenseMat out(field_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        const Elem& v = at(r, k);
        if (field_.is_zero(v)) continue;
        row_axpy(field_, out.row(r), o.row(k), v, o.cols_);
      }
    return out;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<Elem> out(rows_, field_.zero());
    for (int r = 0; r < rows_; ++r) {
      Elem acc = field_.zero();
      for (int c = 0; c < cols_; ++c)
        if (!field_.is_zero(at(r, c))) acc = field_.add(acc, field_.mul(at(r, c), v[c]));
      out[r] = acc;
    }
    return out;
  }

  // In-place Gauss-Jordan reduced row echelon form. Pivot selection is the
  // first nonzero entry in the current column. Returns pivot column indices.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
      int pr = -1;
      for (int r = lead; r < rows_; ++r)
        if (!field_.is_zero(at(r, col))) { pr = r; break; }
      if (pr < 0) continue;
      if (pr != lead)
        for (int c = 0; c < cols_; ++c) std::swap(at(pr, c), at(lead, c));
      Elem piv = at(lead, col);
      if (!field_.is_one(piv)) row_scale(field_, row(lead), field_.inv(piv), cols_);
      for (int r = 0; r < rows_; ++r) {
        if (r == lead || field_.is_zero(at(r, col))) continue;
        Elem factor = field_.neg(at(r, col));
        row_axpy(field_, row(r), row(lead), factor, cols_);
        at(r, col) = field_.zero();  // clear residue exactly
      }
      pivots.push_back(col);
      ++lead;
    }
    return pivots;
  }

  int rank() const {
    DenseMat copy = *this;
    return static_cast<int>(copy.rref().size());
  }

  // Columns form a basis of the null space {v : A v = 0}.
  DenseMat kernel_basis() const {
    DenseMat r = *this;
    std::vector<int> pivots = r.rref();
    std::vector<char> is_pivot(cols_, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    DenseMat out(field_, cols_, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
      int fc = free_cols[j];
      out.at(fc, static_cast<int>(j)) = field_.one();
      for (size_t t = 0; t < pivots.size(); ++t)
        out.at(pivots[t], static_cast<int>(j)) = field_.neg(r.at(static_cast<int>(t), fc));
    }
    return out;
  }

 private:
  F field_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

// ---------------------------------------------------------------------------
// Quotient of F^ambient by the column span of a matrix.
// ---------------------------------------------------------------------------

template <class F>
struct QuotientSpace {
  using Elem = typename F::Elem;

  F field;
  int ambient;
  DenseMat<F> subspace;        // the spanning columns as given
  std::vector<int> pivot_coords;
  std::vector<int> free_coords;
  DenseMat<F> row_echelon;     // rref of subspace^T: rank x ambient
  DenseMat<F> projection;      // dim x ambient; kills the subspace

  int dim() const { return static_cast<int>(free_coords.size()); }

  std::vector<Elem> project(const std::vector<Elem>& v) const {
    return projection.apply(v);
  }
};

// Quotient F^m / colspan(M) with an explicit projection. The projection of a
// vector reduces its pivot coordinates by the echelonized subspace basis and
// reads off the free coordinates, so projection(subspace) = 0 exactly and the
// free coordinates map to themselves.
template <class F>
QuotientSpace<F> cokernel(const DenseMat<F>& m) {
  const F& f = m.field();
  int ambient = m.rows();
  DenseMat<F> r = m.transpose();
  std::vector<int> pivots = r.rref();
  int rank = static_cast<int>(pivots.size());
  std::vector<char> is_pivot(ambient, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<int> free_coords;
  for (int c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free_coords.push_back(c);

  DenseMat<F> echelon(f, rank, ambient);
  for (int t = 0; t < rank; ++t)
    for (int c = 0; c < ambient; ++c) echelon.at(t, c) = r.at(t, c);

  int dim = static_cast<int>(free_coords.size());
  DenseMat<F> proj(f, dim, ambient);
  for (int a = 0; a < dim; ++a) proj.at(a, free_coords[a]) = f.one();
  for (int t = 0; t < rank; ++t)
    for (int a = 0; a < dim; ++a)
      proj.at(a, pivots[t]) = f.neg(echelon.at(t, free_coords[a]));

  return QuotientSpace<F>{f, ambient, m, std::move(pivots), std::move(free_coords),
                          std::move(echelon), std::move(proj)};
}

// Map on quotients induced by f_map : F^src.ambient -> F^dst.ambient.
// Verifies exactly that f_map carries the source subspace into the target
// subspace; otherwise the map does not descend and construction is rejected.
template <class F>
DenseMat<F> induced_map(const DenseMat<F>& f_map, const QuotientSpace<F>& src,
                        const QuotientSpace<F>& dst) {
  const F& f = f_map.field();
  if (f_map.cols() != src.ambient || f_map.rows() != dst.ambient)
    throw IllDefinedMapError("induced_map: shape mismatch");
  DenseMat<F> mapped = f_map.multiply(src.subspace);
  DenseMat<F> residue = dst.projection.multiply(mapped);
  if (!residue.is_zero())
    throw IllDefinedMapError("induced_map: map does not preserve the subspace");

  DenseMat<F> incl(f, src.ambient, src.dim());
  for (int j = 0; j < src.dim(); ++j) incl.at(src.free_coords[j], j) = f.one();
  return dst.projection.multiply(f_map.multiply(incl));
}

// ---------------------------------------------------------------------------
// Sparse columns with left-to-right reduction (exact rank over any field).
// ---------------------------------------------------------------------------

template <class F>
struct SparseVec {
  using Elem = typename F::Elem;
  // strictly increasing indices
  std::vector<std::pair<int64_t, Elem>> nz;

  bool empty() const { return nz.empty(); }
  int64_t low() const { return nz.back().first; }
};

template <class F>
SparseVec<F> sparse_axpy(const F& f, const SparseVec<F>& y, const SparseVec<F>& x,
                         const typename F::Elem& c) {
  SparseVec<F> out;
  out.nz.reserve(y.nz.size() + x.nz.size());
  size_t i = 0, j = 0;
  while (i < y.nz.size() || j < x.nz.size()) {
    if (j >= x.nz.size() || (i < y.nz.size() && y.nz[i].first < x.nz[j].first)) {
      out.nz.push_back(y.nz[i++]);
    } else if (i >= y.nz.size() || x.nz[j].first < y.nz[i].first) {
      auto v = f.mul(c, x.nz[j].second);
      if (!f.is_zero(v)) out.nz.emplace_back(x.nz[j].first, std::move(v));
      ++j;
    } else {
      auto v = f.add(y.nz[i].second, f.mul(c, x.nz[j].second));
      if (!f.is_zero(v)) out.nz.emplace_back(y.nz[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

// Standard low-pivot column reduction: feed columns one at a time; rank is the
// number of independent ones. Reduced pivot columns are normalized to low
// coefficient 1 and kept for later reductions.
template <class F>
class SparseReducer {
 public:
  explicit SparseReducer(F f) : field_(std::move(f)) {}

  // Returns true when the column was independent of those seen so far.
  bool add(SparseVec<F> v) {
    while (!v.empty()) {
      auto it = pivots_.find(v.low());
      if (it == pivots_.end()) {
        auto lead = v.nz.back().second;
        if (!field_.is_one(lead)) {
          auto s = field_.inv(lead);
          for (auto& [idx, val] : v.nz) val = field_.mul(s, val);
        }
        pivots_.emplace(v.low(), std::move(v));
        ++rank_;
        return true;
      }
      v = sparse_axpy(field_, v, it->second, field_.neg(v.nz.back().second));
    }
    return false;
  }

  int rank() const { return rank_; }

 private:
  F field_;
  std::unordered_map<int64_t, SparseVec<F>> pivots_;
  int rank_ = 0;
};

// Matrices from (row, col, integer coefficient) triplets; columns materialized.
template <class F>
std::vector<SparseVec<F>> columns_from_triplets(
    const F& f, int cols, const std::vector<std::tuple<int, int, int>>& trips) {
  std::vector<std::vector<std::pair<int64_t, typename F::Elem>>> acc(cols);
  for (const auto& [r, c, v] : trips) {
    auto e = f.from_int(v);
    if (!f.is_zero(e)) acc[c].emplace_back(r, std::move(e));
  }
  std::vector<SparseVec<F>> out(cols);
  for (int c = 0; c < cols; ++c) {
    std::sort(acc[c].begin(), acc[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicate row indices exactly
    for (auto& [idx, val] : acc[c]) {
      auto& nz = out[c].nz;
      if (!nz.empty() && nz.back().first == idx)
        nz.back().second = f.add(nz.back().second, val);
      else
        nz.emplace_back(idx, std::move(val));
    }
    auto& nz = out[c].nz;
    nz.erase(std::remove_if(nz.begin(), nz.end(),
                            [&](const auto& p) { return f.is_zero(p.second); }),
             nz.end());
  }
  return out;
}

inline constexpr int kDenseRankLimit = 2048;

// Exact rank of sparse columns. GF(p) matrices small enough to densify go
// through the dense SIMD-backed elimination; everything else uses the sparse
// reduction. Both routes are exact and equivalence-tested against each other.
template <class F>
int exact_rank(const F& f, const std::vector<SparseVec<F>>& cols, int rows) {
  if constexpr (F::is_prime_field) {
    int ncols = static_cast<int>(cols.size());
    if (rows <= kDenseRankLimit && ncols <= kDenseRankLimit) {
      DenseMat<F> m(f, rows, ncols);
      for (int c = 0; c < ncols; ++c)
        for (const auto& [r, v] : cols[c].nz) m.at(static_cast<int>(r), c) = v;
      return m.rank();
    }
  }
  SparseReducer<F> red(f);
  for (const auto& col : cols) red.add(col);
  return red.rank();
}

}  // namespace koszul
