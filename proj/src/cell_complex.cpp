#include "koszul/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

// Merged-interval union-find, plain (no signs).
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

CellComplex CellComplex::from_records(std::vector<CellRecord> records) {
  CellComplex X;
  const int n = static_cast<int>(records.size());
  X.cells_.resize(n);

  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    const CellRecord& r = records[i];
    if (r.id.empty()) throw ValidationError("cell with empty id");
    if (r.dim < 0)
      throw ValidationError("cell '" + r.id + "' has negative dimension");
    if (!index.emplace(r.id, i).second)
      throw ValidationError("duplicate cell id '" + r.id + "'");
  }

  for (int i = 0; i < n; ++i) {
    const CellRecord& r = records[i];
    Cell& c = X.cells_[i];
    c.id = r.id;
    c.dim = r.dim;
    c.label = r.label;
    if (r.dim == 0 && !r.boundary.empty())
      throw ValidationError("0-cell '" + r.id + "' has a non-empty boundary");
    int sign_sum = 0;
    std::vector<int> seen;
    for (const auto& [fid, sign] : r.boundary) {
      auto it = index.find(fid);
      if (it == index.end())
        throw ValidationError("cell '" + r.id +
                              "' references unknown face '" + fid + "'");
      const int fi = it->second;
      if (records[fi].dim != r.dim - 1)
        throw ValidationError("cell '" + r.id + "' lists face '" + fid +
                              "' of dimension " +
                              std::to_string(records[fi].dim) +
                              ", expected " + std::to_string(r.dim - 1));
      if (sign != 1 && sign != -1)
        throw ValidationError("cell '" + r.id + "' face '" + fid +
                              "' has incidence sign " + std::to_string(sign) +
                              ", expected +1 or -1");
      if (std::find(seen.begin(), seen.end(), fi) != seen.end())
        throw ValidationError("cell '" + r.id + "' lists face '" + fid +
                              "' twice");
      seen.push_back(fi);
      sign_sum += sign;
      c.boundary.emplace_back(fi, sign);
    }
    if (r.dim == 1 && sign_sum != 0)
      throw ValidationError(
          "1-cell '" + r.id +
          "' has endpoint signs that do not cancel; the augmented boundary "
          "would not square to zero");
  }

  for (int i = 0; i < n; ++i)
    for (const auto& [fi, sign] : X.cells_[i].boundary)
      X.cells_[fi].coboundary.emplace_back(i, sign);

  // Boundary-of-boundary vanishes over the integers.
  for (int i = 0; i < n; ++i) {
    if (X.cells_[i].dim < 2) continue;
    std::map<int, int> acc;
    for (const auto& [fi, s] : X.cells_[i].boundary)
      for (const auto& [gi, t] : X.cells_[fi].boundary) acc[gi] += s * t;
    for (const auto& [gi, v] : acc)
      if (v != 0)
        throw ValidationError("boundary of boundary of cell '" +
                              X.cells_[i].id + "' is nonzero at '" +
                              X.cells_[gi].id + "'");
  }

  X.dim_ = -1;
  for (const Cell& c : X.cells_) X.dim_ = std::max(X.dim_, c.dim);
  X.by_dim_.assign(std::max(X.dim_ + 1, 0), {});
  for (int i = 0; i < n; ++i) X.by_dim_[X.cells_[i].dim].push_back(i);

  X.sorted_by_id_.resize(n);
  std::iota(X.sorted_by_id_.begin(), X.sorted_by_id_.end(), 0);
  std::sort(X.sorted_by_id_.begin(), X.sorted_by_id_.end(),
            [&](int a, int b) { return X.cells_[a].id < X.cells_[b].id; });
  return X;
}

int CellComplex::index_of(const std::string& id) const {
  auto it = std::lower_bound(
      sorted_by_id_.begin(), sorted_by_id_.end(), id,
      [&](int a, const std::string& s) { return cells_[a].id < s; });
  if (it != sorted_by_id_.end() && cells_[*it].id == id) return *it;
  return -1;
}

const std::vector<int>& CellComplex::cells_of_dim(int k) const {
  static const std::vector<int> kEmpty;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[k];
}

CellMask CellComplex::closure_mask(int i) const {
  CellMask mask(size(), 0);
  std::vector<int> stack = {i};
  mask[i] = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (const auto& [f, s] : cells_[c].boundary)
      if (!mask[f]) {
        mask[f] = 1;
        stack.push_back(f);
      }
  }
  return mask;
}

CellMask CellComplex::up_set_mask(int i) const {
  CellMask mask(size(), 0);
  std::vector<int> stack = {i};
  mask[i] = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (const auto& [f, s] : cells_[c].coboundary)
      if (!mask[f]) {
        mask[f] = 1;
        stack.push_back(f);
      }
  }
  return mask;
}

bool CellComplex::leq(int a, int b) const { return closure_mask(b)[a] != 0; }

std::vector<int> CellComplex::star(int i) const {
  const CellMask mask = up_set_mask(i);
  std::vector<int> out;
  for (int c = 0; c < size(); ++c)
    if (mask[c]) out.push_back(c);
  return out;
}

bool CellComplex::is_pure() const {
  if (size() == 0) return true;
  CellMask below_top(size(), 0);
  std::vector<int> stack;
  for (int i : cells_of_dim(dim_)) {
    below_top[i] = 1;
    stack.push_back(i);
  }
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (const auto& [f, s] : cells_[c].boundary)
      if (!below_top[f]) {
        below_top[f] = 1;
        stack.push_back(f);
      }
  }
  for (int i = 0; i < size(); ++i)
    if (!below_top[i]) return false;
  return true;
}

bool CellComplex::is_codim1_connected() const {
  if (!is_pure())
    throw HypothesisError(
        "codimension-one connectivity is only defined for pure complexes");
  if (size() == 0) return true;
  if (dim_ == 0) return size() <= 1;

  // One block in the incidence graph on top- and codimension-one cells.
  const std::vector<int>& tops = cells_of_dim(dim_);
  const std::vector<int>& subs = cells_of_dim(dim_ - 1);
  UnionFind uf(size());
  for (int t : tops)
    for (const auto& [f, s] : cells_[t].boundary) uf.unite(t, f);
  const int root = uf.find(tops[0]);
  for (int t : tops)
    if (uf.find(t) != root) return false;
  for (int f : subs)
    if (uf.find(f) != root) return false;
  return true;
}

CellMask CellComplex::skeleton(int k) const {
  CellMask mask(size(), 0);
  for (int i = 0; i < size(); ++i) mask[i] = cells_[i].dim <= k ? 1 : 0;
  return mask;
}

CellMask CellComplex::star_complement(int i) const {
  CellMask mask = up_set_mask(i);
  for (char& m : mask) m = m ? 0 : 1;
  return mask;
}

CellComplex CellComplex::induced(const CellMask& mask) const {
  require_subcomplex(*this, mask);
  std::vector<CellRecord> records;
  for (int i = 0; i < size(); ++i) {
    if (!mask[i]) continue;
    CellRecord r;
    r.id = cells_[i].id;
    r.dim = cells_[i].dim;
    r.label = cells_[i].label;
    for (const auto& [f, s] : cells_[i].boundary)
      r.boundary.emplace_back(cells_[f].id, s);
    records.push_back(std::move(r));
  }
  return from_records(std::move(records));
}

std::vector<CellRecord> CellComplex::to_records() const {
  std::vector<CellRecord> records;
  for (const Cell& c : cells_) {
    CellRecord r;
    r.id = c.id;
    r.dim = c.dim;
    r.label = c.label;
    for (const auto& [f, s] : c.boundary)
      r.boundary.emplace_back(cells_[f].id, s);
    records.push_back(std::move(r));
  }
  return records;
}

void require_subcomplex(const CellComplex& X, const CellMask& mask) {
  if (static_cast<int>(mask.size()) != X.size())
    throw ValidationError("subcomplex mask has the wrong length");
  for (int i = 0; i < X.size(); ++i) {
    if (!mask[i]) continue;
    for (const auto& [f, s] : X.cell(i).boundary)
      if (!mask[f])
        throw ValidationError("selection is not downward-closed: keeps '" +
                              X.cell(i).id + "' but not its face '" +
                              X.cell(f).id + "'");
  }
}

void require_hypotheses(const CellComplex& X) {
  if (!X.is_pure())
    throw HypothesisError("complex is not pure: some cell is not a face of a " +
                          std::to_string(X.dimension()) + "-cell");
  if (!X.is_codim1_connected())
    throw HypothesisError(
        "complex is not connected through codimension-one faces");
}

RankedPoset face_poset(const CellComplex& X, bool adjoin_top) {
  if (adjoin_top) require_hypotheses(X);
  RankedPoset P;
  const int n = X.size();
  P.has_top = adjoin_top;
  P.elements = n + 1 + (adjoin_top ? 1 : 0);
  P.rank.assign(P.elements, 0);
  P.lower.assign(P.elements, {});
  P.name.assign(P.elements, "");
  P.name[0] = "0";

  for (int i = 0; i < n; ++i) {
    P.rank[i + 1] = X.cell(i).dim + 1;
    P.name[i + 1] = X.cell(i).id;
    if (X.cell(i).dim == 0) {
      P.lower[i + 1] = {0};
    } else {
      for (const auto& [f, s] : X.cell(i).boundary)
        P.lower[i + 1].push_back(f + 1);
      std::sort(P.lower[i + 1].begin(), P.lower[i + 1].end());
    }
  }
  P.height = 0;
  for (int r : P.rank) P.height = std::max(P.height, r);
  if (adjoin_top) {
    const int top = P.elements - 1;
    P.rank[top] = X.dimension() + 2;
    P.height = P.rank[top];
    // A fresh name; suffix until it collides with no cell id.
    std::string name = "top";
    while (X.index_of(name) >= 0) name = "^" + name;
    P.name[top] = name;
    for (int i : X.cells_of_dim(X.dimension())) P.lower[top].push_back(i + 1);
    if (X.size() == 0) P.lower[top] = {0};
    std::sort(P.lower[top].begin(), P.lower[top].end());
  }
  return P;
}

}  // namespace koszul
