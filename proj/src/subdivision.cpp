#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "koszul/cell_complex.hpp"

namespace koszul {

SubdivisionResult barycentric_subdivision(const CellComplex& X) {
  const int n = X.size();
  // Chains of the face order, enumerated by depth-first extension downward:
  // a chain is stored as indices of X-cells in decreasing dimension.
  std::vector<std::vector<int>> chains;
  std::vector<CellMask> closures;
  closures.reserve(n);
  for (int i = 0; i < n; ++i) closures.push_back(X.closure_mask(i));

  // Enumerate by top element, then extend with strictly smaller cells of
  // the closure. Deterministic: cells in input order, faces in input order.
  std::vector<std::vector<int>> below(n);  // strictly smaller cells, sorted
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && closures[i][j]) below[i].push_back(j);

  std::vector<int> current;
  auto extend = [&](auto&& self, int last) -> void {
    chains.push_back(current);
    for (int next : below[last]) {
      current.push_back(next);
      self(self, next);
      current.pop_back();
    }
  };
  for (int i = 0; i < n; ++i) {
    current = {i};
    extend(extend, i);
  }

  // Chains are keyed by their cell sequences for boundary lookup.
  std::map<std::vector<int>, int> chain_index;
  for (int c = 0; c < static_cast<int>(chains.size()); ++c)
    chain_index.emplace(chains[c], c);

  // Ids: member ids joined by '|'; duplicates (possible only when cell ids
  // already contain '|') get a deterministic '@k' suffix.
  std::vector<std::string> ids(chains.size());
  {
    std::map<std::string, int> used;
    for (size_t c = 0; c < chains.size(); ++c) {
      std::string id;
      for (size_t t = 0; t < chains[c].size(); ++t) {
        if (t) id += '|';
        id += X.cell(chains[c][t]).id;
      }
      auto [it, fresh] = used.emplace(id, 0);
      if (!fresh) id += "@" + std::to_string(++it->second);
      ids[c] = id;
    }
  }

  std::vector<CellRecord> records(chains.size());
  SubdivisionResult out;
  out.carrier.resize(chains.size());
  out.vertex_of.assign(n, -1);
  for (size_t c = 0; c < chains.size(); ++c) {
    CellRecord& r = records[c];
    r.id = ids[c];
    r.dim = static_cast<int>(chains[c].size()) - 1;
    // The chain is stored in decreasing dimension; its largest member sits
    // at the front.
    out.carrier[c] = chains[c].front();
    if (r.dim == 0) out.vertex_of[chains[c][0]] = static_cast<int>(c);
    for (size_t drop = 0; drop < chains[c].size() && r.dim > 0; ++drop) {
      std::vector<int> face = chains[c];
      face.erase(face.begin() + static_cast<long>(drop));
      const int fi = chain_index.at(face);
      // Simplex boundary of the chain as an ordered vertex list: dropping
      // position `drop` contributes sign (-1)^drop.
      r.boundary.emplace_back(ids[fi], drop % 2 == 0 ? 1 : -1);
    }
  }
  out.complex = CellComplex::from_records(std::move(records));

  // from_records preserves record order, so indices computed above remain
  // valid; re-map through ids defensively anyway.
  for (size_t c = 0; c < chains.size(); ++c) {
    const int idx = out.complex.index_of(ids[c]);
    if (idx != static_cast<int>(c))
      throw std::logic_error("subdivision cell order changed unexpectedly");
  }
  return out;
}
}  // namespace koszul
