#include "koszul/glued.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

constexpr int kMaxSimplexVertices = 20;

// Parity (0 even, 1 odd) of the permutation that sorts `names`.
int sort_parity(const std::vector<std::string>& names) {
  int inversions = 0;
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] > names[j]) ++inversions;
  return inversions & 1;
}

void check_name(const std::string& name, const std::string& context) {
  if (name.empty())
    throw ValidationError(context + " contains an empty vertex name");
  if (name.find('.') != std::string::npos)
    throw ValidationError(context + " contains vertex name '" + name +
                          "' with a '.', which is reserved for cell ids");
}

void check_tuple(const std::vector<std::string>& tuple,
                 const std::string& context) {
  if (tuple.empty()) throw ValidationError(context + " is empty");
  for (const std::string& name : tuple) check_name(name, context);
  for (size_t i = 0; i < tuple.size(); ++i)
    for (size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] == tuple[j])
        throw ValidationError(context + " repeats vertex name '" + tuple[i] +
                              "'");
}

// Union-find over face instances carrying a relative orientation parity:
// rel[a] is the parity of instance a against its parent.
struct SignedUnionFind {
  std::vector<int> parent;
  std::vector<int> rel;
  explicit SignedUnionFind(int n) : parent(n), rel(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  // Returns (root, parity of a relative to root).
  std::pair<int, int> find(int a) {
    if (parent[a] == a) return {a, 0};
    auto [root, p] = find(parent[a]);
    parent[a] = root;
    rel[a] = (rel[a] + p) & 1;
    return {root, rel[a]};
  }
  // Declare orient(a) = (-1)^parity * orient(b). Returns false on an
  // orientation conflict with previous declarations.
  bool unite(int a, int b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return ((pa + pb) & 1) == parity;
    // Root of a class is its minimum creation index.
    if (ra < rb) {
      parent[rb] = ra;
      rel[rb] = (pa + pb + parity) & 1;
    } else {
      parent[ra] = rb;
      rel[ra] = (pa + pb + parity) & 1;
    }
    return true;
  }
};

}  // namespace

CellComplex build_glued_simplicial(const GluedSimplicialSpec& spec) {
  const int ns = static_cast<int>(spec.simplices.size());
  for (int s = 0; s < ns; ++s) {
    check_tuple(spec.simplices[s], "simplex " + std::to_string(s));
    if (static_cast<int>(spec.simplices[s].size()) > kMaxSimplexVertices + 1)
      throw ValidationError("simplex " + std::to_string(s) + " has " +
                            std::to_string(spec.simplices[s].size()) +
                            " vertices; at most " +
                            std::to_string(kMaxSimplexVertices + 1) +
                            " are supported");
  }

  // Face instances: one per (simplex, non-empty vertex-position subset),
  // created simplex by simplex, subsets ordered by (size, bitmask value).
  // This creation order makes union-find roots, and therefore representative
  // ids, deterministic.
  std::vector<std::pair<int, std::uint32_t>> inst;     // instance -> (s, mask)
  std::vector<std::vector<int>> inst_of(ns);           // [s][mask] -> instance
  for (int s = 0; s < ns; ++s) {
    const int nv = static_cast<int>(spec.simplices[s].size());
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << nv); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(),
              [](std::uint32_t a, std::uint32_t b) {
                const int ca = __builtin_popcount(a);
                const int cb = __builtin_popcount(b);
                return ca != cb ? ca < cb : a < b;
              });
    inst_of[s].assign(1u << nv, -1);
    for (std::uint32_t m : masks) {
      inst_of[s][m] = static_cast<int>(inst.size());
      inst.emplace_back(s, m);
    }
  }
  const int ni = static_cast<int>(inst.size());
  SignedUnionFind uf(ni);

  auto names_of = [&](int s, std::uint32_t mask) {
    std::vector<std::string> names;
    const int nv = static_cast<int>(spec.simplices[s].size());
    for (int p = 0; p < nv; ++p)
      if (mask & (1u << p)) names.push_back(spec.simplices[s][p]);
    return names;
  };

  auto conflict = [&](int a, int b) -> ValidationError {
    const auto an = names_of(inst[a].first, inst[a].second);
    const auto bn = names_of(inst[b].first, inst[b].second);
    std::string msg = "orientation conflict: faces (";
    for (size_t i = 0; i < an.size(); ++i)
      msg += (i ? "," : "") + an[i];
    msg += ") and (";
    for (size_t i = 0; i < bn.size(); ++i)
      msg += (i ? "," : "") + bn[i];
    msg += ") are glued with inconsistent signs";
    return ValidationError(msg);
  };

  // Faces in different simplices listing the same vertex names are the same
  // face: shared names glue implicitly. The relative orientation compares
  // each instance's position order against the common name-sorted order.
  {
    std::map<std::vector<std::string>, std::pair<int, int>> first_seen;
    for (int i = 0; i < ni; ++i) {
      std::vector<std::string> names = names_of(inst[i].first, inst[i].second);
      const int parity = sort_parity(names);
      std::sort(names.begin(), names.end());
      auto [it, fresh] = first_seen.emplace(std::move(names),
                                            std::make_pair(i, parity));
      if (!fresh) {
        const auto [j, pj] = it->second;
        if (!uf.unite(i, j, (parity + pj) & 1)) throw conflict(i, j);
      }
    }
  }

  // Resolve a face tuple to the earliest simplex containing all its names.
  auto resolve = [&](const std::vector<std::string>& tuple,
                     const std::string& context) -> std::pair<int, std::uint32_t> {
    for (int s = 0; s < ns; ++s) {
      std::uint32_t mask = 0;
      size_t found = 0;
      const int nv = static_cast<int>(spec.simplices[s].size());
      for (int p = 0; p < nv; ++p)
        for (const std::string& name : tuple)
          if (spec.simplices[s][p] == name) {
            mask |= 1u << p;
            ++found;
          }
      if (found == tuple.size()) return {s, mask};
    }
    std::string msg = context + ": no simplex has a face with vertices (";
    for (size_t i = 0; i < tuple.size(); ++i) msg += (i ? "," : "") + tuple[i];
    msg += ")";
    throw ValidationError(msg);
  };

  for (size_t k = 0; k < spec.identifications.size(); ++k) {
    const std::string context = "identification " + std::to_string(k);
    const std::vector<std::string>& t1 = spec.identifications[k][0];
    const std::vector<std::string>& t2 = spec.identifications[k][1];
    check_tuple(t1, context + " first tuple");
    check_tuple(t2, context + " second tuple");
    if (t1.size() != t2.size())
      throw ValidationError(context + " pairs tuples of different lengths " +
                            std::to_string(t1.size()) + " and " +
                            std::to_string(t2.size()));
    const auto [s1, full1] = resolve(t1, context);
    const auto [s2, full2] = resolve(t2, context);
    const size_t len = t1.size();

    // The gluing matches the tuples position by position, and restricts to
    // every sub-face. Relative orientation of the position-ordered instances
    // is read off by routing both through the tuple order.
    for (std::uint32_t sub = 1; sub < (1u << len); ++sub) {
      std::vector<std::string> part1, part2;
      for (size_t i = 0; i < len; ++i)
        if (sub & (1u << i)) {
          part1.push_back(t1[i]);
          part2.push_back(t2[i]);
        }
      const auto [rs1, m1] = resolve(part1, context);
      const auto [rs2, m2] = resolve(part2, context);
      const int i1 = inst_of[rs1][m1];
      const int i2 = inst_of[rs2][m2];
      const int parity = (sort_parity(names_of(rs1, m1)) + sort_parity(part1) +
                          sort_parity(part2) + sort_parity(names_of(rs2, m2))) &
                         1;
      if (!uf.unite(i1, i2, parity)) throw conflict(i1, i2);
    }
    (void)s1;
    (void)full1;
    (void)s2;
    (void)full2;
  }

  // Two vertices of one simplex in the same class would collapse the simplex.
  for (int s = 0; s < ns; ++s) {
    const int nv = static_cast<int>(spec.simplices[s].size());
    for (int p = 0; p < nv; ++p)
      for (int q = p + 1; q < nv; ++q)
        if (uf.find(inst_of[s][1u << p]).first ==
            uf.find(inst_of[s][1u << q]).first)
          throw ValidationError(
              "identifications collapse simplex " + std::to_string(s) +
              " onto itself: vertices '" + spec.simplices[s][p] + "' and '" +
              spec.simplices[s][q] + "' become equal");
  }

  // One cell per class, represented by its root (earliest) instance.
  std::vector<int> roots;
  for (int i = 0; i < ni; ++i)
    if (uf.find(i).first == i) roots.push_back(i);
  std::stable_sort(roots.begin(), roots.end(), [&](int a, int b) {
    return __builtin_popcount(inst[a].second) <
           __builtin_popcount(inst[b].second);
  });

  auto id_of = [&](int root) {
    const auto names = names_of(inst[root].first, inst[root].second);
    std::string id;
    for (size_t i = 0; i < names.size(); ++i) id += (i ? "." : "") + names[i];
    return id;
  };

  std::vector<CellRecord> records;
  records.reserve(roots.size());
  for (int root : roots) {
    const auto [s, mask] = inst[root];
    CellRecord r;
    r.id = id_of(root);
    r.dim = __builtin_popcount(mask) - 1;
    std::vector<int> positions;
    const int nv = static_cast<int>(spec.simplices[s].size());
    for (int p = 0; p < nv; ++p)
      if (mask & (1u << p)) positions.push_back(p);
    for (size_t drop = 0; drop < positions.size() && r.dim > 0; ++drop) {
      const std::uint32_t fmask = mask & ~(1u << positions[drop]);
      auto [froot, parity] = uf.find(inst_of[s][fmask]);
      int sign = (drop % 2 == 0) ? 1 : -1;
      if (parity) sign = -sign;
      r.boundary.emplace_back(id_of(froot), sign);
    }
    records.push_back(std::move(r));
  }
  return CellComplex::from_records(std::move(records));
}

}  // namespace koszul
