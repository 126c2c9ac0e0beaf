#include "koszul/homology.hpp"

#include <algorithm>
#include <map>
#include <type_traits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

namespace {

// Shared scaffolding for absolute and relative (co)chain ranks: `drop`
// selects a downward-closed subcomplex whose cells are removed from every
// degree (null keeps everything).
template <class F>
struct RankEngine {
  const F& f;
  const CellComplex& X;
  std::vector<std::vector<int>> kept;  // per degree, global cell indices
  std::vector<int> pos;                // global index -> row/col position

  RankEngine(const F& f_in, const CellComplex& X_in, const CellMask* drop)
      : f(f_in), X(X_in) {
    const int d = X.dimension();
    kept.assign(d + 1, {});
    pos.assign(X.size(), -1);
    for (int k = 0; k <= d; ++k)
      for (int i : X.cells_of_dim(k))
        if (!drop || !(*drop)[i]) {
          pos[i] = static_cast<int>(kept[k].size());
          kept[k].push_back(i);
        }
  }

  long long count(int k) const {
    return (k >= 0 && k < static_cast<int>(kept.size()))
               ? static_cast<long long>(kept[k].size())
               : 0;
  }

  // Rank of the boundary map from degree k to degree k-1, built from the
  // stored boundary lists (one column per k-cell).
  int rank_boundary(int k) const {
    if (k < 1 || k > X.dimension()) return 0;
    std::vector<std::tuple<int, int, int>> trips;
    for (size_t c = 0; c < kept[k].size(); ++c)
      for (const auto& [fi, s] : X.cell(kept[k][c]).boundary)
        if (pos[fi] >= 0) trips.emplace_back(pos[fi], static_cast<int>(c), s);
    auto cols =
        columns_from_triplets(f, static_cast<int>(kept[k].size()), trips);
    return exact_rank(f, cols, static_cast<int>(kept[k - 1].size()));
  }

  // Rank of the coboundary map from degree k to degree k+1, built from the
  // stored coboundary lists (one column per k-cell). This is the transpose
  // of rank_boundary(k+1) assembled and eliminated independently.
  int rank_coboundary(int k) const {
    if (k < 0 || k + 1 > X.dimension()) return 0;
    std::vector<std::tuple<int, int, int>> trips;
    for (size_t c = 0; c < kept[k].size(); ++c)
      for (const auto& [ci, s] : X.cell(kept[k][c]).coboundary)
        if (pos[ci] >= 0) trips.emplace_back(pos[ci], static_cast<int>(c), s);
    auto cols =
        columns_from_triplets(f, static_cast<int>(kept[k].size()), trips);
    return exact_rank(f, cols, static_cast<int>(kept[k + 1].size()));
  }
};

template <class F>
std::vector<long long> homology_dims(const F& f, const CellComplex& X,
                                     const CellMask* drop, bool reduced) {
  const int d = X.dimension();
  if (d < 0) return {};
  RankEngine<F> eng(f, X, drop);
  std::vector<int> r(d + 2, 0);
  for (int k = 1; k <= d; ++k) r[k] = eng.rank_boundary(k);
  std::vector<long long> dims(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    const long long n = eng.count(k);
    const long long aug = (k == 0 && reduced && n > 0) ? 1 : 0;
    dims[k] = n - r[k] - r[k + 1] - aug;
  }
  return dims;
}

template <class F>
std::vector<long long> cohomology_dims(const F& f, const CellComplex& X,
                                       const CellMask* drop, bool reduced) {
  const int d = X.dimension();
  if (d < 0) return {};
  RankEngine<F> eng(f, X, drop);
  std::vector<int> rc(d + 1, 0);  // rc[k] = rank of coboundary out of degree k
  for (int k = 0; k < d; ++k) rc[k] = eng.rank_coboundary(k);
  std::vector<long long> dims(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    const long long n = eng.count(k);
    const long long below =
        k > 0 ? rc[k - 1] : ((reduced && n > 0) ? 1 : 0);
    dims[k] = n - rc[k] - below;
  }
  return dims;
}

}  // namespace

HomologyTable homology(const CellComplex& X, const FieldDesc& fd,
                       bool reduced) {
  HomologyTable t;
  t.field = fd.name();
  t.reduced = reduced;
  t.dims = with_field(fd, [&](const auto& f) {
    return homology_dims(f, X, nullptr, reduced);
  });
  return t;
}

HomologyTable cohomology(const CellComplex& X, const FieldDesc& fd,
                         bool reduced) {
  HomologyTable t;
  t.field = fd.name();
  t.reduced = reduced;
  t.dims = with_field(fd, [&](const auto& f) {
    return cohomology_dims(f, X, nullptr, reduced);
  });
  return t;
}

HomologyTable relative_homology(const CellComplex& X, const CellMask& A,
                                const FieldDesc& fd) {
  require_subcomplex(X, A);
  HomologyTable t;
  t.field = fd.name();
  t.reduced = false;
  t.dims = with_field(fd, [&](const auto& f) {
    return homology_dims(f, X, &A, false);
  });
  return t;
}

HomologyTable relative_cohomology(const CellComplex& X, const CellMask& A,
                                  const FieldDesc& fd) {
  require_subcomplex(X, A);
  HomologyTable t;
  t.field = fd.name();
  t.reduced = false;
  t.dims = with_field(fd, [&](const auto& f) {
    return cohomology_dims(f, X, &A, false);
  });
  return t;
}

HomologyTable local_homology(const CellComplex& X, int cell,
                             const FieldDesc& fd) {
  return relative_homology(X, X.star_complement(cell), fd);
}

HomologyTable star_relative_cohomology(const CellComplex& X, int cell,
                                       const FieldDesc& fd) {
  return relative_cohomology(X, X.star_complement(cell), fd);
}

long long euler_characteristic(const CellComplex& X) {
  long long chi = 0;
  for (int k = 0; k <= X.dimension(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) *
           static_cast<long long>(X.cells_of_dim(k).size());
  return chi;
}

bool chain_identities_ok(const CellComplex& X, const FieldDesc& fd) {
  return with_field(fd, [&](const auto& f) -> bool {
    using Elem = typename std::decay_t<decltype(f)>::Elem;
    const int d = X.dimension();
    for (int i = 0; i < X.size(); ++i) {
      const auto& c = X.cell(i);
      if (c.dim >= 2) {
        std::map<int, Elem> acc;
        for (const auto& [fi, s] : c.boundary)
          for (const auto& [gi, t] : X.cell(fi).boundary) {
            auto it = acc.emplace(gi, f.zero()).first;
            it->second = f.add(it->second, f.from_int(s * t));
          }
        for (const auto& [gi, v] : acc)
          if (!f.is_zero(v)) return false;
      } else if (c.dim == 1) {
        Elem sum = f.zero();
        for (const auto& [fi, s] : c.boundary) sum = f.add(sum, f.from_int(s));
        if (!f.is_zero(sum)) return false;
      }
      if (c.dim <= d - 2) {
        std::map<int, Elem> acc;
        for (const auto& [ci, s] : c.coboundary)
          for (const auto& [di, t] : X.cell(ci).coboundary) {
            auto it = acc.emplace(di, f.zero()).first;
            it->second = f.add(it->second, f.from_int(s * t));
          }
        for (const auto& [di, v] : acc)
          if (!f.is_zero(v)) return false;
      }
    }
    return true;
  });
}

BoundarySphereReport check_boundary_spheres(const CellComplex& X) {
  BoundarySphereReport rep;
  for (int i = 0; i < X.size(); ++i) {
    const int k = X.cell(i).dim;
    if (k < 1) continue;
    CellMask m = X.closure_mask(i);
    m[i] = 0;
    const CellComplex bd = X.induced(m);
    const HomologyTable t = homology(bd, FieldDesc::q(), true);
    bool good = true;
    const int top = std::max(k - 1, static_cast<int>(t.dims.size()) - 1);
    for (int j = 0; j <= top; ++j)
      if (t.at(j) != (j == k - 1 ? 1 : 0)) good = false;
    if (!good) {
      rep.pass = false;
      rep.failures.push_back(
          "cell '" + X.cell(i).id +
          "': boundary does not have the rational reduced homology of a " +
          std::to_string(k - 1) + "-sphere");
    }
  }
  return rep;
}

}  // namespace koszul
