#include "koszul/cps.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

namespace {

// Pairs (alpha, beta) with beta a face of alpha (alpha itself included),
// grouped by (dim alpha, dim beta), alpha-major in cell order.
struct PairIndex {
  int d = -1;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> basis;
  std::vector<std::vector<std::map<std::pair<int, int>, int>>> index;

  int count(int n, int k) const {
    if (n < 0 || n > d || k < 0 || k > n) return 0;
    return static_cast<int>(basis[n][k].size());
  }
};

PairIndex build_pairs(const CellComplex& X) {
  PairIndex P;
  P.d = X.dimension();
  if (P.d < 0) return P;
  P.basis.assign(P.d + 1, {});
  P.index.assign(P.d + 1, {});
  for (int n = 0; n <= P.d; ++n) {
    P.basis[n].assign(n + 1, {});
    P.index[n].assign(n + 1, {});
  }
  for (int n = 0; n <= P.d; ++n)
    for (int alpha : X.cells_of_dim(n)) {
      const CellMask closed = X.closure_mask(alpha);
      for (int k = 0; k <= n; ++k)
        for (int beta : X.cells_of_dim(k))
          if (closed[beta]) {
            P.index[n][k].emplace(std::make_pair(alpha, beta),
                                  static_cast<int>(P.basis[n][k].size()));
            P.basis[n][k].emplace_back(alpha, beta);
          }
    }
  return P;
}

template <class F>
struct CpsEngine {
  const F& f;
  const CellComplex& X;
  const PairIndex& P;

  // Face differential on the second slot: C^n_k -> C^n_{k-1}.
  DenseMat<F> d_mat(int n, int k) const {
    DenseMat<F> m(f, P.count(n, k - 1), P.count(n, k));
    if (k < 1 || k > n) return m;
    for (int c = 0; c < P.count(n, k); ++c) {
      const auto [a, b] = P.basis[n][k][c];
      for (const auto& [tau, s] : X.cell(b).boundary) {
        const int r = P.index[n][k - 1].at({a, tau});
        m.at(r, c) = f.add(m.at(r, c), f.from_int(s));
      }
    }
    return m;
  }

  // Coface differential on the first slot: C^n_k -> C^{n+1}_k.
  DenseMat<F> delta_mat(int n, int k) const {
    DenseMat<F> m(f, P.count(n + 1, k), P.count(n, k));
    for (int c = 0; c < P.count(n, k); ++c) {
      const auto [a, b] = P.basis[n][k][c];
      for (const auto& [gamma, s] : X.cell(a).coboundary) {
        const int r = P.index[n + 1][k].at({gamma, b});
        m.at(r, c) = f.add(m.at(r, c), f.from_int(s));
      }
    }
    return m;
  }
};

// Computes both quotient dimensions dim L^n_k and the bigraded cohomology
// dims, auditing every structural identity on the way.
template <class F>
void cps_compute(const F& f, const CellComplex& X, const PairIndex& P,
                 std::vector<std::vector<long long>>* quotient,
                 std::vector<std::vector<long long>>* cohom) {
  const int d = P.d;
  quotient->assign(d + 1, {});
  cohom->assign(d + 1, {});
  if (d < 0) return;
  const CpsEngine<F> eng{f, X, P};

  std::vector<std::vector<DenseMat<F>>> dm(d + 1), del(d + 1);
  for (int n = 0; n <= d; ++n)
    for (int k = 0; k <= n; ++k) {
      dm[n].push_back(eng.d_mat(n, k));       // dm[n][k] : C^n_k -> C^n_{k-1}
      del[n].push_back(eng.delta_mat(n, k));  // del[n][k] : C^n_k -> C^{n+1}_k
    }

  for (int n = 0; n <= d; ++n)
    for (int k = 0; k <= n; ++k) {
      if (k >= 2 && !dm[n][k - 1].multiply(dm[n][k]).is_zero())
        throw IllDefinedMapError(
            "pair bicomplex audit failed: face differential does not square "
            "to zero");
      if (n + 1 <= d && !del[n + 1][k].multiply(del[n][k]).is_zero())
        throw IllDefinedMapError(
            "pair bicomplex audit failed: coface differential does not "
            "square to zero");
      if (k >= 1 && n + 1 <= d) {
        const DenseMat<F> lhs = del[n][k - 1].multiply(dm[n][k]);
        const DenseMat<F> rhs = dm[n + 1][k].multiply(del[n][k]);
        if (!(lhs == rhs))
          throw IllDefinedMapError(
              "pair bicomplex audit failed: face and coface differentials do "
              "not commute");
      }
    }

  // L^n_k kills the image of the face differential arriving from k+1.
  std::vector<std::vector<std::optional<QuotientSpace<F>>>> L(d + 1);
  for (int n = 0; n <= d; ++n) {
    L[n].resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      DenseMat<F> arriving =
          k + 1 <= n ? dm[n][k + 1] : DenseMat<F>(f, P.count(n, k), 0);
      L[n][k] = cokernel(arriving);
    }
  }

  // Ranks of the induced coface maps between quotients.
  std::vector<std::vector<int>> rk(d + 1);
  for (int n = 0; n <= d; ++n) {
    rk[n].assign(n + 1, 0);
    for (int k = 0; k <= n && n + 1 <= d; ++k) {
      const DenseMat<F> ind = induced_map(del[n][k], *L[n][k], *L[n + 1][k]);
      rk[n][k] = ind.rank();
    }
  }

  for (int n = 0; n <= d; ++n) {
    (*quotient)[n].assign(n + 1, 0);
    (*cohom)[n].assign(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
      const long long dimL = L[n][k]->dim();
      const long long out = n + 1 <= d ? rk[n][k] : 0;
      const long long in = (n - 1 >= k) ? rk[n - 1][k] : 0;
      (*quotient)[n][k] = dimL;
      (*cohom)[n][k] = dimL - out - in;
    }
  }
}

}  // namespace

CpsTable cps_table(const CellComplex& X, const FieldDesc& fd) {
  const PairIndex P = build_pairs(X);
  CpsTable t;
  t.field = fd.name();
  t.d = P.d;
  with_field(fd, [&](const auto& f) {
    std::vector<std::vector<long long>> quotient;
    cps_compute(f, X, P, &quotient, &t.dims);
  });
  return t;
}

std::vector<std::vector<long long>> cps_space_dims(const CellComplex& X) {
  const PairIndex P = build_pairs(X);
  std::vector<std::vector<long long>> out(P.d + 1);
  for (int n = 0; n <= P.d; ++n) {
    out[n].assign(n + 1, 0);
    for (int k = 0; k <= n; ++k) out[n][k] = P.count(n, k);
  }
  return out;
}

std::vector<std::vector<long long>> cps_quotient_dims(const CellComplex& X,
                                                      const FieldDesc& fd) {
  const PairIndex P = build_pairs(X);
  std::vector<std::vector<long long>> quotient, cohom;
  with_field(fd, [&](const auto& f) {
    cps_compute(f, X, P, &quotient, &cohom);
  });
  return quotient;
}

}  // namespace koszul
