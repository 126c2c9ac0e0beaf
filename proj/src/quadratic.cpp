#include "koszul/quadratic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "koszul/errors.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

namespace {

constexpr std::int64_t kCountHuge = std::numeric_limits<std::int64_t>::max();
constexpr int kMaxGenerators = 8192;

// Degree-n dimension machinery over one field. Single-coordinate relations
// (after reduction over the field) ban their pair outright; banning a pair
// can make further relations single-coordinate, so the projection iterates
// to a fixed point. What remains participates in exact rank computations.
template <class F>
struct GradedEngine {
  using Elem = typename F::Elem;
  using FRel = std::vector<std::pair<std::int64_t, Elem>>;

  const F& f;
  int g;
  std::vector<char> allowed;  // g*g, indexed by pair i*g+j
  std::vector<FRel> general;
  std::vector<std::vector<std::uint32_t>> next_letters;
  std::unordered_map<std::int64_t, std::vector<int>> rels_with_pair;

  GradedEngine(const F& f_in, const QuadraticPresentation& Q)
      : f(f_in), g(Q.g()) {
    if (g > kMaxGenerators)
      throw BlowupError("presentation has " + std::to_string(g) +
                        " generators; at most " +
                        std::to_string(kMaxGenerators) + " are supported");
    const std::int64_t pairs = static_cast<std::int64_t>(g) * g;
    allowed.assign(static_cast<size_t>(pairs), 1);

    std::vector<FRel> pending;
    for (const auto& r : Q.relations) {
      std::map<std::int64_t, Elem> acc;
      for (const auto& [p, c] : r) {
        if (p < 0 || p >= pairs)
          throw ValidationError("relation pair index out of range");
        auto it = acc.emplace(p, f.zero()).first;
        it->second = f.add(it->second, f.from_int(static_cast<long>(c)));
      }
      FRel fr;
      for (auto& [p, v] : acc)
        if (!f.is_zero(v)) fr.emplace_back(p, std::move(v));
      if (!fr.empty()) pending.push_back(std::move(fr));
    }

    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<FRel> next;
      for (auto& r : pending) {
        FRel pr;
        for (auto& [p, v] : r)
          if (allowed[p]) pr.emplace_back(p, std::move(v));
        if (pr.empty()) continue;
        if (pr.size() == 1) {
          allowed[pr[0].first] = 0;
          changed = true;
          continue;
        }
        next.push_back(std::move(pr));
      }
      pending = std::move(next);
    }
    general = std::move(pending);

    next_letters.assign(g, {});
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        if (allowed[static_cast<std::int64_t>(i) * g + j])
          next_letters[i].push_back(static_cast<std::uint32_t>(j));
    for (int r = 0; r < static_cast<int>(general.size()); ++r)
      for (const auto& [p, v] : general[r]) rels_with_pair[p].push_back(r);
  }

  // Exact count of allowed words of length n; kCountHuge when it exceeds
  // the representable window.
  std::int64_t count(int n) const {
    if (n == 0) return 1;
    constexpr unsigned __int128 kClamp =
        static_cast<unsigned __int128>(4) * 1000 * 1000 * 1000 * 1000 * 1000 *
        1000;
    bool clamped = false;
    std::vector<unsigned __int128> cnt(g, 1);
    for (int step = 1; step < n; ++step) {
      std::vector<unsigned __int128> nxt(g, 0);
      for (int i = 0; i < g; ++i) {
        if (cnt[i] == 0) continue;
        for (std::uint32_t j : next_letters[i]) {
          nxt[j] += cnt[i];
          if (nxt[j] > kClamp) {
            nxt[j] = kClamp;
            clamped = true;
          }
        }
      }
      cnt = std::move(nxt);
    }
    unsigned __int128 total = 0;
    for (int i = 0; i < g; ++i) {
      total += cnt[i];
      if (total > kClamp) {
        total = kClamp;
        clamped = true;
      }
    }
    if (clamped) return kCountHuge;
    return static_cast<std::int64_t>(total);
  }

  // Allowed words of length n >= 1, lexicographic, flattened.
  std::vector<std::uint32_t> enumerate(int n, std::int64_t expected) const {
    std::vector<std::uint32_t> flat;
    flat.reserve(static_cast<size_t>(expected) * n);
    std::vector<std::uint32_t> word(n);
    auto walk = [&](auto&& self, int depth) -> void {
      if (depth == n) {
        flat.insert(flat.end(), word.begin(), word.end());
        return;
      }
      if (depth == 0) {
        for (int i = 0; i < g; ++i) {
          word[0] = static_cast<std::uint32_t>(i);
          self(self, 1);
        }
      } else {
        for (std::uint32_t j : next_letters[word[depth - 1]]) {
          word[depth] = j;
          self(self, depth + 1);
        }
      }
    };
    walk(walk, 0);
    return flat;
  }

  static std::int64_t word_index(const std::vector<std::uint32_t>& flat, int n,
                                 const std::uint32_t* w) {
    std::int64_t lo = 0, hi = static_cast<std::int64_t>(flat.size()) / n;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      bool less = false, greater = false;
      for (int t = 0; t < n; ++t) {
        const std::uint32_t a = flat[mid * n + t];
        if (a < w[t]) { less = true; break; }
        if (a > w[t]) { greater = true; break; }
      }
      if (less) lo = mid + 1;
      else if (greater) hi = mid;
      else return mid;
    }
    return -1;
  }

  // All nonzero ideal translates in degree n, as sparse vectors over word
  // indices. Every translate u (x) rel (x) w with a surviving component is
  // discovered from that component, and duplicates are filtered by the
  // (relation, surroundings) key.
  std::vector<SparseVec<F>> translates(int n,
                                       const std::vector<std::uint32_t>& flat) const {
    std::vector<SparseVec<F>> out;
    if (general.empty()) return out;
    const std::int64_t nwords = static_cast<std::int64_t>(flat.size()) / n;
    std::unordered_set<std::string> seen;
    std::vector<std::uint32_t> probe(n);
    constexpr std::uint32_t kWild = 0xFFFFFFFFu;
    for (std::int64_t iw = 0; iw < nwords; ++iw) {
      const std::uint32_t* W = flat.data() + iw * n;
      for (int p = 0; p + 1 < n; ++p) {
        const std::int64_t pair =
            static_cast<std::int64_t>(W[p]) * g + W[p + 1];
        const auto hit = rels_with_pair.find(pair);
        if (hit == rels_with_pair.end()) continue;
        for (int rid : hit->second) {
          std::string key(reinterpret_cast<const char*>(&rid), sizeof(rid));
          key.append(reinterpret_cast<const char*>(&p), sizeof(p));
          std::copy(W, W + n, probe.begin());
          probe[p] = kWild;
          probe[p + 1] = kWild;
          key.append(reinterpret_cast<const char*>(probe.data()),
                     static_cast<size_t>(n) * sizeof(std::uint32_t));
          if (!seen.insert(std::move(key)).second) continue;

          SparseVec<F> v;
          for (const auto& [q, c] : general[rid]) {
            const std::uint32_t i = static_cast<std::uint32_t>(q / g);
            const std::uint32_t j = static_cast<std::uint32_t>(q % g);
            if (p > 0 && !allowed[static_cast<std::int64_t>(W[p - 1]) * g + i])
              continue;
            if (p + 2 < n && !allowed[static_cast<std::int64_t>(j) * g + W[p + 2]])
              continue;
            std::copy(W, W + n, probe.begin());
            probe[p] = i;
            probe[p + 1] = j;
            const std::int64_t idx = word_index(flat, n, probe.data());
            if (idx < 0)
              throw std::logic_error("translate component escaped the word list");
            v.nz.emplace_back(idx, c);
          }
          if (v.nz.empty()) continue;
          std::sort(v.nz.begin(), v.nz.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          out.push_back(std::move(v));
        }
      }
    }
    return out;
  }

  // Exact rank of the translate set. When every vector touches at most two
  // words the span is a weighted graph and a union-find with edge weights
  // counts the rank; otherwise the general sparse elimination runs.
  std::int64_t rank_of(const std::vector<SparseVec<F>>& vecs) const {
    bool graph_like = true;
    for (const auto& v : vecs)
      if (v.nz.size() > 2) {
        graph_like = false;
        break;
      }
    if (!graph_like) {
      SparseReducer<F> red(f);
      for (const auto& v : vecs) red.add(v);
      return red.rank();
    }

    // e_node = weight[node] * e_parent along union-find links.
    std::unordered_map<std::int64_t, int> node_of;
    std::vector<int> parent;
    std::vector<Elem> weight;
    std::vector<char> killed;
    auto node = [&](std::int64_t w) {
      auto [it, fresh] = node_of.emplace(w, static_cast<int>(parent.size()));
      if (fresh) {
        parent.push_back(it->second);
        weight.push_back(f.one());
        killed.push_back(0);
      }
      return it->second;
    };
    auto find = [&](auto&& self, int a) -> std::pair<int, Elem> {
      if (parent[a] == a) return {a, f.one()};
      auto [root, wp] = self(self, parent[a]);
      parent[a] = root;
      weight[a] = f.mul(weight[a], wp);
      return {root, weight[a]};
    };
    for (const auto& v : vecs) {
      if (v.nz.size() == 1) {
        auto [root, w] = find(find, node(v.nz[0].first));
        killed[root] = 1;
        continue;
      }
      const int a = node(v.nz[0].first);
      const int b = node(v.nz[1].first);
      // cA e_A + cB e_B = 0  =>  e_A = t e_B with t = -cB/cA.
      const Elem t =
          f.neg(f.mul(v.nz[1].second, f.inv(v.nz[0].second)));
      auto [ra, wa] = find(find, a);
      auto [rb, wb] = find(find, b);
      if (ra != rb) {
        parent[ra] = rb;
        weight[ra] = f.mul(f.inv(wa), f.mul(t, wb));
        if (killed[ra]) killed[rb] = 1;
      } else {
        const Elem defect = f.sub(wa, f.mul(t, wb));
        if (!f.is_zero(defect)) killed[ra] = 1;
      }
    }
    std::unordered_map<int, std::int64_t> comp_size;
    for (int a = 0; a < static_cast<int>(parent.size()); ++a)
      comp_size[find(find, a).first] += 1;
    std::int64_t rank = 0;
    for (const auto& [root, size] : comp_size)
      rank += size - 1 + (killed[root] ? 1 : 0);
    return rank;
  }

  std::vector<std::int64_t> dims(int N, std::int64_t word_cap) const {
    std::vector<std::int64_t> out(N + 1, 0);
    for (int n = 0; n <= N; ++n) {
      if (n == 0) {
        out[0] = 1;
        continue;
      }
      if (n == 1) {
        out[1] = g;
        continue;
      }
      const std::int64_t cnt = count(n);
      if (general.empty()) {
        if (cnt == kCountHuge)
          throw BlowupError("degree " + std::to_string(n) +
                            " dimension exceeds the supported range");
        out[n] = cnt;
        continue;
      }
      if (cnt > word_cap)
        throw BlowupError(
            "degree " + std::to_string(n) + " needs " +
            (cnt == kCountHuge ? std::string("more than 4e18")
                               : std::to_string(cnt)) +
            " words, over the cap of " + std::to_string(word_cap) +
            " (raise KOSZUL_WORD_CAP to proceed)");
      if (cnt == 0) {
        out[n] = 0;
        continue;
      }
      const std::vector<std::uint32_t> flat = enumerate(n, cnt);
      out[n] = cnt - rank_of(translates(n, flat));
    }
    return out;
  }
};

}  // namespace

QuadraticPresentation poset_presentation(const RankedPoset& P) {
  QuadraticPresentation Q;
  const int g = P.elements - 1;
  for (int e = 1; e < P.elements; ++e) Q.gens.push_back(P.name[e]);

  std::vector<std::vector<int>> covers(g);  // generator covers below, sorted
  for (int e = 1; e < P.elements; ++e)
    for (int lo : P.lower[e])
      if (lo >= 1) covers[e - 1].push_back(lo - 1);

  for (int i = 0; i < g; ++i) {
    std::vector<char> cov(g, 0);
    for (int j : covers[i]) cov[j] = 1;
    for (int j = 0; j < g; ++j)
      if (!cov[j])
        Q.relations.push_back(
            {{static_cast<std::int64_t>(i) * g + j, 1}});
  }
  for (int i = 0; i < g; ++i) {
    if (covers[i].empty()) continue;
    QuadraticPresentation::Relation r;
    for (int j : covers[i])
      r.emplace_back(static_cast<std::int64_t>(i) * g + j, 1);
    Q.relations.push_back(std::move(r));
  }
  return Q;
}

QuadraticPresentation poset_dual_presentation(const RankedPoset& P) {
  QuadraticPresentation Q;
  const int g = P.elements - 1;
  for (int e = 1; e < P.elements; ++e) Q.gens.push_back(P.name[e]);

  for (int e = 1; e < P.elements; ++e) {
    std::vector<int> covers;
    for (int lo : P.lower[e])
      if (lo >= 1) covers.push_back(lo - 1);
    const int i = e - 1;
    for (size_t t = 0; t + 1 < covers.size(); ++t)
      Q.relations.push_back(
          {{static_cast<std::int64_t>(i) * g + covers[t], 1},
           {static_cast<std::int64_t>(i) * g + covers[t + 1], -1}});
  }
  return Q;
}

std::vector<std::int64_t> graded_dimensions(const QuadraticPresentation& Q,
                                            const FieldDesc& fd, int N,
                                            std::int64_t word_cap) {
  if (N < 0) return {};
  return with_field(fd, [&](const auto& f) {
    const GradedEngine<std::decay_t<decltype(f)>> eng(f, Q);
    return eng.dims(N, word_cap);
  });
}

namespace {

// Converts one kernel column to an integer relation: over the rationals the
// column is scaled to a primitive integer vector; over a prime field the
// canonical residues are kept as-is (valid for that field only).
template <class F>
QuadraticPresentation::Relation to_relation(
    const F& f, const DenseMat<F>& kernel, int col) {
  QuadraticPresentation::Relation rel;
  if constexpr (F::is_prime_field) {
    for (int r = 0; r < kernel.rows(); ++r)
      if (!f.is_zero(kernel.at(r, col)))
        rel.emplace_back(r, static_cast<std::int64_t>(kernel.at(r, col)));
  } else {
    mpz_class denom_lcm = 1;
    for (int r = 0; r < kernel.rows(); ++r)
      if (!f.is_zero(kernel.at(r, col)))
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                kernel.at(r, col).get_den().get_mpz_t());
    std::vector<std::pair<int, mpz_class>> ints;
    mpz_class gcd = 0;
    for (int r = 0; r < kernel.rows(); ++r) {
      if (f.is_zero(kernel.at(r, col))) continue;
      mpq_class scaled = kernel.at(r, col) * mpq_class(denom_lcm);
      mpz_class z = scaled.get_num();  // denominator is 1 after scaling
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z.get_mpz_t());
      ints.emplace_back(r, std::move(z));
    }
    if (!ints.empty() && ints.front().second < 0) gcd = -gcd;
    for (auto& [r, z] : ints) {
      mpz_class v = z / gcd;
      if (!v.fits_slong_p())
        throw BlowupError("dual relation coefficient exceeds 64 bits");
      rel.emplace_back(r, static_cast<std::int64_t>(v.get_si()));
    }
  }
  return rel;
}

}  // namespace

QuadraticPresentation quadratic_dual(const QuadraticPresentation& Q,
                                     const FieldDesc& fd) {
  const int g = Q.g();
  if (g > 256)
    throw BlowupError(
        "quadratic_dual is a dense construction limited to 256 generators");
  const int pairs = g * g;
  QuadraticPresentation out;
  out.gens = Q.gens;
  with_field(fd, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    DenseMat<F> m(f, static_cast<int>(Q.relations.size()), pairs);
    for (int r = 0; r < static_cast<int>(Q.relations.size()); ++r)
      for (const auto& [p, c] : Q.relations[r])
        m.at(r, static_cast<int>(p)) =
            f.add(m.at(r, static_cast<int>(p)), f.from_int(static_cast<long>(c)));
    const DenseMat<F> kernel = m.kernel_basis();
    for (int col = 0; col < kernel.cols(); ++col)
      out.relations.push_back(to_relation(f, kernel, col));
  });
  return out;
}

bool same_relation_span(const QuadraticPresentation& A,
                        const QuadraticPresentation& B, const FieldDesc& fd) {
  if (A.g() != B.g()) return false;
  return with_field(fd, [&](const auto& f) -> bool {
    using F = std::decay_t<decltype(f)>;
    auto to_vec = [&](const QuadraticPresentation::Relation& r) {
      std::map<std::int64_t, typename F::Elem> acc;
      for (const auto& [p, c] : r) {
        auto it = acc.emplace(p, f.zero()).first;
        it->second = f.add(it->second, f.from_int(static_cast<long>(c)));
      }
      SparseVec<F> v;
      for (auto& [p, e] : acc)
        if (!f.is_zero(e)) v.nz.emplace_back(p, std::move(e));
      return v;
    };
    SparseReducer<F> ra(f), rb(f), rab(f);
    for (const auto& r : A.relations) {
      auto v = to_vec(r);
      ra.add(v);
      rab.add(v);
    }
    for (const auto& r : B.relations) {
      auto v = to_vec(r);
      rb.add(v);
      rab.add(v);
    }
    return ra.rank() == rab.rank() && rb.rank() == rab.rank();
  });
}

AlgebraReport hilbert_probe(const CellComplex& X, const FieldDesc& fd, int N,
                            std::int64_t word_cap) {
  const RankedPoset P = face_poset(X, true);
  const QuadraticPresentation Q = poset_presentation(P);
  const QuadraticPresentation Qd = poset_dual_presentation(P);

  AlgebraReport rep;
  rep.field = fd.name();
  rep.N = N;
  rep.gens = Q.gens;
  rep.dims = graded_dimensions(Q, fd, N, word_cap);
  rep.dims_dual = graded_dimensions(Qd, fd, N, word_cap);
  rep.deviations.assign(N + 1, 0);
  for (int n = 0; n <= N; ++n) {
    std::int64_t acc = 0;
    for (int i = 0; i <= n; ++i) {
      const std::int64_t sign = (n - i) % 2 == 0 ? 1 : -1;
      acc += rep.dims_dual[i] * sign * rep.dims[n - i];
    }
    rep.deviations[n] = acc - (n == 0 ? 1 : 0);
  }
  rep.pass = true;
  for (std::int64_t v : rep.deviations)
    if (v != 0) rep.pass = false;
  return rep;
}

}  // namespace koszul
