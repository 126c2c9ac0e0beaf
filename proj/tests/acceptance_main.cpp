// Acceptance suite: eight end-to-end criteria, one PASS/FAIL line each.
// Exact arithmetic throughout; a criterion fails on any deviation, however
// small, and the binary exits with the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/corpus.hpp"
#include "koszul/cps.hpp"
#include "koszul/homology.hpp"
#include "koszul/quadratic.hpp"
#include "koszul/strata.hpp"
#include "koszul/verdict.hpp"

using namespace koszul;

namespace {

const FieldDesc kQ = FieldDesc::q();
const FieldDesc kF2 = FieldDesc::gf(2);
const FieldDesc kF3 = FieldDesc::gf(3);
const FieldDesc kF32003 = FieldDesc::gf(32003);

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

CellComplex entry(const std::string& name) {
  const CorpusEntry* e = corpus_find(name);
  if (!e) throw std::runtime_error("missing corpus entry " + name);
  return build_corpus_entry(*e);
}

bool hypothesis_passing(const CorpusEntry& e) {
  return e.koszul != CorpusEntry::kHypothesisFail;
}

// Collects failure details for one criterion; empty means pass.
struct Check {
  std::vector<std::string> problems;
  void fail(const std::string& what) { problems.push_back(what); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

// ---------------------------------------------------------------- criteria

// 1. Flagship verdicts with a wall-clock budget.
void criterion1(Check& c) {
  for (const FieldDesc& fd : {kQ, kF2}) {
    for (const auto& [name, want] :
         {std::pair<const char*, bool>{"y_double3cell", true},
          std::pair<const char*, bool>{"s1_bad", false}}) {
      const auto t0 = std::chrono::steady_clock::now();
      const CrossCheck cc = cross_check(entry(name), fd);
      const double dt = seconds_since(t0);
      c.expect(cc.koszul == want,
               std::string(name) + " over " + fd.name() + ": koszul=" +
                   (cc.koszul ? "true" : "false") + ", expected " +
                   (want ? "true" : "false"));
      c.expect(dt < 5.0, std::string(name) + " over " + fd.name() + " took " +
                             std::to_string(dt) + " s (budget 5 s)");
    }
  }
}

// 2. The three procedures agree on every qualifying entry and field.
void criterion2(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const CorpusEntry& e : corpus()) {
    if (!hypothesis_passing(e)) continue;
    CellComplex x = build_corpus_entry(e);
    for (const FieldDesc& fd : {kQ, kF2, kF3, kF32003}) {
      const CrossCheck cc = cross_check(x, fd);  // throws on disagreement
      c.expect(cc.verdicts.size() == 3,
               e.name + " over " + fd.name() + ": expected three verdicts");
      for (const Verdict& v : cc.verdicts)
        c.expect(v.koszul == cc.koszul,
                 e.name + " over " + fd.name() + ": criterion " + v.criterion +
                     " disagrees");
    }
  }
  const double dt = seconds_since(t0);
  c.expect(dt < 120.0,
           "full sweep took " + std::to_string(dt) + " s (budget 120 s)");
}

// 3. Stratification censuses, held to the frozen reference clauses.
void criterion3(Check& c) {
  // per stratum: expected number of cells of each dimension
  struct Clause {
    const char* name;
    int n;
    std::map<int, int> want;  // dim -> count
  };
  const std::vector<Clause> clauses = {
      {"s1_bad", 1, {{0, 1}, {1, 1}}},
      {"s1_bad_4d", 1, {{0, 1}, {1, 1}}},
      {"s1_bad_4d", 2, {}},
      {"s2_bad", 1, {}},
      {"s2_bad", 2, {{1, 1}, {2, 1}}},
      {"s2_worse", 2, {{0, 1}, {1, 3}, {2, 3}}},
  };
  for (const Clause& cl : clauses) {
    CellComplex x = entry(cl.name);
    Stratification s = stratify(x, kQ);
    std::map<int, int> got;
    std::map<int, std::vector<std::string>> members;
    for (int i = 0; i < x.size(); ++i)
      if (s.stratum[i] == cl.n) {
        ++got[x.cell(i).dim];
        members[x.cell(i).dim].push_back(x.cell(i).id);
      }
    if (got == cl.want) continue;
    std::ostringstream os;
    os << cl.name << " stratum " << cl.n << ":";
    for (int dim = 0; dim <= x.dimension(); ++dim) {
      const int w = cl.want.count(dim) ? cl.want.at(dim) : 0;
      const int g = got.count(dim) ? got.at(dim) : 0;
      if (w == g) continue;
      std::sort(members[dim].begin(), members[dim].end());
      os << " dimension " << dim << ": expected " << w << " cell(s), found "
         << g << " (";
      for (size_t t = 0; t < members[dim].size(); ++t)
        os << (t ? ", " : "") << members[dim][t];
      os << ")";
    }
    c.fail(os.str());
  }
}

// 4. One barycentric subdivision changes neither strata (through the carrier
//    map) nor the verdict; homotopy equivalence alone does not decide.
void criterion4(Check& c) {
  for (const CorpusEntry& e : corpus()) {
    CellComplex x = build_corpus_entry(e);
    SubdivisionResult sd = barycentric_subdivision(x);

    if (homology(sd.complex, kQ, true).dims != homology(x, kQ, true).dims)
      c.fail(e.name + ": subdivision changed reduced homology");

    const Stratification s = stratify(x, kQ);
    const Stratification ssd = stratify(sd.complex, kQ);
    int bad = 0;
    std::string first;
    for (int i = 0; i < sd.complex.size(); ++i)
      if (ssd.stratum[i] != s.stratum[sd.carrier[i]] && bad++ == 0)
        first = sd.complex.cell(i).id;
    if (bad)
      c.fail(e.name + ": " + std::to_string(bad) +
             " subdivided cell(s) left their carrier's stratum, first '" +
             first + "'");

    if (hypothesis_passing(e)) {
      const bool orig = cross_check(x, kQ).koszul;
      const Verdict a = koszul_local_homology(sd.complex, kQ);
      const Verdict b = koszul_star_cohomology(sd.complex, kQ);
      c.expect(a.koszul == orig,
               e.name + ": local-homology verdict changed under subdivision");
      c.expect(b.koszul == orig,
               e.name + ": star-cohomology verdict changed under subdivision");
    }
  }
  // the two complexes are homotopy equivalent yet get different verdicts
  const bool vy = cross_check(entry("y_double3cell"), kQ).koszul;
  const bool vs = cross_check(entry("s1_bad"), kQ).koszul;
  c.expect(vy != vs,
           "y_double3cell and s1_bad received the same verdict; the pair must "
           "witness that the answer is not a homotopy invariant");
}

// 5. Local homology computed through the star complement equals local
//    homology at the barycenter vertex after subdividing.
void criterion5(Check& c) {
  for (const CorpusEntry& e : corpus()) {
    CellComplex x = build_corpus_entry(e);
    SubdivisionResult sd = barycentric_subdivision(x);
    for (int i = 0; i < x.size(); ++i) {
      const HomologyTable direct = local_homology(x, i, kQ);
      const HomologyTable at_vertex =
          local_homology(sd.complex, sd.vertex_of[i], kQ);
      if (direct.dims != at_vertex.dims)
        c.fail(e.name + " cell '" + x.cell(i).id +
               "': star-complement route and barycenter-vertex route "
               "disagree");
    }
  }
}

// 6. Structural facts: the stratum dimension bound, the strengthened
//    singularity property, and the wedge-point computation.
void criterion6(Check& c) {
  for (const CorpusEntry& e : corpus()) {
    CellComplex x = build_corpus_entry(e);
    Stratification s = stratify(x, kQ);
    if (e.pure) {
      DimensionBoundReport rep = check_dimension_bound(s, x);
      c.expect(!rep.skipped && rep.pass(),
               e.name + ": stratum dimension bound violated");
    }
    StrengthenedSingularityReport rep =
        check_strengthened_singularity(s, x, kQ);
    c.expect(rep.status != StrengthenedSingularityReport::kFail,
             e.name + ": strengthened singularity check failed: " +
                 rep.detail);
  }
  CellComplex w = entry("wedge3intervals");
  const int v = w.index_of("c");
  c.expect(v >= 0, "wedge3intervals lost its wedge point");
  if (v >= 0) {
    const HomologyTable local = local_homology(w, v, kQ);
    c.expect(local.at(1) == 2,
             "wedge point local homology in degree 1 has dimension " +
                 std::to_string(local.at(1)) + ", expected 2");
    c.expect(stratify(w, kQ).stratum[v] == 0,
             "wedge point is not in stratum 0");
  }
}

// 7. The Hilbert series of the algebra and its quadratic dual multiply to 1
//    through degree 4 on every entry with a Koszul verdict.
void criterion7(Check& c) {
  for (const CorpusEntry& e : corpus()) {
    if (e.koszul != CorpusEntry::kYes) continue;
    for (const FieldDesc& fd : {kQ, kF2}) {
      const auto t0 = std::chrono::steady_clock::now();
      const AlgebraReport rep =
          hilbert_probe(build_corpus_entry(e), fd, 4, kDefaultWordCap);
      const double dt = seconds_since(t0);
      if (!rep.pass) {
        std::ostringstream os;
        os << e.name << " over " << fd.name() << ": deviations";
        for (std::int64_t d : rep.deviations) os << " " << d;
        c.fail(os.str());
      }
      c.expect(dt < 120.0, e.name + " over " + fd.name() + " took " +
                               std::to_string(dt) + " s (budget 120 s)");
    }
  }
}

// 8. Homological sanity: sphere tables, the Euler identity, and the chain
//    and bicomplex identities on everything the suite constructs.
void criterion8(Check& c) {
  for (int d = 0; d <= 3; ++d) {
    CellComplex s = entry("sphere" + std::to_string(d));
    for (const FieldDesc& fd : {kQ, kF2, kF3, kF32003}) {
      const HomologyTable t = homology(s, fd, true);
      for (int k = 0; k <= d; ++k)
        c.expect(t.at(k) == (k == d ? 1 : 0),
                 "sphere" + std::to_string(d) + " over " + fd.name() +
                     " degree " + std::to_string(k) + ": dimension " +
                     std::to_string(t.at(k)));
    }
  }
  for (const CorpusEntry& e : corpus()) {
    CellComplex x = build_corpus_entry(e);
    for (const FieldDesc& fd : {kQ, kF2}) {
      const HomologyTable t = homology(x, fd, false);
      long long alt = 0;
      for (int k = 0; k <= x.dimension(); ++k)
        alt += (k % 2 ? -1 : 1) * t.at(k);
      c.expect(alt == euler_characteristic(x),
               e.name + " over " + fd.name() +
                   ": Euler characteristic does not match homology");
      c.expect(chain_identities_ok(x, fd),
               e.name + " over " + fd.name() + ": chain identities violated");
      try {
        cps_table(x, fd);  // construction audits d.d, delta.delta, commutation
      } catch (const std::exception& ex) {
        c.fail(e.name + " over " + fd.name() + ": bicomplex audit: " +
               ex.what());
      }
    }
    SubdivisionResult sd = barycentric_subdivision(x);
    c.expect(chain_identities_ok(sd.complex, kQ),
             e.name + ": chain identities violated on the subdivision");
  }
}

}  // namespace

int main() {
  struct Named {
    int number;
    const char* title;
    std::function<void(Check&)> run;
  };
  const std::vector<Named> criteria = {
      {1, "flagship verdicts within budget", criterion1},
      {2, "three-criterion agreement across fields", criterion2},
      {3, "stratification censuses", criterion3},
      {4, "invariance under barycentric subdivision", criterion4},
      {5, "local homology equals its barycenter-vertex form", criterion5},
      {6, "structural stratum properties", criterion6},
      {7, "Hilbert series probe on Koszul entries", criterion7},
      {8, "homological sanity and bicomplex audits", criterion8},
  };

  int failed = 0;
  for (const Named& cr : criteria) {
    Check c;
    try {
      cr.run(c);
    } catch (const std::exception& ex) {
      c.fail(std::string("unexpected exception: ") + ex.what());
    }
    if (c.problems.empty()) {
      std::cout << "PASS criterion " << cr.number << ": " << cr.title << "\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << cr.number << ": " << cr.title << "\n";
      for (const std::string& p : c.problems)
        std::cout << "       " << p << "\n";
    }
  }
  if (failed)
    std::cout << failed << " of " << criteria.size()
              << " acceptance criteria failed\n";
  else
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  return failed;
}
