#include <doctest.h>

#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/corpus.hpp"
#include "koszul/errors.hpp"
#include "koszul/glued.hpp"
#include "koszul/homology.hpp"
#include "koszul/verdict.hpp"

using namespace koszul;

namespace {

const FieldDesc kQ = FieldDesc::q();
const FieldDesc kF2 = FieldDesc::gf(2);

CellComplex entry(const char* name) {
  const CorpusEntry* e = corpus_find(name);
  REQUIRE(e != nullptr);
  return build_corpus_entry(*e);
}

// Triangulated cylinder: a strip of four triangles with its short ends glued.
// Pure, connected through codimension one, and with nonzero first homology
// but no singular stratum below the top: only the reduced-homology clause of
// each criterion can reject it.
CellComplex cylinder() {
  GluedSimplicialSpec s;
  s.simplices = {{"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "e"},
                 {"d", "e", "f"}};
  s.identifications = {{{{"e", "f"}, {"a", "b"}}}};
  return build_glued_simplicial(s);
}

const Witness* find_witness(const Verdict& v, const std::string& kind) {
  for (const Witness& w : v.witnesses)
    if (w.kind == kind) return &w;
  return nullptr;
}

}  // namespace

TEST_CASE("three criteria agree across the corpus") {
  for (const CorpusEntry& e : corpus()) {
    if (e.koszul == CorpusEntry::kHypothesisFail) continue;
    CellComplex x = build_corpus_entry(e);
    for (const FieldDesc& fd : {kQ, kF2}) {
      INFO("entry ", e.name, " over ", fd.name());
      Verdict a = koszul_local_homology(x, fd);
      Verdict b = koszul_cps(x, fd);
      Verdict c = koszul_star_cohomology(x, fd);
      const bool want = e.koszul == CorpusEntry::kYes;
      CHECK(a.koszul == want);
      CHECK(b.koszul == want);
      CHECK(c.koszul == want);
      // witnesses appear exactly on failure
      CHECK(a.witnesses.empty() == a.koszul);
      CHECK(b.witnesses.empty() == b.koszul);
      CHECK(c.witnesses.empty() == c.koszul);

      CrossCheck cc = cross_check(x, fd);
      CHECK(cc.koszul == want);
      CHECK(cc.field == fd.name());
      REQUIRE(cc.verdicts.size() == 3);
      CHECK(cc.verdicts[0].criterion == "local-homology");
      CHECK(cc.verdicts[1].criterion == "cps");
      CHECK(cc.verdicts[2].criterion == "star-cohomology");
    }
  }
}

TEST_CASE("hypothesis failures are rejected by every criterion") {
  for (const char* name : {"nonpure_flag", "s2_worse_open", "sphere0"}) {
    CellComplex x = entry(name);
    INFO("entry ", name);
    CHECK_THROWS_AS(koszul_local_homology(x, kQ), HypothesisError);
    CHECK_THROWS_AS(koszul_cps(x, kQ), HypothesisError);
    CHECK_THROWS_AS(koszul_star_cohomology(x, kQ), HypothesisError);
    CHECK_THROWS_AS(cross_check(x, kQ), HypothesisError);
  }
}

TEST_CASE("witnesses of the stratum criterion name the singular cells") {
  CellComplex x = entry("s1_bad");
  Verdict v = koszul_local_homology(x, kQ);
  REQUIRE_FALSE(v.koszul);
  // only the strata inside 0..dim-2 are cited; here S_1 = {v0, v0.v3}
  REQUIRE(v.witnesses.size() == 2);
  for (const Witness& w : v.witnesses) {
    CHECK(w.kind == "stratum");
    CHECK(w.n == 1);
    CHECK(w.dim >= 1);
  }
  CHECK(v.witnesses[0].cell == "v0");
  CHECK(v.witnesses[0].cell_dim == 0);
  CHECK(v.witnesses[1].cell == "v0.v3");
  CHECK(v.witnesses[1].cell_dim == 1);
}

TEST_CASE("the star criterion skips degrees at or below cell dimension plus one") {
  CellComplex x = entry("s1_bad");
  Verdict v = koszul_star_cohomology(x, kQ);
  REQUIRE_FALSE(v.koszul);
  // the vertex v0 is cited in degree 2 (0+1 < 2 < 3)
  bool v0_cited = false;
  for (const Witness& w : v.witnesses) {
    CHECK(w.kind == "star");
    // the edge v0.v3 must never appear: for a 1-cell the window
    // 2 < n < 3 is empty, even though its local cohomology is nonzero
    CHECK(w.cell != "v0.v3");
    if (w.cell == "v0") {
      v0_cited = true;
      CHECK(w.degree == 2);
      CHECK(w.cell_dim == 0);
      CHECK(w.dim == 1);
    }
  }
  CHECK(v0_cited);
}

TEST_CASE("the cps criterion cites a bigraded position") {
  CellComplex x = entry("s1_bad");
  Verdict v = koszul_cps(x, kQ);
  REQUIRE_FALSE(v.koszul);
  REQUIRE_FALSE(v.witnesses.empty());
  for (const Witness& w : v.witnesses) {
    CHECK(w.kind == "cps");
    CHECK(w.k < w.n);
    CHECK(w.n < x.dimension());
    CHECK(w.dim >= 1);
  }
}

TEST_CASE("global homology alone can refute Koszulity") {
  CellComplex x = cylinder();
  REQUIRE(x.is_pure());
  REQUIRE(x.is_codim1_connected());
  REQUIRE(homology(x, kQ, true).dims == std::vector<long long>{0, 1, 0});

  Verdict a = koszul_local_homology(x, kQ);
  REQUIRE_FALSE(a.koszul);
  const Witness* wh = find_witness(a, "reduced_homology");
  REQUIRE(wh != nullptr);
  CHECK(wh->degree == 1);
  CHECK(wh->dim == 1);
  CHECK(find_witness(a, "stratum") == nullptr);  // no stratum below top here

  Verdict c = koszul_star_cohomology(x, kQ);
  REQUIRE_FALSE(c.koszul);
  const Witness* wc = find_witness(c, "reduced_cohomology");
  REQUIRE(wc != nullptr);
  CHECK(wc->degree == 1);
  CHECK(find_witness(c, "star") == nullptr);

  Verdict b = koszul_cps(x, kQ);
  REQUIRE_FALSE(b.koszul);
  const Witness* wb = find_witness(b, "cps");
  REQUIRE(wb != nullptr);
  CHECK(wb->n == 1);
  CHECK(wb->k == 0);

  CHECK_FALSE(cross_check(x, kQ).koszul);
  CHECK_FALSE(cross_check(x, kF2).koszul);
}

TEST_CASE("koszul verdicts carry no witnesses") {
  CellComplex x = entry("y_double3cell");
  for (const Verdict& v :
       {koszul_local_homology(x, kQ), koszul_cps(x, kQ),
        koszul_star_cohomology(x, kQ)}) {
    CHECK(v.koszul);
    CHECK(v.witnesses.empty());
    CHECK(v.field == "q");
  }
}
