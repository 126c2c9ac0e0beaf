#include <doctest.h>

#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/corpus.hpp"
#include "koszul/cps.hpp"
#include "koszul/homology.hpp"

using namespace koszul;

namespace {

const FieldDesc kQ = FieldDesc::q();
const FieldDesc kF2 = FieldDesc::gf(2);

CellComplex entry(const char* name) {
  const CorpusEntry* e = corpus_find(name);
  REQUIRE(e != nullptr);
  return build_corpus_entry(*e);
}

using Table = std::vector<std::vector<long long>>;

}  // namespace

TEST_CASE("pair space dimensions") {
  CHECK(cps_space_dims(entry("simplex1")) == Table{{2}, {2, 1}});
  CHECK(cps_space_dims(entry("simplex2")) == Table{{3}, {6, 3}, {3, 3, 1}});
  // circle: every edge has two vertices
  CHECK(cps_space_dims(entry("sphere1")) == Table{{3}, {6, 3}});
  // empty complex
  CHECK(cps_space_dims(CellComplex::from_records({})).empty());

  // alternating sum over k telescopes to the Euler characteristic of one
  // closed cell, which is 1, so each row sums to the number of n-cells
  for (const char* name : {"y_double3cell", "s1_bad", "s2_bad"}) {
    CellComplex x = entry(name);
    Table c = cps_space_dims(x);
    for (int n = 0; n <= x.dimension(); ++n) {
      long long alt = 0;
      for (int k = 0; k <= n; ++k) alt += (k % 2 ? -1 : 1) * c[n][k];
      CHECK(alt == static_cast<long long>(x.cells_of_dim(n).size()));
    }
  }
}

TEST_CASE("quotient dimensions on the smallest complexes") {
  CHECK(cps_quotient_dims(entry("simplex1"), kQ) == Table{{2}, {1, 1}});
  CHECK(cps_quotient_dims(entry("simplex2"), kQ) ==
        Table{{3}, {3, 3}, {1, 2, 1}});
  CHECK(cps_quotient_dims(entry("simplex2"), kF2) ==
        cps_quotient_dims(entry("simplex2"), kQ));
}

TEST_CASE("bigraded cohomology tables of simplices") {
  CpsTable interval = cps_table(entry("simplex1"), kQ);
  CHECK(interval.d == 1);
  CHECK(interval.dims == Table{{1}, {0, 1}});

  CpsTable tri = cps_table(entry("simplex2"), kQ);
  CHECK(tri.d == 2);
  CHECK(tri.dims == Table{{1}, {0, 1}, {0, 0, 1}});
  CHECK(tri.at(1, 0) == 0);
  CHECK(tri.at(2, 2) == 1);
  CHECK(tri.at(-1, 0) == 0);
  CHECK(tri.at(0, 5) == 0);

  CpsTable empty = cps_table(CellComplex::from_records({}), kQ);
  CHECK(empty.d == -1);
  CHECK(empty.dims.empty());
}

TEST_CASE("off-diagonal vanishing matches the Koszul corpus verdicts") {
  // Koszul entries: all strictly-below-diagonal positions with n < d vanish
  for (const char* name :
       {"simplex2", "simplex3", "sphere2", "sphere3", "y_double3cell",
        "wedge3intervals"}) {
    CellComplex x = entry(name);
    CpsTable t = cps_table(x, kQ);
    for (int n = 0; n < t.d; ++n)
      for (int k = 0; k < n; ++k) {
        INFO("entry ", name, " position n=", n, " k=", k);
        CHECK(t.at(n, k) == 0);
      }
  }
  // non-Koszul entries: some such position is nonzero
  for (const char* name : {"s1_bad", "s1_bad_4d", "s2_bad", "s2_worse"}) {
    CellComplex x = entry(name);
    CpsTable t = cps_table(x, kQ);
    bool hit = false;
    for (int n = 0; n < t.d && !hit; ++n)
      for (int k = 0; k < n && !hit; ++k) hit = t.at(n, k) != 0;
    INFO("entry ", name);
    CHECK(hit);
  }
}

TEST_CASE("the two coefficient fields may only differ where torsion lives") {
  // every corpus table here is torsion-free, so q and gf:2 agree throughout
  for (const char* name : {"y_double3cell", "s1_bad", "s2_bad"}) {
    CellComplex x = entry(name);
    CHECK(cps_table(x, kQ).dims == cps_table(x, kF2).dims);
  }
}

TEST_CASE("construction audits run on every table build") {
  // the audits (d.d = 0, delta.delta = 0, commutation, induced-map
  // well-definedness) throw on failure; building the whole corpus exercises
  // them on every bicomplex the suite constructs
  for (const CorpusEntry& e : corpus()) {
    CellComplex x = build_corpus_entry(e);
    INFO("entry ", e.name);
    CHECK_NOTHROW(cps_table(x, kQ));
    CHECK_NOTHROW(cps_table(x, kF2));
  }
}
