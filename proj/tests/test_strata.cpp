#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/corpus.hpp"
#include "koszul/strata.hpp"

using namespace koszul;

namespace {

const FieldDesc kQ = FieldDesc::q();
const FieldDesc kF2 = FieldDesc::gf(2);

CellComplex entry(const char* name) {
  const CorpusEntry* e = corpus_find(name);
  REQUIRE(e != nullptr);
  return build_corpus_entry(*e);
}

std::map<std::string, int> strata_by_id(const CellComplex& x,
                                        const Stratification& s) {
  std::map<std::string, int> out;
  for (int i = 0; i < x.size(); ++i)
    if (s.stratum[i] != Stratification::kNonSingular)
      out[x.cell(i).id] = s.stratum[i];
  return out;
}

}  // namespace

TEST_CASE("an isolated vertex lands in stratum -1") {
  CellComplex pt = entry("simplex0");
  Stratification s = stratify(pt, kQ);
  REQUIRE(s.stratum.size() == 1);
  CHECK(s.stratum[0] == -1);
  CHECK(s.cells_in(-1) == std::vector<int>{0});
  CHECK(s.empty_stratum(0));
}

TEST_CASE("interval strata: endpoints regular, interior singular at the top") {
  CellComplex x = entry("simplex1");
  Stratification s = stratify(x, kQ);
  CHECK(s.stratum[x.index_of("v0")] == Stratification::kNonSingular);
  CHECK(s.stratum[x.index_of("v1")] == Stratification::kNonSingular);
  CHECK(s.stratum[x.index_of("v0.v1")] == 0);
}

TEST_CASE("frozen corpus stratifications") {
  for (const CorpusEntry& e : corpus()) {
    CellComplex x = build_corpus_entry(e);
    std::map<std::string, int> want;
    for (const auto& [n, ids] : e.strata)
      for (const std::string& id : ids) want[id] = n;
    for (const FieldDesc& fd : {kQ, kF2}) {
      INFO("entry ", e.name, " over ", fd.name());
      CHECK(strata_by_id(x, stratify(x, fd)) == want);
    }
  }
}

TEST_CASE("every top cell is singular in stratum dim-1; strata are unions of open cells") {
  for (const char* name : {"y_double3cell", "s1_bad", "s2_bad", "s2_worse"}) {
    CellComplex x = entry(name);
    Stratification s = stratify(x, kQ);
    const int d = x.dimension();
    for (int i : x.cells_of_dim(d)) CHECK(s.stratum[i] == d - 1);
  }
}

TEST_CASE("dimension bound holds on every pure corpus entry") {
  for (const CorpusEntry& e : corpus()) {
    CellComplex x = build_corpus_entry(e);
    Stratification s = stratify(x, kQ);
    DimensionBoundReport rep = check_dimension_bound(s, x);
    INFO("entry ", e.name);
    if (!e.pure) {
      CHECK(rep.skipped);
      CHECK_FALSE(rep.warning.empty());
    } else {
      CHECK_FALSE(rep.skipped);
      CHECK(rep.pass());
    }
  }
}

TEST_CASE("strengthened singularity statuses across the corpus") {
  using R = StrengthenedSingularityReport;
  std::map<std::string, R::Status> expected = {
      {"simplex0", R::kVacuous},       {"simplex1", R::kVacuous},
      {"simplex2", R::kVacuous},       {"simplex3", R::kVacuous},
      {"simplex4", R::kVacuous},       {"sphere0", R::kNotApplicable},
      {"sphere1", R::kVacuous},        {"sphere2", R::kVacuous},
      {"sphere3", R::kVacuous},        {"y_double3cell", R::kVacuous},
      {"wedge3intervals", R::kVacuous}, {"s1_bad", R::kPass},
      {"s1_bad_4d", R::kPass},         {"s2_bad", R::kPass},
      {"s2_worse", R::kPass},          {"s2_worse_open", R::kNotApplicable},
      {"nonpure_flag", R::kNotApplicable},
  };
  for (const CorpusEntry& e : corpus()) {
    CellComplex x = build_corpus_entry(e);
    Stratification s = stratify(x, kQ);
    R rep = check_strengthened_singularity(s, x, kQ);
    INFO("entry ", e.name, ": ", rep.detail);
    REQUIRE(expected.count(e.name) == 1);
    CHECK(rep.status == expected[e.name]);
  }

  // the passing entries owe their pass to a low-dimensional singular cell
  CellComplex x = entry("s1_bad");
  R rep = check_strengthened_singularity(stratify(x, kQ), x, kQ);
  CHECK(rep.minimal_n == 1);
  CHECK(rep.detail.find("'v0'") != std::string::npos);
}

TEST_CASE("stratification is field-stable on torsion-free examples") {
  for (const char* name : {"s1_bad_4d", "s2_worse", "wedge3intervals"}) {
    CellComplex x = entry(name);
    CHECK(stratify(x, kQ).stratum == stratify(x, kF2).stratum);
  }
}
