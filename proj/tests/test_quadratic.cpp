#include <doctest.h>

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/corpus.hpp"
#include "koszul/errors.hpp"
#include "koszul/linalg.hpp"
#include "koszul/quadratic.hpp"

using namespace koszul;

namespace {

const FieldDesc kQ = FieldDesc::q();
const FieldDesc kF2 = FieldDesc::gf(2);
const FieldDesc kF3 = FieldDesc::gf(3);

CellComplex entry(const char* name) {
  const CorpusEntry* e = corpus_find(name);
  REQUIRE(e != nullptr);
  return build_corpus_entry(*e);
}

std::int64_t pair_index(const QuadraticPresentation& q, int i, int j) {
  return static_cast<std::int64_t>(i) * q.g() + j;
}

// Independent reference: the degree-n component of T(V)/(R) has dimension
// g^n minus the rank of all positional translates of the relations inside
// the full g^n-dimensional word space. Exponential in n - only for tiny
// inputs, which is exactly what makes it a trustworthy cross-check.
std::vector<std::int64_t> naive_dims(const QuadraticPresentation& q,
                                     const FieldDesc& fd, int N) {
  const int g = q.g();
  std::vector<std::int64_t> dims = {1};
  if (N >= 1) dims.push_back(g);
  for (int n = 2; n <= N; ++n) {
    std::int64_t words = 1;
    for (int t = 0; t < n; ++t) words *= g;
    std::int64_t pre = 1;  // g^p while p sweeps the relation position
    std::vector<std::tuple<int, int, int>> trips;
    int col = 0;
    for (int p = 0; p + 2 <= n; ++p) {
      std::int64_t post = 1;
      for (int t = p + 2; t < n; ++t) post *= g;
      for (std::int64_t a = 0; a < pre; ++a)
        for (std::int64_t b = 0; b < post; ++b) {
          for (const auto& rel : q.relations) {
            for (const auto& [pair, coef] : rel) {
              // word index: prefix digits, then the two relation digits,
              // then suffix digits, big-endian in generator base
              std::int64_t w = ((a * g + pair / g) * g + pair % g) * post + b;
              trips.emplace_back(static_cast<int>(w), col,
                                 static_cast<int>(coef));
            }
            ++col;
          }
        }
      pre *= g;
    }
    const std::int64_t rank = with_field(fd, [&](const auto& f) {
      auto cols = columns_from_triplets(f, col, trips);
      return static_cast<std::int64_t>(
          exact_rank(f, cols, static_cast<int>(words)));
    });
    dims.push_back(words - rank);
  }
  return dims;
}

void check_against_naive(const QuadraticPresentation& q, int N) {
  for (const FieldDesc& fd : {kQ, kF2, kF3}) {
    INFO("field ", fd.name());
    CHECK(graded_dimensions(q, fd, N, kDefaultWordCap) == naive_dims(q, fd, N));
  }
}

}  // namespace

TEST_CASE("free, truncated and commutative presentations") {
  QuadraticPresentation free3;
  free3.gens = {"x", "y", "z"};
  CHECK(graded_dimensions(free3, kQ, 4, kDefaultWordCap) ==
        std::vector<std::int64_t>{1, 3, 9, 27, 81});
  check_against_naive(free3, 3);

  QuadraticPresentation dead;
  dead.gens = {"x", "y"};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      dead.relations.push_back({{pair_index(dead, i, j), 1}});
  CHECK(graded_dimensions(dead, kQ, 4, kDefaultWordCap) ==
        std::vector<std::int64_t>{1, 2, 0, 0, 0});
  check_against_naive(dead, 4);

  QuadraticPresentation poly;  // xy = yx
  poly.gens = {"x", "y"};
  poly.relations.push_back(
      {{pair_index(poly, 0, 1), 1}, {pair_index(poly, 1, 0), -1}});
  CHECK(graded_dimensions(poly, kQ, 4, kDefaultWordCap) ==
        std::vector<std::int64_t>{1, 2, 3, 4, 5});
  check_against_naive(poly, 4);
}

TEST_CASE("coefficients beyond plus-minus one take the exact elimination path") {
  QuadraticPresentation quantum;  // xy = 2 yx
  quantum.gens = {"x", "y"};
  quantum.relations.push_back(
      {{pair_index(quantum, 0, 1), 1}, {pair_index(quantum, 1, 0), -2}});
  CHECK(graded_dimensions(quantum, kQ, 4, kDefaultWordCap) ==
        std::vector<std::int64_t>{1, 2, 3, 4, 5});
  check_against_naive(quantum, 4);

  QuadraticPresentation three;  // xy - yx - yy = 0
  three.gens = {"x", "y"};
  three.relations.push_back({{pair_index(three, 0, 1), 1},
                             {pair_index(three, 1, 0), -1},
                             {pair_index(three, 1, 1), -1}});
  check_against_naive(three, 4);
}

TEST_CASE("relation coefficients are read in the coefficient field") {
  // 2xy: bans the word xy over the rationals, vanishes entirely mod 2
  QuadraticPresentation q;
  q.gens = {"x", "y"};
  q.relations.push_back({{pair_index(q, 0, 1), 2}});
  CHECK(graded_dimensions(q, kQ, 2, kDefaultWordCap) ==
        std::vector<std::int64_t>{1, 2, 3});
  CHECK(graded_dimensions(q, kF2, 2, kDefaultWordCap) ==
        std::vector<std::int64_t>{1, 2, 4});
  check_against_naive(q, 3);
}

TEST_CASE("poset presentations match the naive reference") {
  for (const char* name : {"simplex0", "simplex1"}) {
    RankedPoset p = face_poset(entry(name), true);
    QuadraticPresentation q = poset_presentation(p);
    INFO("poset of ", name, " with ", q.g(), " generators");
    check_against_naive(q, q.g() <= 4 ? 4 : 3);
  }
  // one bigger complex, degree 3 only (the reference is exponential)
  RankedPoset p = face_poset(entry("sphere1"), true);
  QuadraticPresentation q = poset_presentation(p);
  REQUIRE(q.g() == 7);
  for (const FieldDesc& fd : {kQ, kF2}) {
    auto got = graded_dimensions(q, fd, 3, kDefaultWordCap);
    auto want = naive_dims(q, fd, 3);
    CHECK(got == want);
  }
}

TEST_CASE("poset words vanish beyond the poset height") {
  // nonzero products strictly descend in rank, so length > height dies
  RankedPoset p = face_poset(entry("simplex2"), true);
  QuadraticPresentation q = poset_presentation(p);
  auto dims = graded_dimensions(q, kQ, 6, kDefaultWordCap);
  REQUIRE(dims.size() == 7);
  CHECK(dims[4] == 0);  // height is 4: top > 2-cell > edge > vertex
  CHECK(dims[5] == 0);
  CHECK(dims[6] == 0);
  CHECK(dims[3] > 0);
}

TEST_CASE("quadratic dual of the polynomial ring is the exterior algebra") {
  QuadraticPresentation poly;
  poly.gens = {"x", "y"};
  poly.relations.push_back(
      {{pair_index(poly, 0, 1), 1}, {pair_index(poly, 1, 0), -1}});
  QuadraticPresentation ext = quadratic_dual(poly, kQ);
  CHECK(ext.g() == 2);
  CHECK(ext.relations.size() == 3);  // complement of a line in a 4-dim space
  CHECK(graded_dimensions(ext, kQ, 4, kDefaultWordCap) ==
        std::vector<std::int64_t>{1, 2, 1, 0, 0});
  // double dual returns the original relation span
  CHECK(same_relation_span(quadratic_dual(ext, kQ), poly, kQ));
  CHECK_FALSE(same_relation_span(ext, poly, kQ));
}

TEST_CASE("structural poset dual equals the generic dual") {
  for (const char* name : {"simplex1", "simplex2", "sphere1", "wedge3intervals"}) {
    RankedPoset p = face_poset(entry(name), true);
    QuadraticPresentation q = poset_presentation(p);
    QuadraticPresentation structural = poset_dual_presentation(p);
    for (const FieldDesc& fd : {kQ, kF2, kF3}) {
      INFO("poset of ", name, " over ", fd.name());
      QuadraticPresentation generic = quadratic_dual(q, fd);
      CHECK(same_relation_span(structural, generic, fd));
      CHECK(graded_dimensions(structural, fd, 3, kDefaultWordCap) ==
            graded_dimensions(generic, fd, 3, kDefaultWordCap));
    }
  }
}

TEST_CASE("dual dimensions match the dual presentation on a full complex") {
  RankedPoset p = face_poset(entry("y_double3cell"), true);
  AlgebraReport rep = hilbert_probe(entry("y_double3cell"), kQ, 3,
                                    kDefaultWordCap);
  auto dual_dims = graded_dimensions(poset_dual_presentation(p), kQ, 3,
                                     kDefaultWordCap);
  REQUIRE(rep.dims_dual.size() >= 4);
  for (int n = 0; n <= 3; ++n) CHECK(rep.dims_dual[n] == dual_dims[n]);
}

TEST_CASE("hilbert probe passes on Koszul corpus entries") {
  for (const char* name : {"simplex2", "sphere1", "wedge3intervals"}) {
    AlgebraReport rep = hilbert_probe(entry(name), kQ, 4, kDefaultWordCap);
    INFO("entry ", name);
    CHECK(rep.pass);
    CHECK(rep.N == 4);
    CHECK(rep.deviations == std::vector<std::int64_t>(5, 0));
    CHECK(rep.dims[0] == 1);
    CHECK(rep.dims[1] == static_cast<std::int64_t>(rep.gens.size()));
    CHECK(rep.dims_dual[1] == rep.dims[1]);
  }
}

TEST_CASE("hilbert probe requires the hypotheses") {
  CHECK_THROWS_AS(hilbert_probe(entry("nonpure_flag"), kQ, 4, kDefaultWordCap),
                  HypothesisError);
  CHECK_THROWS_AS(
      hilbert_probe(entry("s2_worse_open"), kQ, 4, kDefaultWordCap),
      HypothesisError);
}

TEST_CASE("word cap aborts oversized enumerations") {
  // a non-ban relation forces the word space to be materialized; degree 5
  // needs 4^5 = 1024 words
  QuadraticPresentation q;
  q.gens = {"a", "b", "c", "d"};
  q.relations.push_back({{pair_index(q, 0, 1), 1}, {pair_index(q, 1, 0), -1}});
  CHECK_THROWS_AS(graded_dimensions(q, kQ, 5, 1000), BlowupError);
  CHECK_NOTHROW(graded_dimensions(q, kQ, 5, 1024));
  CHECK_THROWS_AS(hilbert_probe(entry("y_double3cell"), kQ, 4, 10),
                  BlowupError);

  // a pure ban never enumerates, so the cap does not apply to it
  QuadraticPresentation banned;
  banned.gens = {"a", "b", "c", "d"};
  banned.relations.push_back({{pair_index(banned, 0, 1), 1}});
  CHECK_NOTHROW(graded_dimensions(banned, kQ, 8, 10));
}
