#include "koszul/corpus.hpp"

#include <stdexcept>

#include "koszul/glued.hpp"

namespace koszul {

namespace {

using Strata = std::vector<std::pair<int, std::vector<std::string>>>;

std::vector<std::string> seq(const char* stem, int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

CorpusEntry simplex_entry(int d) {
  CorpusEntry e;
  e.name = "simplex" + std::to_string(d);
  e.description = "solid " + std::to_string(d) + "-simplex";
  e.spec.simplices = {seq("v", d + 1)};
  e.dimension = d;
  e.counts.assign(d + 1, 0);
  // Binomials C(d+1, k+1).
  long long c = d + 1;
  for (int k = 0; k <= d; ++k) {
    e.counts[k] = c;
    c = c * (d + 1 - (k + 1)) / (k + 2);
  }
  e.reduced_homology.assign(d + 1, 0);
  std::string top = "v0";
  for (int i = 1; i <= d; ++i) top += ".v" + std::to_string(i);
  e.strata = {{d - 1, {top}}};  // the sole top cell; stratum -1 when d == 0
  e.koszul = CorpusEntry::kYes;
  return e;
}

CorpusEntry sphere_entry(int d) {
  CorpusEntry e;
  e.name = "sphere" + std::to_string(d);
  e.description = "boundary of the " + std::to_string(d + 1) +
                  "-simplex, a " + std::to_string(d) + "-sphere";
  const auto verts = seq("v", d + 2);
  for (int drop = d + 1; drop >= 0; --drop) {
    std::vector<std::string> s;
    for (int j = 0; j <= d + 1; ++j)
      if (j != drop) s.push_back(verts[j]);
    e.spec.simplices.push_back(std::move(s));
  }
  e.dimension = d;
  // Counts C(d+2, k+1); every cell lies in the single stratum d-1.
  e.counts.assign(d + 1, 0);
  long long c = d + 2;
  std::vector<std::string> all;
  for (int k = 0; k <= d; ++k) {
    e.counts[k] = c;
    c = c * (d + 2 - (k + 1)) / (k + 2);
  }
  // Enumerate ids: all (k+1)-subsets of the vertices, by (dim, id).
  for (int k = 0; k <= d; ++k) {
    std::vector<std::vector<std::string>> level;
    std::vector<int> pick(k + 1);
    for (int i = 0; i <= k; ++i) pick[i] = i;
    while (true) {
      std::string id = verts[pick[0]];
      for (int i = 1; i <= k; ++i) id += "." + verts[pick[i]];
      all.push_back(id);
      int i = k;
      while (i >= 0 && pick[i] == d + 1 - (k - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j <= k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // Subset enumeration above is already sorted by (dim, id) because vertex
  // names share one stem and a single-digit index.
  e.reduced_homology.assign(d + 1, 0);
  e.reduced_homology[d] = 1;
  e.strata = {{d - 1, all}};
  e.codim1 = d != 0;  // two isolated points fail codim-1 connectivity
  e.koszul = d == 0 ? CorpusEntry::kHypothesisFail : CorpusEntry::kYes;
  return e;
}

// Facts below were frozen from the independent oracle (tools/oracle.py):
// exact arithmetic over Q and GF(2), run before these tables were written.

CorpusEntry y_double3cell() {
  CorpusEntry e;
  e.name = "y_double3cell";
  e.description = "two 3-simplices glued along a common triangle";
  e.spec.simplices = {{"v0", "v1", "v2", "v3"}, {"v0", "v1", "v2", "v4"}};
  e.dimension = 3;
  e.counts = {5, 9, 7, 2};
  e.reduced_homology = {0, 0, 0, 0};
  e.strata = {{2, {"v0.v1.v2", "v0.v1.v2.v3", "v0.v1.v2.v4"}}};
  e.koszul = CorpusEntry::kYes;
  return e;
}

CorpusEntry wedge3intervals() {
  CorpusEntry e;
  e.name = "wedge3intervals";
  e.description = "three intervals identified at one end point";
  e.spec.simplices = {{"c", "t1"}, {"c", "t2"}, {"c", "t3"}};
  e.dimension = 1;
  e.counts = {4, 3};
  e.reduced_homology = {0, 0};
  e.strata = {{0, {"c", "c.t1", "c.t2", "c.t3"}}};
  e.koszul = CorpusEntry::kYes;
  return e;
}

CorpusEntry s1_bad() {
  CorpusEntry e;
  e.name = "s1_bad";
  e.description =
      "two 3-simplices glued along a triangle and along a disjoint edge";
  e.spec.simplices = {{"v0", "v1", "v2", "v3"}, {"w0", "w1", "w2", "w3"}};
  e.spec.identifications = {{{{"v0", "v1", "v2"}, {"w0", "w1", "w2"}}},
                            {{{"v0", "v3"}, {"w0", "w3"}}}};
  e.dimension = 3;
  e.counts = {4, 8, 7, 2};
  e.reduced_homology = {0, 0, 0, 0};
  e.strata = {{1, {"v0", "v0.v3"}},
              {2, {"v0.v1.v2", "v0.v1.v2.v3", "w0.w1.w2.w3"}}};
  e.koszul = CorpusEntry::kNo;
  return e;
}

CorpusEntry s1_bad_4d() {
  CorpusEntry e;
  e.name = "s1_bad_4d";
  e.description =
      "two 4-simplices glued along a tetrahedron and along a disjoint edge";
  e.spec.simplices = {{"v0", "v1", "v2", "v3", "v4"},
                      {"w0", "w1", "w2", "w3", "w4"}};
  e.spec.identifications = {
      {{{"v0", "v1", "v2", "v3"}, {"w0", "w1", "w2", "w3"}}},
      {{{"v0", "v4"}, {"w0", "w4"}}}};
  e.dimension = 4;
  e.counts = {5, 13, 16, 9, 2};
  e.reduced_homology = {0, 0, 0, 0, 0};
  e.strata = {{1, {"v0", "v0.v4"}},
              {3, {"v0.v1.v2.v3", "v0.v1.v2.v3.v4", "w0.w1.w2.w3.w4"}}};
  e.koszul = CorpusEntry::kNo;
  return e;
}

CorpusEntry s2_bad() {
  CorpusEntry e;
  e.name = "s2_bad";
  e.description =
      "two 4-simplices glued along a tetrahedron and along a triangle "
      "overlapping it in an edge";
  e.spec.simplices = {{"v0", "v1", "v2", "v3", "v4"},
                      {"w0", "w1", "w2", "w3", "w4"}};
  e.spec.identifications = {
      {{{"v0", "v1", "v2", "v3"}, {"w0", "w1", "w2", "w3"}}},
      {{{"v0", "v1", "v4"}, {"w0", "w1", "w4"}}}};
  e.dimension = 4;
  e.counts = {5, 12, 15, 9, 2};
  e.reduced_homology = {0, 0, 0, 0, 0};
  e.strata = {{2, {"v0.v1", "v0.v1.v4"}},
              {3, {"v0.v1.v2.v3", "v0.v1.v2.v3.v4", "w0.w1.w2.w3.w4"}}};
  e.koszul = CorpusEntry::kNo;
  return e;
}

// Three triangles a.d.e, b.d.e, c.d.e fanned around the edge d.e; three
// 4-simplices T1=(u*), T2=(v*), T3=(w*) each absorb two of the triangles
// through the face identifications below, and a fourth 4-simplex T4=(x*)
// is glued along the three "outer" tetrahedra (the ones avoiding position
// 0, the e-corner). No face of T4 meets the vertex class e, so the star of
// the edge d.e is identical with and without T4; d.e therefore stays in
// stratum 2 in both variants (frozen from the oracle, which also fixes the
// census of that star as one 1-cell, six 2-cells, nine 3-cells, three
// 4-cells with relative Euler characteristic -1).
GluedSimplicialSpec s2_worse_open_spec() {
  GluedSimplicialSpec s;
  s.simplices = {{"a", "d", "e"},
                 {"b", "d", "e"},
                 {"c", "d", "e"},
                 {"u0", "u1", "u2", "u3", "u4"},
                 {"v0", "v1", "v2", "v3", "v4"},
                 {"w0", "w1", "w2", "w3", "w4"}};
  s.identifications = {{{{"u0", "u1", "u2"}, {"e", "d", "a"}}},
                       {{{"u0", "u1", "u3"}, {"e", "d", "c"}}},
                       {{{"v0", "v1", "v2"}, {"e", "d", "c"}}},
                       {{{"v0", "v1", "v3"}, {"e", "d", "b"}}},
                       {{{"w0", "w1", "w2"}, {"e", "d", "b"}}},
                       {{{"w0", "w1", "w3"}, {"e", "d", "a"}}}};
  return s;
}

CorpusEntry s2_worse_open() {
  CorpusEntry e;
  e.name = "s2_worse_open";
  e.description =
      "three 4-simplices fanned around an edge through shared triangles; "
      "pure but not connected through codimension one";
  e.spec = s2_worse_open_spec();
  e.dimension = 4;
  e.counts = {8, 22, 27, 15, 3};
  e.reduced_homology = {0, 0, 0, 0, 0};
  e.strata = {{2, {"d.e", "a.d.e", "b.d.e", "c.d.e"}},
              {3, {"u0.u1.u2.u3.u4", "v0.v1.v2.v3.v4", "w0.w1.w2.w3.w4"}}};
  e.codim1 = false;
  e.koszul = CorpusEntry::kHypothesisFail;
  return e;
}

CorpusEntry s2_worse() {
  CorpusEntry e;
  e.name = "s2_worse";
  e.description =
      "four 4-simplices glued so the singular set spans three dimensions";
  e.spec = s2_worse_open_spec();
  e.spec.simplices.push_back({"x0", "x1", "x2", "x3", "x4"});
  e.spec.identifications.push_back(
      {{{"x0", "x1", "x2", "x3"}, {"u1", "u2", "u3", "u4"}}});
  e.spec.identifications.push_back(
      {{{"x0", "x2", "x3", "x4"}, {"v1", "v2", "v3", "v4"}}});
  e.spec.identifications.push_back(
      {{{"x0", "x1", "x3", "x4"}, {"w1", "w3", "w2", "w4"}}});
  e.dimension = 4;
  e.counts = {6, 17, 25, 17, 4};
  e.reduced_homology = {0, 0, 0, 0, 0};
  e.strata = {{2,
               {"d", "a.d", "b.d", "c.d", "d.e", "a.d.e", "b.d.e",
                "c.d.e"}},
              {3,
               {"u1.u2.u3.u4", "v1.v2.v3.v4", "w1.w2.w3.w4",
                "u0.u1.u2.u3.u4", "v0.v1.v2.v3.v4", "w0.w1.w2.w3.w4",
                "x0.x1.x2.x3.x4"}}};
  e.koszul = CorpusEntry::kNo;
  return e;
}

CorpusEntry nonpure_flag() {
  CorpusEntry e;
  e.name = "nonpure_flag";
  e.description = "a filled triangle with a dangling edge; not pure";
  e.glued = false;
  e.records = {
      {"p", 0, {}, ""},
      {"q", 0, {}, ""},
      {"r", 0, {}, ""},
      {"s", 0, {}, ""},
      {"p.q", 1, {{"p", -1}, {"q", 1}}, ""},
      {"p.r", 1, {{"p", -1}, {"r", 1}}, ""},
      {"q.r", 1, {{"q", -1}, {"r", 1}}, ""},
      {"p.s", 1, {{"p", -1}, {"s", 1}}, ""},
      {"p.q.r", 2, {{"p.q", 1}, {"q.r", 1}, {"p.r", -1}}, ""},
  };
  e.declared_dim = 2;
  e.dimension = 2;
  e.counts = {4, 4, 1};
  e.pure = false;
  e.codim1 = false;  // not checked: meaningless without purity
  e.reduced_homology = {0, 0, 0};
  e.strata = {{0, {"p", "p.s"}}, {1, {"p.q.r"}}};
  e.koszul = CorpusEntry::kHypothesisFail;
  return e;
}

std::vector<CorpusEntry> build_all() {
  std::vector<CorpusEntry> all;
  for (int d = 0; d <= 4; ++d) all.push_back(simplex_entry(d));
  for (int d = 0; d <= 3; ++d) all.push_back(sphere_entry(d));
  all.push_back(y_double3cell());
  all.push_back(wedge3intervals());
  all.push_back(s1_bad());
  all.push_back(s1_bad_4d());
  all.push_back(s2_bad());
  all.push_back(s2_worse());
  all.push_back(s2_worse_open());
  all.push_back(nonpure_flag());
  return all;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> all = build_all();
  return all;
}

const CorpusEntry* corpus_find(const std::string& name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

CellComplex build_corpus_entry(const CorpusEntry& e) {
  if (e.glued) return build_glued_simplicial(e.spec);
  return CellComplex::from_records(e.records);
}

}  // namespace koszul
