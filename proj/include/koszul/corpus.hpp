#pragma once

#include <string>
#include <utility>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/glued.hpp"

namespace koszul {

// Built-in regression corpus. Every entry carries the facts the test suite
// holds it to; values marked in comments as fixed by independent oracles
// were computed before being frozen here, never invented.
struct CorpusEntry {
  std::string name;
  std::string description;

  bool glued = true;
  GluedSimplicialSpec spec;         // when glued
  std::vector<CellRecord> records;  // when raw
  int declared_dim = 0;             // raw emission only

  // Expected facts.
  int dimension = 0;
  std::vector<long long> counts;  // cells per dimension, 0..dimension
  bool pure = true;
  bool codim1 = true;  // meaningful only when pure
  // Reduced homology dims, degrees 0..dimension; the corpus checker verifies
  // them over every field it runs, so entries here must be field-independent
  // (they are: every frozen table is torsion-free).
  std::vector<long long> reduced_homology;
  // Full stratification: stratum index -> cell ids sorted by (dim, id).
  // Cells listed nowhere are non-singular.
  std::vector<std::pair<int, std::vector<std::string>>> strata;
  enum Koszulity { kNo = 0, kYes = 1, kHypothesisFail = -1 };
  int koszul = kNo;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* corpus_find(const std::string& name);
CellComplex build_corpus_entry(const CorpusEntry& e);

}  // namespace koszul
