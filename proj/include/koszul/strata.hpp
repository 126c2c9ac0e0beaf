#pragma once

#include <climits>
#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/fields.hpp"
#include "koszul/homology.hpp"

namespace koszul {

// Singularity stratification: cell sigma lies in stratum n when the minimal
// degree with nonzero local homology at sigma is n + 1; a cell with no local
// homology in degrees 0..dim(X) is non-singular. Strata are unions of open
// cells, so the per-cell assignment is the whole answer. n = -1 occurs
// (isolated vertices: local homology already in degree 0) and is reported.
struct Stratification {
  static constexpr int kNonSingular = INT_MIN;
  std::string field;
  std::vector<int> stratum;  // per cell; kNonSingular when none

  std::vector<int> cells_in(int n) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(stratum.size()); ++i)
      if (stratum[i] == n) out.push_back(i);
    return out;
  }
  bool empty_stratum(int n) const { return cells_in(n).empty(); }
};

Stratification stratify(const CellComplex& X, const FieldDesc& fd);

// Dimension bound: for n < dim(X) - 1, stratum-n cells have dimension <= n.
// Meaningful only for pure complexes; otherwise the check is skipped with a
// warning (the bound can genuinely fail without purity).
struct DimensionBoundReport {
  bool skipped = false;
  std::string warning;
  std::vector<int> violations;  // offending cell indices
  bool pass() const { return violations.empty(); }
};
DimensionBoundReport check_dimension_bound(const Stratification& S,
                                           const CellComplex& X);

// Strengthened singularity check. Hypotheses: pure, codimension-one
// connected, and reduced homology vanishing below the top degree. When they
// hold and the minimal non-empty stratum index m satisfies m < dim(X) - 1,
// that stratum must contain a cell of dimension strictly below m.
struct StrengthenedSingularityReport {
  enum Status { kNotApplicable, kVacuous, kPass, kFail };
  Status status = kNotApplicable;
  int minimal_n = Stratification::kNonSingular;
  std::string detail;
};
StrengthenedSingularityReport check_strengthened_singularity(
    const Stratification& S, const CellComplex& X, const FieldDesc& fd);

}  // namespace koszul
