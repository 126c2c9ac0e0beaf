#include "koszul/strata.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace koszul {

Stratification stratify(const CellComplex& X, const FieldDesc& fd) {
  Stratification S;
  S.field = fd.name();
  S.stratum.assign(X.size(), Stratification::kNonSingular);
  const int d = X.dimension();
  for (int i = 0; i < X.size(); ++i) {
    const HomologyTable local = local_homology(X, i, fd);
    for (int k = 0; k <= d; ++k)
      if (local.at(k) != 0) {
        S.stratum[i] = k - 1;
        break;
      }
  }
  return S;
}

DimensionBoundReport check_dimension_bound(const Stratification& S,
                                           const CellComplex& X) {
  DimensionBoundReport rep;
  if (!X.is_pure()) {
    rep.skipped = true;
    rep.warning =
        "complex is not pure; the stratum dimension bound only applies to "
        "pure complexes and was not checked";
    return rep;
  }
  const int d = X.dimension();
  for (int i = 0; i < X.size(); ++i) {
    const int n = S.stratum[i];
    if (n == Stratification::kNonSingular || n >= d - 1) continue;
    if (X.cell(i).dim > n) rep.violations.push_back(i);
  }
  return rep;
}

StrengthenedSingularityReport check_strengthened_singularity(
    const Stratification& S, const CellComplex& X, const FieldDesc& fd) {
  StrengthenedSingularityReport rep;
  const int d = X.dimension();
  if (!X.is_pure() || !X.is_codim1_connected()) {
    rep.status = StrengthenedSingularityReport::kNotApplicable;
    rep.detail = "complex is not pure and connected through codimension-one "
                 "faces";
    return rep;
  }
  const HomologyTable reduced = homology(X, fd, true);
  for (int k = 0; k < d; ++k)
    if (reduced.at(k) != 0) {
      rep.status = StrengthenedSingularityReport::kNotApplicable;
      rep.detail = "reduced homology does not vanish below the top degree";
      return rep;
    }

  int minimal = Stratification::kNonSingular;
  for (int n : S.stratum)
    if (n != Stratification::kNonSingular)
      minimal = minimal == Stratification::kNonSingular ? n
                                                        : std::min(minimal, n);
  rep.minimal_n = minimal;
  if (minimal == Stratification::kNonSingular || minimal >= d - 1) {
    rep.status = StrengthenedSingularityReport::kVacuous;
    rep.detail = minimal == Stratification::kNonSingular
                     ? "no singular cells"
                     : "minimal non-empty stratum is not below dimension-1";
    return rep;
  }
  for (int i = 0; i < X.size(); ++i)
    if (S.stratum[i] == minimal && X.cell(i).dim < minimal) {
      rep.status = StrengthenedSingularityReport::kPass;
      rep.detail = "stratum " + std::to_string(minimal) +
                   " contains cell '" + X.cell(i).id + "' of dimension " +
                   std::to_string(X.cell(i).dim);
      return rep;
    }
  rep.status = StrengthenedSingularityReport::kFail;
  rep.detail = "stratum " + std::to_string(minimal) +
               " has no cell of dimension below " + std::to_string(minimal);
  return rep;
}

}  // namespace koszul
