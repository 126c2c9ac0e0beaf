#pragma once

#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/fields.hpp"

namespace koszul {

// One reason a criterion failed. `kind` is one of:
//   reduced_homology    (degree, dim)       - nonzero reduced homology
//   stratum             (n, cell, cell_dim) - singular cell in range
//   cps                 (n, k, dim)         - nonzero bigraded cohomology
//   reduced_cohomology  (degree, dim)       - nonzero reduced cohomology
//   star                (degree, cell, cell_dim, dim)
//                                           - nonzero star-relative cohomology
// Unused numeric fields stay -1 / 0; `cell` stays empty.
struct Witness {
  std::string kind;
  int degree = -1;
  int n = -1;
  int k = -1;
  std::string cell;
  int cell_dim = -1;
  long long dim = 0;
};

struct Verdict {
  bool koszul = false;
  std::string criterion;  // "local-homology", "cps", "star-cohomology"
  std::string field;
  std::vector<Witness> witnesses;  // empty exactly when koszul
};

// The three equivalent characterisations of Koszulity for the quadratic
// algebra of a pure, codimension-one connected complex of dimension d.
// Each throws HypothesisError when the complex does not qualify.
//
// local-homology: reduced homology vanishes below degree d and the strata
//                 S_0..S_{d-2} are all empty.
// cps:            the bigraded cohomology vanishes for 0 <= k < n < d.
// star-cohomology: reduced cohomology vanishes below degree d and, for every
//                 k-cell, the star-relative cohomology vanishes in degrees
//                 strictly between k+1 and d. (The strict lower bound
//                 matters: degree k+1 may be nonzero on Koszul complexes.)
Verdict koszul_local_homology(const CellComplex& X, const FieldDesc& fd);
Verdict koszul_cps(const CellComplex& X, const FieldDesc& fd);
Verdict koszul_star_cohomology(const CellComplex& X, const FieldDesc& fd);

struct CrossCheck {
  bool koszul = false;
  std::string field;
  std::vector<Verdict> verdicts;  // the three criteria, fixed order
};

// Runs all three criteria and demands one answer; DisagreementError (with a
// full dump of the three verdicts in the message) when they split.
CrossCheck cross_check(const CellComplex& X, const FieldDesc& fd);

}  // namespace koszul
