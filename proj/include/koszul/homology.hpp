#pragma once

#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/fields.hpp"

namespace koszul {

// Homology or cohomology dimensions over one field. dims[k] is the dimension
// in degree k for 0 <= k <= dim(X); degrees outside the stored range are
// zero. An empty complex yields an empty table.
struct HomologyTable {
  std::string field;
  bool reduced = false;
  std::vector<long long> dims;

  long long at(int k) const {
    return (k >= 0 && k < static_cast<int>(dims.size())) ? dims[k] : 0;
  }
  bool operator==(const HomologyTable& o) const {
    return field == o.field && reduced == o.reduced && dims == o.dims;
  }
};

// Cellular (co)homology via exact ranks of the boundary matrices. Reduced
// variants augment degree 0 with the all-ones map. The cohomology routines
// run on the transposed matrices and never reuse homology ranks, so the two
// routes stay independent cross-checks.
HomologyTable homology(const CellComplex& X, const FieldDesc& fd, bool reduced);
HomologyTable cohomology(const CellComplex& X, const FieldDesc& fd,
                         bool reduced);

// Relative (co)homology of (X, A) for a downward-closed mask A: the chain
// complex on the cells outside A with boundary entries into A dropped.
// Relative tables are unreduced.
HomologyTable relative_homology(const CellComplex& X, const CellMask& A,
                                const FieldDesc& fd);
HomologyTable relative_cohomology(const CellComplex& X, const CellMask& A,
                                  const FieldDesc& fd);

// Local homology at one cell: relative to the complement of its open star.
// Equals H(X, X - x) for every point x in the open cell, which is what the
// singularity strata consult.
HomologyTable local_homology(const CellComplex& X, int cell,
                             const FieldDesc& fd);
// Cohomology companion of local_homology, on the transposed matrices.
HomologyTable star_relative_cohomology(const CellComplex& X, int cell,
                                       const FieldDesc& fd);

long long euler_characteristic(const CellComplex& X);

// Chain-level audit: boundary-of-boundary and its transpose vanish over fd.
bool chain_identities_ok(const CellComplex& X, const FieldDesc& fd);

// Necessary regularity condition: the boundary subcomplex of every k-cell
// has the rational homology of a (k-1)-sphere. Not sufficient (homology
// spheres exist), which the CLI documentation states.
struct BoundarySphereReport {
  bool pass = true;
  std::vector<std::string> failures;
};
BoundarySphereReport check_boundary_spheres(const CellComplex& X);

}  // namespace koszul
