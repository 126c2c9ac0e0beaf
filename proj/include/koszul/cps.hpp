#pragma once

#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/fields.hpp"

namespace koszul {

// Bigraded cohomology of the pair bicomplex.
//
// C^n_k is spanned by pairs alpha (x) beta with beta a face of alpha (the
// pair alpha (x) alpha included), dim alpha = n, dim beta = k. The
// differential d lowers k through the boundary of beta; delta raises n
// through the coboundary of alpha. L^n_k = coker(d : C^n_{k+1} -> C^n_k),
// and dims[n][k] is the cohomology of the induced complex L^*_k in degree n.
//
// Construction always audits d.d = 0, delta.delta = 0, d.delta = delta.d and
// the well-definedness of the maps induced on the cokernels; any failure is
// an internal error, not a data error.
struct CpsTable {
  std::string field;
  int d = -1;  // dimension of the complex
  std::vector<std::vector<long long>> dims;  // dims[n][k], 0 <= k <= n <= d

  long long at(int n, int k) const {
    if (n < 0 || n > d || k < 0 || k > n) return 0;
    return dims[n][k];
  }
};

CpsTable cps_table(const CellComplex& X, const FieldDesc& fd);

// Pair counts dim C^n_k (field-free), same indexing as CpsTable::dims.
std::vector<std::vector<long long>> cps_space_dims(const CellComplex& X);

// Quotient dimensions dim L^n_k over fd, same indexing.
std::vector<std::vector<long long>> cps_quotient_dims(const CellComplex& X,
                                                      const FieldDesc& fd);

}  // namespace koszul
