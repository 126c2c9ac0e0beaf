#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/fields.hpp"

namespace koszul {

// Quadratic algebra T(V)/(R): generators plus a list of degree-2 relation
// vectors. A relation is a sparse vector over ordered generator pairs; the
// pair (i, j), meaning generator i times generator j, has index i*g + j.
struct QuadraticPresentation {
  std::vector<std::string> gens;
  using Relation = std::vector<std::pair<std::int64_t, std::int64_t>>;
  std::vector<Relation> relations;  // (pair index, integer coefficient)

  int g() const { return static_cast<int>(gens.size()); }
};

// Presentation of the graded-poset algebra: one generator r_x per element
// above the bottom; r_x r_y = 0 unless y is covered by x, and for every x
// covered from below by generators, r_x times the sum of those r_y vanishes.
// In products the left factor is the poset-higher element, so nonzero words
// descend in rank and die beyond the poset height.
QuadraticPresentation poset_presentation(const RankedPoset& P);

// Default ceiling on the number of degree-n words the dimension counter may
// enumerate or index; the KOSZUL_WORD_CAP environment variable overrides it
// for the CLI.
inline constexpr std::int64_t kDefaultWordCap = 2'000'000;

// dims[n] = dim of the degree-n component of T(V)/(R) over fd, 0 <= n <= N.
// Single-pair relations are treated as banned words and eliminated
// symbolically; the rest are handled by exact elimination of their
// translates inside the surviving word space (a union-find shortcut covers
// the common case where every translate is a +-1 difference or a lone
// word). BlowupError when a degree needs more than `word_cap` words.
std::vector<std::int64_t> graded_dimensions(const QuadraticPresentation& Q,
                                            const FieldDesc& fd, int N,
                                            std::int64_t word_cap);

// Dual presentation on the dual generators: relations spanning the
// orthogonal complement of the input relation span inside the pair space.
// Dense kernel computation - intended for small presentations and tests.
QuadraticPresentation quadratic_dual(const QuadraticPresentation& Q,
                                     const FieldDesc& fd);

// Structural dual of a poset presentation: the orthogonal complement of
// banned-pair + sum relations is spanned by differences of cover pairs
// sharing the upper element. Equivalent to quadratic_dual on the same input
// (tested), but costs nothing to build.
QuadraticPresentation poset_dual_presentation(const RankedPoset& P);

// Do the two relation lists span the same subspace of the pair space?
bool same_relation_span(const QuadraticPresentation& A,
                        const QuadraticPresentation& B, const FieldDesc& fd);

// Hilbert-series cross-check through degree N: coefficients of
// H_dual(t) * H(-t) - 1, which vanish through every degree when the algebra
// is Koszul. A nonzero entry refutes Koszulity; all-zero is only consistent
// with it. Requires the complex hypotheses (HypothesisError otherwise).
struct AlgebraReport {
  std::string field;
  int N = 0;
  std::vector<std::string> gens;
  std::vector<std::int64_t> dims;       // algebra dimensions, degrees 0..N
  std::vector<std::int64_t> dims_dual;  // dual algebra dimensions
  std::vector<std::int64_t> deviations; // product coefficients minus 1
  bool pass = false;                    // all deviations zero
};
AlgebraReport hilbert_probe(const CellComplex& X, const FieldDesc& fd, int N,
                            std::int64_t word_cap);

}  // namespace koszul
