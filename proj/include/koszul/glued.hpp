#pragma once

#include <array>
#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"

namespace koszul {

// A space presented as simplices glued along faces.
//
// `simplices` are ordered tuples of distinct vertex names. A name shared by
// two tuples denotes the same vertex, so faces spanned by equal name sets
// coincide automatically (with the orientation induced by the name order).
//
// Each identification pairs two equal-length tuples and glues the two faces
// they span by the order-preserving vertex map; the gluing propagates to all
// subfaces, with orientation signs tracked through every merge. It is an
// error (ValidationError) if a tuple repeats a name, if a referenced face
// does not exist, if the closure of the identifications maps two vertices of
// one simplex to the same point (the simplex would collapse onto itself and
// regularity would fail), or if two merge chains force opposite orientations
// on the same face.
//
// Cells of the result keep input order grouped by dimension; each cell class
// is named by its first-created representative, vertex names joined by '.'.
// Distinct cells may share a vertex set; ids stay unique because equal name
// sets are always merged. Vertex names must be non-empty and must not
// contain '.'.
struct GluedSimplicialSpec {
  std::vector<std::vector<std::string>> simplices;
  std::vector<std::array<std::vector<std::string>, 2>> identifications;
};

CellComplex build_glued_simplicial(const GluedSimplicialSpec& spec);

}  // namespace koszul
