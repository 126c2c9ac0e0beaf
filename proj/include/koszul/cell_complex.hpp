#pragma once

#include <string>
#include <utility>
#include <vector>

namespace koszul {

// One cell of a finite regular cell complex, as supplied by the caller.
// `boundary` lists the (dim-1)-cells of the topological boundary with
// incidence signs +-1; regularity makes each face appear exactly once.
struct CellRecord {
  std::string id;
  int dim = 0;
  std::vector<std::pair<std::string, int>> boundary;
  std::string label;  // optional display text; never used in computations
};

using CellMask = std::vector<char>;  // one flag per cell index

class CellComplex {
 public:
  struct Cell {
    std::string id;
    int dim = 0;
    std::string label;
    std::vector<std::pair<int, int>> boundary;    // ((dim-1)-cell index, sign)
    std::vector<std::pair<int, int>> coboundary;  // ((dim+1)-cell index, sign)
  };

  CellComplex() = default;

  // Structural validation (ValidationError on failure): unique non-empty ids,
  // boundary references resolve to cells of dimension dim-1, signs are +-1,
  // no face is listed twice, 0-cells have empty boundary, the composite
  // boundary-of-boundary vanishes over the integers, and the two endpoint
  // signs of every 1-cell cancel (boundary-of-boundary zero for the
  // augmented complex, which reduced homology relies on).
  static CellComplex from_records(std::vector<CellRecord> records);

  int size() const { return static_cast<int>(cells_.size()); }
  int dimension() const { return dim_; }  // -1 when empty
  const Cell& cell(int i) const { return cells_[i]; }
  int index_of(const std::string& id) const;  // -1 when absent
  const std::vector<int>& cells_of_dim(int k) const;

  // Face order: a <= b iff cell a lies in the closure of cell b.
  CellMask closure_mask(int i) const;
  CellMask up_set_mask(int i) const;
  bool leq(int a, int b) const;

  // Open star: indices of all cells whose closure contains cell i (sorted).
  std::vector<int> star(int i) const;

  // Every cell is a face of a top-dimensional cell.
  bool is_pure() const;

  // The top-dimensional and codimension-one cells form a single
  // incidence-connected block; in dimension 0 this degenerates to
  // "at most one cell". Requires purity (HypothesisError otherwise).
  bool is_codim1_connected() const;

  // Downward-closed masks. skeleton(-1) is empty; skeleton(k>=dim) is all.
  CellMask skeleton(int k) const;
  // Cells whose closure avoids cell i (complement of the open star).
  CellMask star_complement(int i) const;

  // New complex on a downward-closed selection; ids are preserved.
  CellComplex induced(const CellMask& mask) const;

  std::vector<CellRecord> to_records() const;

 private:
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<int> sorted_by_id_;  // cell indices ordered by id, for lookup
  int dim_ = -1;
};

// ValidationError unless mask is downward-closed in X.
void require_subcomplex(const CellComplex& X, const CellMask& mask);

// Pure and codimension-one connected; HypothesisError otherwise.
void require_hypotheses(const CellComplex& X);

// Graded poset of the cells with a formal bottom element of rank 0
// (rank(cell) = dim + 1) and optionally a formal top element covering the
// top-dimensional cells.
struct RankedPoset {
  int elements = 0;      // element 0 = bottom, element i+1 = cell i
  bool has_top = false;  // when true, the top is element elements-1
  int height = 0;        // rank of the largest element
  std::vector<int> rank;
  std::vector<std::vector<int>> lower;  // elements covered (one rank down)
  std::vector<std::string> name;        // bottom is "0"; cells keep their ids
};

// adjoin_top demands purity and codimension-one connectivity
// (HypothesisError otherwise): only then does one formal top cover exactly
// the maximal cells, each one rank step below it.
RankedPoset face_poset(const CellComplex& X, bool adjoin_top);

struct SubdivisionResult {
  // Order complex of the face poset: one vertex per cell of X, one k-cell
  // per strictly increasing chain of k+1 cells of X.
  CellComplex complex;
  std::vector<int> carrier;    // sd-cell -> index of the largest chain member
  std::vector<int> vertex_of;  // X-cell -> index of its barycenter vertex
};

SubdivisionResult barycentric_subdivision(const CellComplex& X);

}  // namespace koszul
