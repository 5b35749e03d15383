#pragma once

#include <cstddef>
#include <vector>

#include "spinc/matrix.hpp"
#include "spinc/simplicial_complex.hpp"

namespace spinc {

/// Matrix of the boundary map from k-chains to (k-1)-chains in the canonical
/// orderings; requires 1 <= k <= dim K.
IntMatrix boundary_matrix(const SimplicialComplex& k, int degree);

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  int value;
};

/// Nonzero entries of boundary_matrix, column by column.
std::vector<MatrixEntry> boundary_entries(const SimplicialComplex& k, int degree);

Chain boundary(const SimplicialComplex& k, const Chain& c);

/// Smallest subcomplex of K containing every simplex that shares a vertex
/// with L.
SimplicialComplex closed_star(const SimplicialComplex& k, const SimplicialComplex& l);

struct Collapse {
  Simplex free_face;
  Simplex coface;
};

struct CollapseResult {
  bool reached = false;  // dimension <= target after the greedy run
  std::vector<Collapse> log;
  SimplicialComplex remainder;
};

/// Greedy elementary collapses, highest-dimensional coface first with
/// lexicographic tie-break. `false` is not a proof of non-collapsibility.
CollapseResult collapses_to_dim(const SimplicialComplex& n, int target_dim);

/// Coherent +-1 top-dimensional cycle; the lexicographically smallest
/// n-simplex of each connected component carries +1. Fails with NotClosed or
/// NotOrientable.
Chain fundamental_cycle(const SimplicialComplex& k, int n);

}  // namespace spinc
