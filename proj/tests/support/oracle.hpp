#pragma once

// Reference computations used only by the tests. They share no code with the
// library's elimination routines: boundary matrices are rebuilt from vertex
// lists, and integer work is done in checked 64-bit arithmetic.

#include <cstdint>
#include <map>
#include <vector>

#include "spinc/matrix.hpp"
#include "spinc/simplicial_complex.hpp"

namespace oracle {

struct Group {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors >= 2, ascending

  friend bool operator==(const Group&, const Group&) = default;
};

/// Rows are (k-1)-simplices, columns k-simplices, from vertex lists alone.
using SparseRows = std::vector<std::map<std::size_t, std::int64_t>>;
SparseRows boundary_rows(const spinc::SimplicialComplex& k, int degree);

/// Nonzero invariant factors (units included) by sparse elimination.
std::vector<std::int64_t> invariant_factors(SparseRows rows, std::size_t cols);

std::size_t rank_mod2(const SparseRows& rows, std::size_t cols);

/// H^k over Z via universal coefficients from the boundary invariant factors;
/// over Z/2 `torsion` holds one 2 per dimension.
Group cohomology(const spinc::SimplicialComplex& k, int degree, bool mod2);

spinc::Integer determinant(const spinc::IntMatrix& m);  // fraction-free Bareiss

}  // namespace oracle
