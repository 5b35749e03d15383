#pragma once

#include <cstddef>
#include <optional>

#include "spinc/matrix.hpp"

namespace spinc {

/// D = U * M * V with U, V unimodular and D diagonal, d1 | d2 | ... | dr.
/// The inverses of U and V are carried along so callers can move between
/// the original and the diagonal coordinates in both directions.
struct SmithDecomposition {
  IntMatrix U, D, V;
  IntMatrix U_inverse, V_inverse;
  /// Nonzero diagonal entries of D in order, all positive (units kept).
  IntVector invariant_factors;

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Pivot rule: smallest nonzero |entry| of the active block, ties broken by
/// (row, column) order.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Witness that M x = b has no integer solution: in SNF coordinates
/// c = U b, either c[index] is not divisible by d[index] (index < rank) or
/// c[index] != 0 for index >= rank.
struct Insolvability {
  std::size_t index = 0;
  Integer value;
  Integer divisor;  // 0 when index lies beyond the rank
};

struct SolveResult {
  std::optional<IntVector> solution;
  std::optional<Insolvability> certificate;
};

SolveResult integer_solve(const IntMatrix& m, const IntVector& b);
SolveResult integer_solve(const SmithDecomposition& snf, const IntVector& b);

/// Some x with M x = b over Z, or nothing. Deterministic: the free SNF
/// coordinates of x are set to zero, so b = 0 yields x = 0.
std::optional<IntVector> solve_Z(const IntMatrix& m, const IntVector& b);

/// Gaussian elimination over Z/2; free variables are set to zero.
std::optional<F2Vector> solve_F2(const F2Matrix& m, const F2Vector& b);

}  // namespace spinc
