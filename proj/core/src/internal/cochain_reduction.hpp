#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "spinc/cohomology.hpp"
#include "spinc/matrix.hpp"

namespace spinc::detail {

/// The relative cochain complex of a space, shrunk by eliminating pairs of
/// cells joined by a unit coboundary coefficient. Every elimination is logged
/// so cochains can be carried to the reduced complex (project) and back
/// (include); both directions are cochain maps and project o include = id.
class CochainReduction {
 public:
  CochainReduction(const Space& space, Ring ring);

  Ring ring() const { return ring_; }
  int top_degree() const { return static_cast<int>(cells_.size()) - 1; }

  /// Surviving cells of degree k, as indices into the total complex.
  const std::vector<std::size_t>& critical(int k) const;
  /// Reduced coboundary C^k -> C^{k+1} on critical cells; rows are
  /// critical(k + 1), columns critical(k).
  IntMatrix reduced_coboundary(int k) const;

  /// Full cochain on the total complex -> values on critical(k).
  IntVector project(int k, const IntVector& values) const;
  /// Values on critical(k) -> full cochain on the total complex (zero on the sub).
  IntVector include(int k, const IntVector& critical_values) const;

 private:
  using Sparse = std::map<std::size_t, Integer>;
  struct Elimination {
    int k;
    std::size_t a;  // cell of degree k
    std::size_t b;  // cell of degree k + 1
    Integer u;      // coefficient of b in the coboundary of a, a unit
    std::vector<std::pair<std::size_t, Integer>> column;  // coboundary of a without b
    std::vector<std::pair<std::size_t, Integer>> row;     // row b without a
  };

  void reduce();
  void eliminate(int k, std::size_t a, std::size_t b);
  void normalize(Integer& v) const;

  Ring ring_;
  // Cell numbering per degree: cells_[k][c] is a total-complex index.
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::vector<std::ptrdiff_t>> cell_of_;
  // cols_[k][a]: coboundary of cell a (degree k); rows_[k][b]: its transpose.
  std::vector<std::vector<Sparse>> cols_;
  std::vector<std::vector<Sparse>> rows_;
  std::vector<std::vector<bool>> alive_;
  std::vector<Elimination> log_;
  std::vector<std::vector<std::size_t>> critical_;  // total indices
  std::vector<std::vector<std::size_t>> critical_cells_;  // cell indices
};

}  // namespace spinc::detail
