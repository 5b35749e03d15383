#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include "spinc/abelian_group.hpp"
#include "spinc/simplicial_complex.hpp"

namespace spinc {

enum class Ring { Z, Z2 };

std::string_view to_string(Ring ring);

/// A complex, or a pair (total, sub) when relative. Relative cochains are
/// absolute cochains that vanish on every simplex of `sub`.
class Space {
 public:
  explicit Space(ComplexPtr total);
  Space(ComplexPtr total, ComplexPtr sub);
  explicit Space(const SubcomplexPair& pair) : Space(pair.total(), pair.sub()) {}

  const ComplexPtr& total() const { return total_; }
  /// Null for an absolute space.
  const ComplexPtr& sub() const { return sub_; }
  bool is_relative() const { return sub_ != nullptr; }

  /// Whether the k-simplex at index i of the total complex lies in `sub`.
  bool in_sub(int k, std::size_t i) const;

  /// The same space with the subcomplex forgotten.
  Space absolute() const { return Space(total_); }

  friend bool operator==(const Space& a, const Space& b);

 private:
  ComplexPtr total_;
  ComplexPtr sub_;
  std::vector<std::vector<bool>> in_sub_;
};

/// k-cochain on the total complex of a space, indexed by the k-simplex order.
/// Z/2 cochains hold values in {0, 1}.
struct Cochain {
  int degree = 0;
  Ring ring = Ring::Z;
  IntVector values;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain zero_cochain(const SimplicialComplex& k, int degree, Ring ring);
Cochain coboundary(const SimplicialComplex& k, const Cochain& z);

namespace detail {
class CochainReduction;
}

class CohomologyGroup;
using GroupPtr = std::shared_ptr<const CohomologyGroup>;

/// H^k of a space in one ring, read off a reduced cochain complex shared by
/// all degrees.
class CohomologyGroup {
 public:
  const Space& space() const { return space_; }
  int degree() const { return degree_; }
  Ring ring() const { return ring_; }
  const AbelianGroup& group() const { return group_; }

  /// Coordinates of a cocycle; fails with NotCocycle when z is not a cocycle
  /// of this space and SpaceMismatch on a degree or ring mismatch.
  GroupElement coordinates(const Cochain& z) const;
  Cochain representative(const GroupElement& x) const;
  std::vector<Cochain> basis_cocycles() const;

  /// Checks that z has the right shape, is a cocycle and vanishes on the sub.
  void require_cocycle(const Cochain& z) const;

 private:
  friend class Cohomology;
  CohomologyGroup(Space space, int degree, Ring ring,
                  std::shared_ptr<const detail::CochainReduction> reduction);

  Space space_;
  int degree_;
  Ring ring_;
  std::shared_ptr<const detail::CochainReduction> reduction_;
  AbelianGroup group_;
  // Over Z: kernel basis Z of the reduced coboundary (columns), its left
  // inverse P, and the cokernel of P * (previous reduced coboundary).
  IntMatrix kernel_basis_;
  IntMatrix kernel_coords_;
  std::shared_ptr<const Cokernel> cokernel_;
};

/// All cohomology groups of a space in one ring.
class Cohomology {
 public:
  static std::shared_ptr<const Cohomology> compute(const Space& space, Ring ring);

  const Space& space() const { return space_; }
  Ring ring() const { return ring_; }
  /// H^k; trivial outside [0, dim].
  GroupPtr group(int k) const;

 private:
  Cohomology(Space space, Ring ring);

  Space space_;
  Ring ring_;
  std::shared_ptr<const detail::CochainReduction> reduction_;
  std::vector<GroupPtr> groups_;
};

/// Convenience: H^k(space; ring).
GroupPtr cohomology(const Space& space, int k, Ring ring);

/// An element of a cohomology group.
class CohomologyClass {
 public:
  CohomologyClass(GroupPtr parent, GroupElement coords);
  static CohomologyClass zero(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const GroupElement& coords() const { return coords_; }
  int degree() const { return parent_->degree(); }
  Ring ring() const { return parent_->ring(); }
  bool is_zero() const { return coords_.is_zero(); }

  CohomologyClass operator+(const CohomologyClass& other) const;
  CohomologyClass operator-(const CohomologyClass& other) const;
  CohomologyClass operator-() const;
  friend CohomologyClass operator*(const Integer& k, const CohomologyClass& x);

  /// Same group object (or equal space, degree and ring) and equal coordinates.
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);

 private:
  void require_same_parent(const CohomologyClass& other) const;

  GroupPtr parent_;
  GroupElement coords_;
};

bool same_group(const CohomologyGroup& a, const CohomologyGroup& b);

}  // namespace spinc
