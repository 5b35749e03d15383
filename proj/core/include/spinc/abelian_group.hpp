#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spinc/integer.hpp"
#include "spinc/matrix.hpp"
#include "spinc/smith.hpp"

namespace spinc {

/// Z^rank + Z/d1 + ... + Z/dk in invariant-factor form (each d >= 2, d_i | d_{i+1}).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::size_t rank, IntVector torsion);

  static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }
  /// (Z/2)^n, the additive group of an F2 vector space.
  static AbelianGroup elementary_2(std::size_t n);

  std::size_t rank() const { return rank_; }
  const IntVector& torsion() const { return torsion_; }
  std::size_t generator_count() const { return torsion_.size() + rank_; }

  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  bool has_2_torsion() const;
  /// Order of the group; only meaningful when finite.
  Integer order() const;

  std::string describe() const;  // e.g. "Z^2 + Z/2"

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t rank_ = 0;
  IntVector torsion_;
};

/// Element of an AbelianGroup. Torsion coordinates are kept in [0, d_i).
/// Generator order is torsion generators first, then free ones.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(AbelianGroup group);
  GroupElement(AbelianGroup group, IntVector free, IntVector torsion);

  /// From a flat coordinate vector in generator order (torsion, then free).
  static GroupElement from_flat(AbelianGroup group, const IntVector& flat);
  static GroupElement unit(const AbelianGroup& group, std::size_t generator);

  const AbelianGroup& group() const { return group_; }
  const IntVector& free() const { return free_; }
  const IntVector& torsion() const { return torsion_; }
  IntVector flat() const;

  bool is_zero() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& other);
  friend GroupElement operator*(const Integer& k, const GroupElement& x);

  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  void canonicalize();
  void require_same_group(const GroupElement& other) const;

  AbelianGroup group_;
  IntVector free_;
  IntVector torsion_;
};

/// Every element of a finite group, in lexicographic order of torsion
/// coordinates.
std::vector<GroupElement> enumerate_elements(const AbelianGroup& group);

/// The subgroup G[2] = {x : 2x = 0}, as its elements.
std::vector<GroupElement> two_torsion_elements(const AbelianGroup& group);

/// Presentation of Z^rows / im(M).
class Cokernel {
 public:
  explicit Cokernel(const IntMatrix& m);

  const AbelianGroup& group() const { return group_; }
  std::size_t ambient_dimension() const { return ambient_; }

  GroupElement project(const IntVector& v) const;
  /// A representative vector whose projection is `x`.
  IntVector section(const GroupElement& x) const;

 private:
  std::size_t ambient_ = 0;
  AbelianGroup group_;
  SmithDecomposition snf_;
  // SNF diagonal positions that survive as generators, in generator order.
  std::vector<std::size_t> kept_;
};

Cokernel cokernel(const IntMatrix& m);

/// The unique x with 2x = y. Fails with TwoTorsion when some invariant factor
/// is even and NotDivisible when a free coordinate of y is odd.
GroupElement halve(const AbelianGroup& group, const GroupElement& y);

/// A homomorphism G -> H recorded by the images of G's generators.
class GroupHom {
 public:
  GroupHom(AbelianGroup source, AbelianGroup target, std::vector<GroupElement> images);

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  const std::vector<GroupElement>& images() const { return images_; }

  GroupElement operator()(const GroupElement& x) const;

  /// Canonical preimage of y, or nothing when y is outside the image.
  std::optional<GroupElement> preimage(const GroupElement& y) const;
  bool is_surjective() const;
  bool is_isomorphism() const;

 private:
  IntMatrix lattice_matrix() const;

  AbelianGroup source_;
  AbelianGroup target_;
  std::vector<GroupElement> images_;
};

}  // namespace spinc
