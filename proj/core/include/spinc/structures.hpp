#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "spinc/cohomology.hpp"

namespace spinc {

/// Spin structures as an H^1(X; Z/2)-torsor; nonempty exactly when w2 = 0.
class SpinTorsor {
 public:
  SpinTorsor(GroupPtr h1_mod2, CohomologyClass w2);

  bool exists() const { return exists_; }
  const GroupPtr& group() const { return h1_; }
  const CohomologyClass& w2() const { return w2_; }

 private:
  GroupPtr h1_;
  CohomologyClass w2_;
  bool exists_;
};

/// Spin^c structures as an H^2(X; Z)-torsor; nonempty exactly when W3 = 0.
/// The basepoint has Chern class c, a canonical integral lift of w2, and
/// conjugation acts on offsets by a -> twist - a.
class SpincTorsor {
 public:
  /// `h3` is the integral H^3 of the same space (target of the Bockstein).
  /// Without `twist`, the twist is -c; a supplied twist must satisfy
  /// 2 twist = -2c.
  SpincTorsor(GroupPtr h2, const GroupPtr& h3, CohomologyClass w2, std::optional<GroupElement> twist = {});

  bool exists() const { return exists_; }
  const GroupPtr& group() const { return h2_; }
  const CohomologyClass& w2() const { return w2_; }
  const CohomologyClass& W3() const { return W3_; }
  /// Fails with EmptyTorsor when the torsor is empty.
  const CohomologyClass& chern_base() const;
  const GroupElement& twist() const;
  bool default_twist() const { return default_twist_; }

 private:
  GroupPtr h2_;
  CohomologyClass w2_;
  CohomologyClass W3_;
  bool exists_;
  std::optional<CohomologyClass> c_;
  std::optional<GroupElement> twist_;
  bool default_twist_ = true;
};

using SpinTorsorPtr = std::shared_ptr<const SpinTorsor>;
using SpincTorsorPtr = std::shared_ptr<const SpincTorsor>;

SpinTorsorPtr spin_torsor(const GroupPtr& h1_mod2, const CohomologyClass& w2);
SpincTorsorPtr spinc_torsor(const GroupPtr& h2, const GroupPtr& h3, const CohomologyClass& w2,
                            std::optional<GroupElement> twist = {});

struct SpinStructure {
  SpinTorsorPtr torsor;
  GroupElement offset;  // relative to the basepoint, in H^1(X; Z/2)

  friend bool operator==(const SpinStructure& a, const SpinStructure& b) {
    return a.torsor == b.torsor && a.offset == b.offset;
  }
};

struct SpincStructure {
  SpincTorsorPtr torsor;
  GroupElement offset;  // relative to the basepoint, in H^2(X; Z)

  friend bool operator==(const SpincStructure& a, const SpincStructure& b) {
    return a.torsor == b.torsor && a.offset == b.offset;
  }
};

/// basepoint + offset; fails with EmptyTorsor when there is nothing to point at.
SpinStructure structure(const SpinTorsorPtr& torsor, const GroupElement& offset);
SpincStructure structure(const SpincTorsorPtr& torsor, const GroupElement& offset);
SpinStructure basepoint(const SpinTorsorPtr& torsor);
SpincStructure basepoint(const SpincTorsorPtr& torsor);

SpinStructure act(const SpinStructure& s, const GroupElement& u);
SpincStructure act(const SpincStructure& s, const GroupElement& a);
/// The d with act(s, d) = t.
GroupElement difference(const SpinStructure& s, const SpinStructure& t);
GroupElement difference(const SpincStructure& s, const SpincStructure& t);

/// c + 2 * offset.
CohomologyClass c1(const SpincStructure& s);
SpincStructure conjugate(const SpincStructure& s);

/// basepoint + u  |->  spin^c basepoint + bockstein(u). Needs w2 = 0, where
/// the spin^c basepoint has c = 0.
SpincStructure alpha(const SpinStructure& s, const SpincTorsorPtr& target);

bool is_conjugation_invariant(const SpincStructure& s);
/// False for every s when spin structures do not exist.
bool in_image_of_alpha(const SpincStructure& s, const SpinTorsorPtr& spin);

struct SpincListing {
  bool finite = true;
  std::size_t free_rank = 0;
  /// Every structure when finite; otherwise one per torsion coset (free part 0).
  std::vector<SpincStructure> structures;
};

SpincListing enumerate(const SpincTorsorPtr& torsor);
std::vector<SpinStructure> enumerate(const SpinTorsorPtr& torsor);

}  // namespace spinc
