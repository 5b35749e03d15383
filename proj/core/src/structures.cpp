#include "spinc/structures.hpp"

#include "spinc/cohomology_ops.hpp"
#include "spinc/error.hpp"

namespace spinc {
namespace {

template <typename Torsor>
void require_nonempty(const Torsor& t) {
  if (!t) fail(ErrorCode::InvalidInput, "structure without a torsor");
  if (!t->exists()) fail(ErrorCode::EmptyTorsor, "the torsor is empty");
}

template <typename S>
void require_same_torsor(const S& a, const S& b) {
  if (a.torsor != b.torsor) fail(ErrorCode::SpaceMismatch, "structures belong to different torsors");
}

}  // namespace

SpinTorsor::SpinTorsor(GroupPtr h1_mod2, CohomologyClass w2)
    : h1_(std::move(h1_mod2)), w2_(std::move(w2)), exists_(w2_.is_zero()) {
  if (h1_->degree() != 1 || h1_->ring() != Ring::Z2 || w2_.degree() != 2 || w2_.ring() != Ring::Z2)
    fail(ErrorCode::SpaceMismatch, "spin torsor needs H^1(;Z/2) and w2 in H^2(;Z/2)");
}

SpincTorsor::SpincTorsor(GroupPtr h2, const GroupPtr& h3, CohomologyClass w2, std::optional<GroupElement> twist)
    : h2_(std::move(h2)), w2_(std::move(w2)), W3_(bockstein(w2_, h3)), exists_(W3_.is_zero()) {
  if (h2_->degree() != 2 || h2_->ring() != Ring::Z)
    fail(ErrorCode::SpaceMismatch, "spin^c torsor needs the integral H^2");
  if (!exists_) return;
  c_ = integral_lift(w2_, h2_);
  if (!c_) fail(ErrorCode::Internal, "W3 = 0 but w2 has no integral lift");
  const GroupElement minus_c = -c_->coords();
  if (twist) {
    if (!(twist->group() == h2_->group())) fail(ErrorCode::InvalidInput, "twist is not an element of H^2");
    if (!(Integer(2) * *twist == Integer(2) * minus_c))
      fail(ErrorCode::InvalidInput, "twist t must satisfy 2t = -2c");
    default_twist_ = *twist == minus_c;
    twist_ = *twist;
  } else {
    twist_ = minus_c;
  }
}

const CohomologyClass& SpincTorsor::chern_base() const {
  if (!c_) fail(ErrorCode::EmptyTorsor, "empty spin^c torsor has no basepoint");
  return *c_;
}

const GroupElement& SpincTorsor::twist() const {
  if (!twist_) fail(ErrorCode::EmptyTorsor, "empty spin^c torsor has no conjugation");
  return *twist_;
}

SpinTorsorPtr spin_torsor(const GroupPtr& h1_mod2, const CohomologyClass& w2) {
  return std::make_shared<const SpinTorsor>(h1_mod2, w2);
}

SpincTorsorPtr spinc_torsor(const GroupPtr& h2, const GroupPtr& h3, const CohomologyClass& w2,
                            std::optional<GroupElement> twist) {
  return std::make_shared<const SpincTorsor>(h2, h3, w2, std::move(twist));
}

SpinStructure structure(const SpinTorsorPtr& torsor, const GroupElement& offset) {
  require_nonempty(torsor);
  if (!(offset.group() == torsor->group()->group())) fail(ErrorCode::InvalidInput, "offset is not in H^1(;Z/2)");
  return {torsor, offset};
}

SpincStructure structure(const SpincTorsorPtr& torsor, const GroupElement& offset) {
  require_nonempty(torsor);
  if (!(offset.group() == torsor->group()->group())) fail(ErrorCode::InvalidInput, "offset is not in H^2(;Z)");
  return {torsor, offset};
}

SpinStructure basepoint(const SpinTorsorPtr& torsor) {
  require_nonempty(torsor);
  return {torsor, GroupElement(torsor->group()->group())};
}

SpincStructure basepoint(const SpincTorsorPtr& torsor) {
  require_nonempty(torsor);
  return {torsor, GroupElement(torsor->group()->group())};
}

SpinStructure act(const SpinStructure& s, const GroupElement& u) { return structure(s.torsor, s.offset + u); }
SpincStructure act(const SpincStructure& s, const GroupElement& a) { return structure(s.torsor, s.offset + a); }

GroupElement difference(const SpinStructure& s, const SpinStructure& t) {
  require_same_torsor(s, t);
  return t.offset - s.offset;
}

GroupElement difference(const SpincStructure& s, const SpincStructure& t) {
  require_same_torsor(s, t);
  return t.offset - s.offset;
}

CohomologyClass c1(const SpincStructure& s) {
  return s.torsor->chern_base() + CohomologyClass(s.torsor->group(), Integer(2) * s.offset);
}

SpincStructure conjugate(const SpincStructure& s) { return structure(s.torsor, s.torsor->twist() - s.offset); }

SpincStructure alpha(const SpinStructure& s, const SpincTorsorPtr& target) {
  require_nonempty(s.torsor);
  require_nonempty(target);
  if (!target->chern_base().is_zero())
    fail(ErrorCode::Internal, "spin structures exist but the spin^c basepoint has c != 0");
  const CohomologyClass u(s.torsor->group(), s.offset);
  return structure(target, bockstein(u, target->group()).coords());
}

bool is_conjugation_invariant(const SpincStructure& s) { return conjugate(s) == s; }

bool in_image_of_alpha(const SpincStructure& s, const SpinTorsorPtr& spin) {
  if (!spin->exists()) return false;
  return bockstein_map(spin->group(), s.torsor->group()).preimage(s.offset).has_value();
}

SpincListing enumerate(const SpincTorsorPtr& torsor) {
  require_nonempty(torsor);
  const AbelianGroup& g = torsor->group()->group();
  SpincListing out;
  out.finite = g.is_finite();
  out.free_rank = g.rank();
  for (const auto& t : enumerate_elements(AbelianGroup(0, g.torsion()))) {
    GroupElement offset(g, IntVector(g.rank()), t.torsion());
    out.structures.push_back(structure(torsor, offset));
  }
  return out;
}

std::vector<SpinStructure> enumerate(const SpinTorsorPtr& torsor) {
  require_nonempty(torsor);
  std::vector<SpinStructure> out;
  for (const auto& u : enumerate_elements(torsor->group()->group())) out.push_back(structure(torsor, u));
  return out;
}

}  // namespace spinc
