#include "spinc/cohomology.hpp"

#include <string>

#include "internal/cochain_reduction.hpp"
#include "spinc/error.hpp"
#include "spinc/smith.hpp"

namespace spinc {

std::string_view to_string(Ring ring) { return ring == Ring::Z ? "Z" : "Z2"; }

Space::Space(ComplexPtr total) : total_(std::move(total)) {
  if (!total_) fail(ErrorCode::InvalidInput, "space without a complex");
}

Space::Space(ComplexPtr total, ComplexPtr sub) : Space(std::move(total)) {
  if (!sub) return;
  if (!sub->is_subcomplex_of(*total_)) fail(ErrorCode::NotSubcomplex, "sub is not a subcomplex of total");
  sub_ = std::move(sub);
  in_sub_.resize(static_cast<std::size_t>(std::max(total_->dim() + 1, 0)));
  for (int k = 0; k <= total_->dim(); ++k) {
    auto& mask = in_sub_[static_cast<std::size_t>(k)];
    mask.assign(total_->count(k), false);
    if (k > sub_->dim()) continue;
    for (const auto& s : sub_->simplices(k)) mask[*total_->index_of(s)] = true;
  }
}

bool Space::in_sub(int k, std::size_t i) const {
  if (!sub_ || k < 0 || k > total_->dim()) return false;
  return in_sub_[static_cast<std::size_t>(k)][i];
}

bool operator==(const Space& a, const Space& b) {
  auto same = [](const ComplexPtr& x, const ComplexPtr& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    return *x == *y;
  };
  return same(a.total_, b.total_) && same(a.sub_, b.sub_);
}

Cochain zero_cochain(const SimplicialComplex& k, int degree, Ring ring) {
  return Cochain{degree, ring, IntVector(k.count(degree))};
}

Cochain coboundary(const SimplicialComplex& k, const Cochain& z) {
  if (z.values.size() != k.count(z.degree)) fail(ErrorCode::SpaceMismatch, "cochain does not fit the complex");
  Cochain out = zero_cochain(k, z.degree + 1, z.ring);
  for (std::size_t j = 0; j < out.values.size(); ++j) {
    const auto faces = k.face_indices(z.degree + 1, j);
    Integer s = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (i % 2 == 0) s += z.values[faces[i]];
      else s -= z.values[faces[i]];
    }
    out.values[j] = z.ring == Ring::Z2 ? mod_floor(s, 2) : s;
  }
  return out;
}

CohomologyGroup::CohomologyGroup(Space space, int degree, Ring ring,
                                 std::shared_ptr<const detail::CochainReduction> reduction)
    : space_(std::move(space)), degree_(degree), ring_(ring), reduction_(std::move(reduction)) {
  const std::size_t n = reduction_->critical(degree).size();
  if (ring_ == Ring::Z2) {
    // Over a field every unit entry gets eliminated: the reduced coboundary is zero.
    if (!reduction_->reduced_coboundary(degree).is_zero() || !reduction_->reduced_coboundary(degree - 1).is_zero())
      fail(ErrorCode::Internal, "mod 2 reduction left a nonzero coboundary");
    group_ = AbelianGroup::elementary_2(n);
    return;
  }
  const IntMatrix next = reduction_->reduced_coboundary(degree);
  const IntMatrix prev = reduction_->reduced_coboundary(degree - 1);
  const SmithDecomposition snf = smith_normal_form(next);
  const std::size_t r = snf.rank();
  kernel_basis_ = IntMatrix(n, n - r);
  kernel_coords_ = IntMatrix(n - r, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) {
      kernel_basis_(i, j - r) = snf.V(i, j);
      kernel_coords_(j - r, i) = snf.V_inverse(j, i);
    }
  cokernel_ = std::make_shared<const Cokernel>(kernel_coords_ * prev);
  group_ = cokernel_->group();
}

void CohomologyGroup::require_cocycle(const Cochain& z) const {
  const SimplicialComplex& x = *space_.total();
  if (z.degree != degree_ || z.ring != ring_)
    fail(ErrorCode::SpaceMismatch, "cochain of degree " + std::to_string(z.degree) + " over " +
                                       std::string(to_string(z.ring)) + " offered to H^" +
                                       std::to_string(degree_) + " over " + std::string(to_string(ring_)));
  if (z.values.size() != x.count(degree_)) fail(ErrorCode::SpaceMismatch, "cochain does not fit the complex");
  for (std::size_t i = 0; i < z.values.size(); ++i) {
    if (ring_ == Ring::Z2 && z.values[i] != 0 && z.values[i] != 1)
      fail(ErrorCode::InvalidInput, "mod 2 cochain value outside {0, 1}");
    if (z.values[i] != 0 && space_.in_sub(degree_, i))
      fail(ErrorCode::NotCocycle, "cochain does not vanish on the subcomplex");
  }
  if (degree_ < x.dim()) {
    const Cochain dz = coboundary(x, z);
    for (const auto& v : dz.values)
      if (v != 0) fail(ErrorCode::NotCocycle, "cochain is not a cocycle");
  }
}

GroupElement CohomologyGroup::coordinates(const Cochain& z) const {
  require_cocycle(z);
  IntVector reduced = reduction_->project(degree_, z.values);
  if (ring_ == Ring::Z2) return GroupElement::from_flat(group_, reduced);
  return cokernel_->project(kernel_coords_ * reduced);
}

Cochain CohomologyGroup::representative(const GroupElement& x) const {
  if (!(x.group() == group_)) fail(ErrorCode::SpaceMismatch, "element of a different group");
  IntVector reduced;
  if (ring_ == Ring::Z2) reduced = x.flat();
  else reduced = kernel_basis_ * cokernel_->section(x);
  if (reduced.empty() && reduction_->critical(degree_).empty())
    return zero_cochain(*space_.total(), degree_, ring_);
  return Cochain{degree_, ring_, reduction_->include(degree_, reduced)};
}

std::vector<Cochain> CohomologyGroup::basis_cocycles() const {
  std::vector<Cochain> out;
  for (std::size_t i = 0; i < group_.generator_count(); ++i)
    out.push_back(representative(GroupElement::unit(group_, i)));
  return out;
}

Cohomology::Cohomology(Space space, Ring ring)
    : space_(std::move(space)),
      ring_(ring),
      reduction_(std::make_shared<const detail::CochainReduction>(space_, ring)) {}

std::shared_ptr<const Cohomology> Cohomology::compute(const Space& space, Ring ring) {
  std::shared_ptr<Cohomology> h(new Cohomology(space, ring));
  const int top = space.total()->dim();
  for (int k = 0; k <= top + 1; ++k)
    h->groups_.push_back(GroupPtr(new CohomologyGroup(space, k, ring, h->reduction_)));
  return h;
}

GroupPtr Cohomology::group(int k) const {
  if (k < 0) fail(ErrorCode::OutOfRange, "negative degree");
  if (static_cast<std::size_t>(k) < groups_.size()) return groups_[static_cast<std::size_t>(k)];
  return GroupPtr(new CohomologyGroup(space_, k, ring_, reduction_));
}

GroupPtr cohomology(const Space& space, int k, Ring ring) { return Cohomology::compute(space, ring)->group(k); }

bool same_group(const CohomologyGroup& a, const CohomologyGroup& b) {
  return &a == &b || (a.degree() == b.degree() && a.ring() == b.ring() && a.space() == b.space());
}

CohomologyClass::CohomologyClass(GroupPtr parent, GroupElement coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (!parent_) fail(ErrorCode::InvalidInput, "class without a group");
  if (!(coords_.group() == parent_->group()))
    fail(ErrorCode::SpaceMismatch, "coordinates do not belong to " + parent_->group().describe());
}

CohomologyClass CohomologyClass::zero(GroupPtr parent) {
  GroupElement z(parent->group());
  return CohomologyClass(std::move(parent), std::move(z));
}

void CohomologyClass::require_same_parent(const CohomologyClass& other) const {
  if (!same_group(*parent_, *other.parent_)) fail(ErrorCode::SpaceMismatch, "classes live in different groups");
}

CohomologyClass CohomologyClass::operator+(const CohomologyClass& other) const {
  require_same_parent(other);
  return CohomologyClass(parent_, coords_ + other.coords_);
}

CohomologyClass CohomologyClass::operator-(const CohomologyClass& other) const {
  require_same_parent(other);
  return CohomologyClass(parent_, coords_ - other.coords_);
}

CohomologyClass CohomologyClass::operator-() const { return CohomologyClass(parent_, -coords_); }

CohomologyClass operator*(const Integer& k, const CohomologyClass& x) {
  return CohomologyClass(x.parent_, k * x.coords_);
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
  return same_group(*a.parent_, *b.parent_) && a.coords_ == b.coords_;
}

}  // namespace spinc
