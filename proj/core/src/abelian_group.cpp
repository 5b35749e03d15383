#include "spinc/abelian_group.hpp"

#include <sstream>
#include <utility>

#include "spinc/error.hpp"

namespace spinc {

AbelianGroup::AbelianGroup(std::size_t rank, IntVector torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) fail(ErrorCode::InvalidInput, "torsion factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      fail(ErrorCode::InvalidInput, "torsion factors must form a divisibility chain");
  }
}

AbelianGroup AbelianGroup::elementary_2(std::size_t n) {
  return AbelianGroup(0, IntVector(n, Integer(2)));
}

bool AbelianGroup::has_2_torsion() const {
  for (const auto& d : torsion_)
    if (mpz_even_p(d.get_mpz_t())) return true;
  return false;
}

Integer AbelianGroup::order() const {
  if (rank_ != 0) fail(ErrorCode::OutOfRange, "order of an infinite group");
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

std::string AbelianGroup::describe() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank_ > 0) {
    out << 'Z';
    if (rank_ > 1) out << '^' << rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    out << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return out.str();
}

GroupElement::GroupElement(AbelianGroup group)
    : group_(std::move(group)),
      free_(group_.rank()),
      torsion_(group_.torsion().size()) {}

GroupElement::GroupElement(AbelianGroup group, IntVector free, IntVector torsion)
    : group_(std::move(group)), free_(std::move(free)), torsion_(std::move(torsion)) {
  if (free_.size() != group_.rank() || torsion_.size() != group_.torsion().size())
    fail(ErrorCode::SpaceMismatch, "group element coordinates do not match the group");
  canonicalize();
}

GroupElement GroupElement::from_flat(AbelianGroup group, const IntVector& flat) {
  const std::size_t t = group.torsion().size();
  if (flat.size() != group.generator_count())
    fail(ErrorCode::SpaceMismatch, "flat coordinates do not match the group");
  IntVector torsion(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(t));
  IntVector free(flat.begin() + static_cast<std::ptrdiff_t>(t), flat.end());
  return GroupElement(std::move(group), std::move(free), std::move(torsion));
}

GroupElement GroupElement::unit(const AbelianGroup& group, std::size_t generator) {
  IntVector flat(group.generator_count());
  flat.at(generator) = 1;
  return from_flat(group, flat);
}

IntVector GroupElement::flat() const {
  IntVector out = torsion_;
  out.insert(out.end(), free_.begin(), free_.end());
  return out;
}

bool GroupElement::is_zero() const {
  for (const auto& v : free_)
    if (v != 0) return false;
  for (const auto& v : torsion_)
    if (v != 0) return false;
  return true;
}

void GroupElement::canonicalize() {
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    torsion_[i] = mod_floor(torsion_[i], group_.torsion()[i]);
}

void GroupElement::require_same_group(const GroupElement& other) const {
  if (!(group_ == other.group_))
    fail(ErrorCode::SpaceMismatch, "group elements live in different groups");
}

GroupElement& GroupElement::operator+=(const GroupElement& other) {
  require_same_group(other);
  for (std::size_t i = 0; i < free_.size(); ++i) free_[i] += other.free_[i];
  for (std::size_t i = 0; i < torsion_.size(); ++i) torsion_[i] += other.torsion_[i];
  canonicalize();
  return *this;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  GroupElement out = *this;
  out += other;
  return out;
}

GroupElement GroupElement::operator-() const {
  GroupElement out = *this;
  for (auto& v : out.free_) v = -v;
  for (auto& v : out.torsion_) v = -v;
  out.canonicalize();
  return out;
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
  return *this + (-other);
}

GroupElement operator*(const Integer& k, const GroupElement& x) {
  GroupElement out = x;
  for (auto& v : out.free_) v *= k;
  for (auto& v : out.torsion_) v *= k;
  out.canonicalize();
  return out;
}

std::string GroupElement::to_string() const {
  return "free=" + spinc::to_string(free_) + " torsion=" + spinc::to_string(torsion_);
}

std::vector<GroupElement> enumerate_elements(const AbelianGroup& group) {
  if (!group.is_finite()) fail(ErrorCode::OutOfRange, "cannot enumerate an infinite group");
  const auto& d = group.torsion();
  std::vector<GroupElement> out;
  IntVector digits(d.size());
  for (;;) {
    out.emplace_back(group, IntVector{}, digits);
    std::size_t i = d.size();
    while (i > 0) {
      --i;
      if (++digits[i] < d[i]) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
    if (d.empty()) return out;
  }
}

std::vector<GroupElement> two_torsion_elements(const AbelianGroup& group) {
  // G[2] is generated by d/2 * e_i for each even factor d.
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < group.torsion().size(); ++i)
    if (mpz_even_p(group.torsion()[i].get_mpz_t())) even.push_back(i);
  std::vector<GroupElement> out;
  const std::size_t count = std::size_t{1} << even.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    IntVector torsion(group.torsion().size());
    for (std::size_t b = 0; b < even.size(); ++b)
      if (mask >> b & 1) torsion[even[b]] = group.torsion()[even[b]] / 2;
    out.emplace_back(group, IntVector(group.rank()), std::move(torsion));
  }
  return out;
}

Cokernel::Cokernel(const IntMatrix& m) : ambient_(m.rows()), snf_(smith_normal_form(m)) {
  IntVector torsion;
  for (std::size_t i = 0; i < snf_.rank(); ++i)
    if (snf_.invariant_factors[i] > 1) {
      kept_.push_back(i);
      torsion.push_back(snf_.invariant_factors[i]);
    }
  for (std::size_t i = snf_.rank(); i < ambient_; ++i) kept_.push_back(i);
  group_ = AbelianGroup(ambient_ - snf_.rank(), std::move(torsion));
}

GroupElement Cokernel::project(const IntVector& v) const {
  if (v.size() != ambient_) fail(ErrorCode::SpaceMismatch, "cokernel projection: wrong length");
  const IntVector c = snf_.U * v;
  IntVector flat;
  flat.reserve(kept_.size());
  for (std::size_t i : kept_) flat.push_back(c[i]);
  return GroupElement::from_flat(group_, flat);
}

IntVector Cokernel::section(const GroupElement& x) const {
  if (!(x.group() == group_)) fail(ErrorCode::SpaceMismatch, "cokernel section: foreign element");
  const IntVector flat = x.flat();
  IntVector c(ambient_);
  for (std::size_t g = 0; g < kept_.size(); ++g) c[kept_[g]] = flat[g];
  return snf_.U_inverse * c;
}

Cokernel cokernel(const IntMatrix& m) { return Cokernel(m); }

GroupElement halve(const AbelianGroup& group, const GroupElement& y) {
  if (!(y.group() == group)) fail(ErrorCode::SpaceMismatch, "halve: element of another group");
  if (group.has_2_torsion()) fail(ErrorCode::TwoTorsion, "halve: 2-torsion present in " + group.describe());
  IntVector free = y.free();
  for (auto& v : free) {
    if (mpz_odd_p(v.get_mpz_t())) fail(ErrorCode::NotDivisible, "halve: free coordinate is odd");
    v /= 2;
  }
  IntVector torsion = y.torsion();
  for (std::size_t i = 0; i < torsion.size(); ++i)
    torsion[i] *= mod_inverse(Integer(2), group.torsion()[i]);
  return GroupElement(group, std::move(free), std::move(torsion));
}

GroupHom::GroupHom(AbelianGroup source, AbelianGroup target, std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.generator_count())
    fail(ErrorCode::SpaceMismatch, "homomorphism needs one image per generator");
  for (const auto& y : images_)
    if (!(y.group() == target_)) fail(ErrorCode::SpaceMismatch, "homomorphism image in wrong group");
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  if (!(x.group() == source_)) fail(ErrorCode::SpaceMismatch, "homomorphism applied to foreign element");
  GroupElement out(target_);
  const IntVector flat = x.flat();
  for (std::size_t g = 0; g < flat.size(); ++g)
    if (flat[g] != 0) out += flat[g] * images_[g];
  return out;
}

IntMatrix GroupHom::lattice_matrix() const {
  // [images | torsion relations of the target], in flat target coordinates.
  const std::size_t n = target_.generator_count();
  const std::size_t t = target_.torsion().size();
  IntMatrix m(n, images_.size() + t);
  for (std::size_t g = 0; g < images_.size(); ++g) m.set_column(g, images_[g].flat());
  for (std::size_t i = 0; i < t; ++i) m(i, images_.size() + i) = target_.torsion()[i];
  return m;
}

std::optional<GroupElement> GroupHom::preimage(const GroupElement& y) const {
  if (!(y.group() == target_)) fail(ErrorCode::SpaceMismatch, "preimage of foreign element");
  const auto x = solve_Z(lattice_matrix(), y.flat());
  if (!x) return std::nullopt;
  IntVector head(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(images_.size()));
  return GroupElement::from_flat(source_, head);
}

bool GroupHom::is_surjective() const {
  const SmithDecomposition snf = smith_normal_form(lattice_matrix());
  for (std::size_t g = 0; g < target_.generator_count(); ++g)
    if (!integer_solve(snf, GroupElement::unit(target_, g).flat()).solution) return false;
  return true;
}

bool GroupHom::is_isomorphism() const {
  // Finitely generated abelian groups are Hopfian: a surjection between
  // isomorphic groups is injective.
  return source_ == target_ && is_surjective();
}

}  // namespace spinc
