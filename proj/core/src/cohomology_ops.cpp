#include "spinc/cohomology_ops.hpp"

#include <string>

#include "spinc/error.hpp"
#include "spinc/smith.hpp"

namespace spinc {
namespace {

void require_ring(const CohomologyClass& x, Ring ring, const char* what) {
  if (x.ring() != ring)
    fail(ErrorCode::SpaceMismatch, std::string(what) + " expects a class over " + std::string(to_string(ring)));
}

void require_group(const GroupPtr& h, int degree, Ring ring, const char* what) {
  if (!h || h->degree() != degree || h->ring() != ring)
    fail(ErrorCode::SpaceMismatch, std::string(what) + ": target must be H^" + std::to_string(degree) + " over " +
                                       std::string(to_string(ring)));
}

void require_same_total(const Space& a, const Space& b, const char* what) {
  if (!(a.absolute() == b.absolute())) fail(ErrorCode::SpaceMismatch, std::string(what) + ": different complexes");
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) { return a == b || *a == *b; }

Cochain mod2(Cochain z) {
  z.ring = Ring::Z2;
  for (auto& v : z.values) v = mod_floor(v, 2);
  return z;
}

}  // namespace

CohomologyClass class_of(const GroupPtr& h, const Cochain& z) { return CohomologyClass(h, h->coordinates(z)); }

Cochain representative(const CohomologyClass& x) { return x.parent()->representative(x.coords()); }

Cochain pull_back_cochain(const SimplicialMap& f, const Cochain& z) {
  const SimplicialComplex& src = *f.source();
  const SimplicialComplex& dst = *f.target();
  if (z.values.size() != dst.count(z.degree)) fail(ErrorCode::SpaceMismatch, "cochain does not live on the target");
  Cochain out = zero_cochain(src, z.degree, z.ring);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const auto image = f.image(src.simplex(z.degree, i));
    if (!image) continue;
    const Integer& v = z.values[*dst.index_of(image->simplex)];
    out.values[i] = (z.ring == Ring::Z2 || image->sign > 0) ? v : Integer(-v);
  }
  return out;
}

CohomologyClass pullback(const SimplicialMap& f, const CohomologyClass& x, const GroupPtr& source) {
  const Space& target_space = x.parent()->space();
  const Space& source_space = source->space();
  require_group(source, x.degree(), x.ring(), "pullback");
  if (!same_complex(f.target(), target_space.total()) || !same_complex(f.source(), source_space.total()))
    fail(ErrorCode::SpaceMismatch, "pullback: map does not match the spaces");
  if (source_space.is_relative()) {
    if (!target_space.is_relative()) fail(ErrorCode::SpaceMismatch, "pullback: relative source needs a relative target");
    for (const auto& s : source_space.sub()->maximal_simplices())
      if (!target_space.sub()->contains(f.image_set(s)))
        fail(ErrorCode::SpaceMismatch, "pullback: map does not carry sub into sub");
  }
  return class_of(source, pull_back_cochain(f, representative(x)));
}

GroupHom induced_map(const SimplicialMap& f, const GroupPtr& target_group, const GroupPtr& source_group) {
  std::vector<GroupElement> images;
  const AbelianGroup& g = target_group->group();
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    images.push_back(
        pullback(f, CohomologyClass(target_group, GroupElement::unit(g, i)), source_group).coords());
  return GroupHom(g, source_group->group(), std::move(images));
}

Cochain cup_cochain(const SimplicialComplex& k, const Cochain& z, const Cochain& w) {
  if (z.ring != w.ring) fail(ErrorCode::SpaceMismatch, "cup: rings differ");
  if (z.values.size() != k.count(z.degree) || w.values.size() != k.count(w.degree))
    fail(ErrorCode::SpaceMismatch, "cup: cochains do not fit the complex");
  const int p = z.degree;
  const int q = w.degree;
  Cochain out = zero_cochain(k, p + q, z.ring);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const Simplex& s = k.simplex(p + q, i);
    const Integer& front = z.values[*k.index_of(s.slice(0, static_cast<std::size_t>(p + 1)))];
    if (front == 0) continue;
    const Integer& back =
        w.values[*k.index_of(s.slice(static_cast<std::size_t>(p), static_cast<std::size_t>(q + 1)))];
    out.values[i] = front * back;
    if (z.ring == Ring::Z2) out.values[i] = mod_floor(out.values[i], 2);
  }
  return out;
}

CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y, const GroupPtr& target) {
  require_group(target, x.degree() + y.degree(), x.ring(), "cup");
  require_ring(y, x.ring(), "cup");
  require_same_total(x.parent()->space(), y.parent()->space(), "cup");
  require_same_total(x.parent()->space(), target->space(), "cup");
  return class_of(target, cup_cochain(*target->space().total(), representative(x), representative(y)));
}

CohomologyClass reduce_mod2(const CohomologyClass& x, const GroupPtr& target) {
  require_ring(x, Ring::Z, "reduce_mod2");
  require_group(target, x.degree(), Ring::Z2, "reduce_mod2");
  require_same_total(x.parent()->space(), target->space(), "reduce_mod2");
  return class_of(target, mod2(representative(x)));
}

GroupHom reduction_mod2_map(const GroupPtr& integral, const GroupPtr& mod2_group) {
  std::vector<GroupElement> images;
  const AbelianGroup& g = integral->group();
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    images.push_back(reduce_mod2(CohomologyClass(integral, GroupElement::unit(g, i)), mod2_group).coords());
  return GroupHom(g, mod2_group->group(), std::move(images));
}

CohomologyClass bockstein(const CohomologyClass& x, const GroupPtr& target) {
  require_ring(x, Ring::Z2, "bockstein");
  require_group(target, x.degree() + 1, Ring::Z, "bockstein");
  require_same_total(x.parent()->space(), target->space(), "bockstein");
  const SimplicialComplex& k = *target->space().total();
  Cochain lift = representative(x);
  lift.ring = Ring::Z;
  if (x.degree() >= k.dim()) return CohomologyClass::zero(target);
  Cochain d = coboundary(k, lift);
  for (auto& v : d.values) {
    if (mod_floor(v, 2) != 0) fail(ErrorCode::Internal, "bockstein: coboundary of a mod 2 cocycle is odd");
    v = div_floor(v, 2);
  }
  return class_of(target, d);
}

GroupHom bockstein_map(const GroupPtr& mod2_group, const GroupPtr& target) {
  std::vector<GroupElement> images;
  const AbelianGroup& g = mod2_group->group();
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    images.push_back(bockstein(CohomologyClass(mod2_group, GroupElement::unit(g, i)), target).coords());
  return GroupHom(g, target->group(), std::move(images));
}

Integer evaluate(const Cochain& z, const Chain& c) {
  if (z.degree != c.degree || z.values.size() != c.coefficients.size())
    fail(ErrorCode::SpaceMismatch, "evaluate: cochain and chain do not match");
  Integer s = 0;
  for (std::size_t i = 0; i < z.values.size(); ++i) s += z.values[i] * c.coefficients[i];
  return z.ring == Ring::Z2 ? mod_floor(s, 2) : s;
}

Integer evaluate(const CohomologyClass& x, const Chain& c) { return evaluate(representative(x), c); }

CohomologyClass relative_to_absolute(const CohomologyClass& x, const GroupPtr& absolute) {
  require_group(absolute, x.degree(), x.ring(), "relative_to_absolute");
  if (absolute->space().is_relative()) fail(ErrorCode::SpaceMismatch, "relative_to_absolute: target is relative");
  require_same_total(x.parent()->space(), absolute->space(), "relative_to_absolute");
  return class_of(absolute, representative(x));
}

GroupHom relative_to_absolute_map(const GroupPtr& relative, const GroupPtr& absolute) {
  std::vector<GroupElement> images;
  const AbelianGroup& g = relative->group();
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    images.push_back(relative_to_absolute(CohomologyClass(relative, GroupElement::unit(g, i)), absolute).coords());
  return GroupHom(g, absolute->group(), std::move(images));
}

std::optional<CohomologyClass> integral_lift(const CohomologyClass& x, const GroupPtr& integral) {
  require_ring(x, Ring::Z2, "integral_lift");
  require_group(integral, x.degree(), Ring::Z, "integral_lift");
  const GroupHom red = reduction_mod2_map(integral, x.parent());
  const std::size_t n2 = x.parent()->group().generator_count();
  const std::size_t nz = integral->group().generator_count();
  F2Matrix m(n2, nz);
  for (std::size_t j = 0; j < nz; ++j) {
    const IntVector col = red.images()[j].flat();
    for (std::size_t i = 0; i < n2; ++i) m(i, j) = static_cast<std::uint8_t>(mod_floor(col[i], 2).get_ui());
  }
  F2Vector b(n2);
  const IntVector target = x.coords().flat();
  for (std::size_t i = 0; i < n2; ++i) b[i] = static_cast<std::uint8_t>(target[i].get_ui());
  const auto s = solve_F2(m, b);
  if (!s) return std::nullopt;
  IntVector flat(nz);
  for (std::size_t j = 0; j < nz; ++j) flat[j] = (*s)[j];
  return CohomologyClass(integral, GroupElement::from_flat(integral->group(), flat));
}

IntMatrix pairing_matrix(const GroupPtr& h, const Chain& fundamental) {
  const SimplicialComplex& k = *h->space().total();
  if (2 * h->degree() != fundamental.degree)
    fail(ErrorCode::SpaceMismatch, "pairing_matrix: degree must be half the dimension");
  const AbelianGroup& g = h->group();
  const std::size_t first = h->ring() == Ring::Z ? g.torsion().size() : 0;
  std::vector<Cochain> basis;
  for (std::size_t i = first; i < g.generator_count(); ++i)
    basis.push_back(h->representative(GroupElement::unit(g, i)));
  IntMatrix p(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) p(i, j) = evaluate(cup_cochain(k, basis[i], basis[j]), fundamental);
  return p;
}

CohomologyClass wu_class_w2(const GroupPtr& h2, const Chain& fundamental) {
  require_group(h2, 2, Ring::Z2, "wu_class_w2");
  if (fundamental.degree != 4) fail(ErrorCode::NotClosed, "wu_class_w2 needs a 4-dimensional fundamental cycle");
  const IntMatrix p = pairing_matrix(h2, fundamental);
  const std::size_t n = p.rows();
  F2Matrix m(n, n);
  F2Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<std::uint8_t>(p(j, i).get_ui());
    r[i] = static_cast<std::uint8_t>(p(i, i).get_ui());
  }
  if (m.rank() != n)
    fail(ErrorCode::DegeneratePairing,
         "pairing degenerate: the mod 2 cup pairing on H^2 is singular, so Poincare duality fails in degree 2");
  const auto v = solve_F2(m, r);
  if (!v) fail(ErrorCode::Internal, "wu_class_w2: nondegenerate pairing without a solution");
  IntVector flat(n);
  for (std::size_t i = 0; i < n; ++i) flat[i] = (*v)[i];
  return CohomologyClass(h2, GroupElement::from_flat(h2->group(), flat));
}

CohomologyClass W3(const CohomologyClass& w2, const GroupPtr& h3) { return bockstein(w2, h3); }

}  // namespace spinc
