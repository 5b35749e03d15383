#pragma once

#include <optional>

#include "spinc/cohomology.hpp"
#include "spinc/matrix.hpp"

namespace spinc {

CohomologyClass class_of(const GroupPtr& h, const Cochain& z);
Cochain representative(const CohomologyClass& x);

/// (f^# z)(s) = sign * z(f(s)), zero where f collapses s.
Cochain pull_back_cochain(const SimplicialMap& f, const Cochain& z);

/// f^* x, landing in `source` (a group on f's source, possibly relative;
/// then f must carry its sub into the sub of x's space).
CohomologyClass pullback(const SimplicialMap& f, const CohomologyClass& x, const GroupPtr& source);
/// f^* : target_group -> source_group as a homomorphism.
GroupHom induced_map(const SimplicialMap& f, const GroupPtr& target_group, const GroupPtr& source_group);

/// Alexander-Whitney product of cochains in the integer vertex order.
Cochain cup_cochain(const SimplicialComplex& k, const Cochain& z, const Cochain& w);
CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y, const GroupPtr& target);

CohomologyClass reduce_mod2(const CohomologyClass& x, const GroupPtr& target);
GroupHom reduction_mod2_map(const GroupPtr& integral, const GroupPtr& mod2);

/// Integral Bockstein H^k(;Z/2) -> H^{k+1}(;Z); `target` is the degree k+1
/// integral group of the same space.
CohomologyClass bockstein(const CohomologyClass& x, const GroupPtr& target);
GroupHom bockstein_map(const GroupPtr& mod2, const GroupPtr& target);

/// Sum of coefficient times cochain value; reduced mod 2 for Z/2 cochains.
Integer evaluate(const Cochain& z, const Chain& c);
Integer evaluate(const CohomologyClass& x, const Chain& c);

/// j^* : H^k(X, N) -> H^k(X).
CohomologyClass relative_to_absolute(const CohomologyClass& x, const GroupPtr& absolute);
GroupHom relative_to_absolute_map(const GroupPtr& relative, const GroupPtr& absolute);

/// Some y in `integral` reducing to x, or nothing when x has no integral
/// lift. Canonical: the mod 2 solve sets free variables to zero, so x = 0
/// lifts to 0.
std::optional<CohomologyClass> integral_lift(const CohomologyClass& x, const GroupPtr& integral);

/// Matrix of <b_i u b_j, [K]>. Over Z the basis is the free generators of h
/// (the intersection form); over Z/2 it is every generator.
IntMatrix pairing_matrix(const GroupPtr& h, const Chain& fundamental);

/// The class v in H^2(K; Z/2) with <v u x, [K]> = <x u x, [K]> for every x.
/// `h2` is H^2 over Z/2 of an absolute 4-complex. Fails with
/// DegeneratePairing when the mod 2 cup pairing is singular.
CohomologyClass wu_class_w2(const GroupPtr& h2, const Chain& fundamental);

/// W3 = bockstein(w2) in `h3`, the integral H^3.
CohomologyClass W3(const CohomologyClass& w2, const GroupPtr& h3);

}  // namespace spinc
