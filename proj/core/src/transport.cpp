#include "spinc/transport.hpp"

#include <set>

#include "spinc/cohomology_ops.hpp"
#include "spinc/complex_ops.hpp"
#include "spinc/error.hpp"
#include "spinc/smith.hpp"

namespace spinc {
namespace {

Verdict restriction_verdict(const TransportProblem& p) {
  const SimplicialComplex& n1 = *p.pair1.sub();
  const SimplicialComplex& n2 = *p.pair2.sub();
  std::set<Vertex> images;
  for (Vertex v : n1.vertices())
    if (!images.insert(p.g(v)).second) return {false, "g is not injective on the vertices of N1"};
  for (int k = 0; k <= n1.dim(); ++k)
    for (const auto& s : n1.simplices(k))
      if (!n2.contains(p.g.image_set(s))) return {false, "g does not carry N1 into N2"};
  if (n1.f_vector() != n2.f_vector()) return {false, "g|N1 is not onto N2"};
  return {true, "g|N1 is a simplicial isomorphism onto N2"};
}

Verdict collapse_verdict(const SimplicialComplex& n, const char* name) {
  const CollapseResult r = collapses_to_dim(n, 1);
  if (r.reached)
    return {true, std::string(name) + " collapses to a 1-complex in " + std::to_string(r.log.size()) + " steps"};
  return {false, std::string(name) + " stuck at dimension " + std::to_string(r.remainder.dim()) +
                     " after greedy collapses"};
}

bool odd_torsion_only(const AbelianGroup& g) { return !g.has_2_torsion(); }

Space rel(const SubcomplexPair& pair) { return Space(pair.total(), pair.sub()); }

void require_torsor_on(const SpincStructure& s, const ComplexPtr& x, const char* name) {
  const Space& sp = s.torsor->group()->space();
  if (sp.is_relative() || !(sp == Space(x)))
    fail(ErrorCode::SpaceMismatch, std::string(name) + " is not a structure on the matching complex");
}

RelativeChernLift user_lift(const Cochain& z, const SpincStructure& s, const GroupPtr& relative,
                            const char* name) {
  CohomologyClass cls = [&] {
    try {
      return class_of(relative, z);
    } catch (const Error& e) {
      fail(ErrorCode::IncompatibleLifts, std::string(name) + ": " + e.what());
    }
  }();
  const CohomologyClass absolute = relative_to_absolute(cls, s.torsor->group());
  if (!(absolute == c1(s))) fail(ErrorCode::IncompatibleLifts, std::string(name) + " does not restrict to c1 of its structure");
  return {z, std::move(cls)};
}

}  // namespace

std::vector<std::string> HypothesisReport::blocking(bool strict) const {
  std::vector<std::string> out;
  if (!restriction_isomorphism.pass) out.push_back("restriction_isomorphism: " + restriction_isomorphism.detail);
  if (!no_two_torsion.pass) out.push_back("no_two_torsion: " + no_two_torsion.detail);
  if (!induced_isomorphism.pass) out.push_back("induced_isomorphism: " + induced_isomorphism.detail);
  if (strict && !collapse1.pass) out.push_back("collapse1: " + collapse1.detail);
  if (strict && !collapse2.pass) out.push_back("collapse2: " + collapse2.detail);
  return out;
}

HypothesisReport verify_hypotheses(const TransportProblem& p) {
  HypothesisReport r;
  r.restriction_isomorphism = restriction_verdict(p);

  const AbelianGroup g1 = cohomology(rel(p.pair1), 2, Ring::Z)->group();
  const AbelianGroup g2 = cohomology(rel(p.pair2), 2, Ring::Z)->group();
  r.no_two_torsion.pass = odd_torsion_only(g1) && odd_torsion_only(g2);
  r.no_two_torsion.detail = "H^2(X1,N1;Z) = " + g1.describe() + ", H^2(X2,N2;Z) = " + g2.describe();
  if (!r.no_two_torsion.pass) r.no_two_torsion.detail += " (has 2-torsion)";

  r.collapse1 = collapse_verdict(*p.pair1.sub(), "N1");
  r.collapse2 = collapse_verdict(*p.pair2.sub(), "N2");

  const Space x1(p.pair1.total());
  const Space x2(p.pair2.total());
  const auto z1 = Cohomology::compute(x1, Ring::Z);
  const auto z2 = Cohomology::compute(x2, Ring::Z);
  const auto f1 = Cohomology::compute(x1, Ring::Z2);
  const auto f2 = Cohomology::compute(x2, Ring::Z2);
  std::vector<std::string> bad;
  if (!induced_map(p.g, f2->group(1), f1->group(1)).is_isomorphism()) bad.push_back("H^1(;Z/2)");
  if (!induced_map(p.g, z2->group(2), z1->group(2)).is_isomorphism()) bad.push_back("H^2(;Z)");
  if (!induced_map(p.g, f2->group(2), f1->group(2)).is_isomorphism()) bad.push_back("H^2(;Z/2)");
  r.induced_isomorphism.pass = bad.empty();
  if (bad.empty()) {
    r.induced_isomorphism.detail = "g^* is an isomorphism on H^1(;Z/2), H^2(;Z), H^2(;Z/2)";
  } else {
    r.induced_isomorphism.detail = "g^* is not an isomorphism on";
    for (const auto& b : bad) r.induced_isomorphism.detail += " " + b;
  }
  return r;
}

RelativeChernLift choose_relative_lift(const SpincStructure& s, const SubcomplexPair& pair) {
  const GroupPtr& absolute = s.torsor->group();
  const GroupPtr relative = cohomology(rel(pair), 2, Ring::Z);
  const CohomologyClass c = c1(s);
  const auto pre = relative_to_absolute_map(relative, absolute).preimage(c.coords());
  if (!pre)
    fail(ErrorCode::NotInImage, "c1 = " + c.coords().to_string() + " is not in the image of j^*: H^2(X,N;Z) -> H^2(X;Z)");
  CohomologyClass cls(relative, *pre);
  return {representative(cls), cls};
}

std::vector<CohomologyClass> connecting_images(const SubcomplexPair& pair) {
  const SimplicialComplex& x = *pair.total();
  const SimplicialComplex& n = *pair.sub();
  const GroupPtr relative = cohomology(rel(pair), 2, Ring::Z);
  std::vector<CohomologyClass> out;
  if (n.dim() < 1) return out;
  for (const Cochain& u : cohomology(Space(pair.sub()), 1, Ring::Z)->basis_cocycles()) {
    // Extend by zero to X, then take the coboundary; it vanishes on N.
    Cochain extended = zero_cochain(x, 1, Ring::Z);
    for (std::size_t i = 0; i < u.values.size(); ++i) extended.values[*x.index_of(n.simplex(1, i))] = u.values[i];
    out.push_back(class_of(relative, coboundary(x, extended)));
  }
  return out;
}

TransportResult transport(const TransportProblem& p, bool strict) {
  if (p.lift1.has_value() != p.lift2.has_value())
    fail(ErrorCode::InvalidInput, "supply both relative lifts or neither");
  require_torsor_on(p.s1_ref, p.pair1.total(), "s1_ref");
  require_torsor_on(p.s2, p.pair2.total(), "s2");

  HypothesisReport hypotheses = verify_hypotheses(p);
  const auto blocking = hypotheses.blocking(strict);
  if (!blocking.empty()) {
    std::string msg = "transport hypotheses failed:";
    for (const auto& b : blocking) msg += " [" + b + "]";
    fail(ErrorCode::HypothesisFailed, msg);
  }

  const GroupPtr rel1 = cohomology(rel(p.pair1), 2, Ring::Z);
  const GroupPtr rel2 = cohomology(rel(p.pair2), 2, Ring::Z);
  const GroupPtr abs1 = p.s1_ref.torsor->group();

  const LiftMode mode = p.mode();
  RelativeChernLift lift1 = mode == LiftMode::User ? user_lift(*p.lift1, p.s1_ref, rel1, "lift1")
                                                   : choose_relative_lift(p.s1_ref, p.pair1);
  RelativeChernLift lift2 = mode == LiftMode::User ? user_lift(*p.lift2, p.s2, rel2, "lift2")
                                                   : choose_relative_lift(p.s2, p.pair2);

  CohomologyClass diff = pullback(p.g, lift2.cls, rel1) - lift1.cls;
  const AbelianGroup& g1 = rel1->group();
  auto odd_free = [](const CohomologyClass& x) {
    for (const auto& v : x.coords().free())
      if (mod_floor(v, 2) != 0) return true;
    return false;
  };

  bool repaired = false;
  if (odd_free(diff)) {
    if (mode == LiftMode::User)
      fail(ErrorCode::IncompatibleLifts, "g^*lift2 - lift1 = " + diff.coords().to_string() + " is not divisible by 2");
    // Move lift2 by connecting images (they span ker j^*) until the difference is even.
    const auto kernel = connecting_images(p.pair2);
    std::vector<CohomologyClass> pulled;
    for (const auto& k : kernel) pulled.push_back(pullback(p.g, k, rel1));
    F2Matrix m(g1.rank(), kernel.size());
    F2Vector target(g1.rank());
    for (std::size_t i = 0; i < g1.rank(); ++i) {
      target[i] = static_cast<std::uint8_t>(mod_floor(diff.coords().free()[i], 2).get_ui());
      for (std::size_t j = 0; j < kernel.size(); ++j)
        m(i, j) = static_cast<std::uint8_t>(mod_floor(pulled[j].coords().free()[i], 2).get_ui());
    }
    const auto eps = solve_F2(m, target);
    if (!eps)
      fail(ErrorCode::IncompatibleLifts,
           "no translate of the engine lift of s2 by ker j^* makes g^*lift2 - lift1 divisible by 2");
    CohomologyClass moved = lift2.cls;
    for (std::size_t j = 0; j < kernel.size(); ++j)
      if ((*eps)[j]) moved = moved + kernel[j];
    lift2 = {representative(moved), moved};
    repaired = true;
    diff = pullback(p.g, lift2.cls, rel1) - lift1.cls;
    if (odd_free(diff)) fail(ErrorCode::Internal, "parity repair did not produce an even difference");
  }

  CohomologyClass delta(rel1, halve(g1, diff.coords()));
  if (!(Integer(2) * delta == diff)) fail(ErrorCode::Internal, "2 * delta differs from the lift difference");
  CohomologyClass d = relative_to_absolute(delta, abs1);
  SpincStructure transported = act(p.s1_ref, d.coords());

  const CohomologyClass expected = pullback(p.g, c1(p.s2), abs1);
  if (!(c1(transported) == expected))
    fail(ErrorCode::ConsistencyFailure, "c1 of the transported structure " + c1(transported).coords().to_string() +
                                            " differs from g^*c1(s2) = " + expected.coords().to_string());

  std::vector<GroupElement> ambiguity;
  const GroupHom j1 = relative_to_absolute_map(rel1, abs1);
  for (const auto& e : two_torsion_elements(abs1->group()))
    if (j1.preimage(e)) ambiguity.push_back(e);

  return TransportResult{std::move(hypotheses), mode,     std::move(lift1),     std::move(lift2),
                         repaired,              delta,    d,                    std::move(ambiguity),
                         std::move(transported)};
}

}  // namespace spinc
