#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "spinc/cohomology_ops.hpp"
#include "spinc/complex_ops.hpp"
#include "spinc/error.hpp"
#include "spinc/io.hpp"
#include "spinc/transport.hpp"

using namespace spinc;

namespace {

SpincTorsorPtr torsor_on(const ComplexPtr& k) {
  const Space x(k);
  const auto h2m = cohomology(x, 2, Ring::Z2);
  const auto w2 = k->dim() == 4 ? wu_class_w2(h2m, fundamental_cycle(*k, 4)) : CohomologyClass::zero(h2m);
  return spinc_torsor(cohomology(x, 2, Ring::Z), cohomology(x, 3, Ring::Z), w2);
}

ComplexPtr cycle012() { return fixtures::complex_of({Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}}); }

/// Translation (da, db) of the 9-vertex CP^2 on F3^2.
SimplicialMap cp2_translation(const ComplexPtr& cp2, int da, int db) {
  std::map<Vertex, Vertex> vm;
  for (Vertex v : cp2->vertices()) vm[v] = 3 * ((v / 3 + da) % 3) + (v % 3 + db) % 3;
  return verify_simplicial_map(cp2, cp2, vm);
}

struct Cp2 {
  ComplexPtr x = fixtures::corpus("cp2");
  ComplexPtr n = cycle012();
  SubcomplexPair pair{x, n};
  SpincTorsorPtr torsor = torsor_on(x);
  GroupElement h = GroupElement::unit(torsor->group()->group(), 0);

  SpincStructure at(long k) const { return structure(torsor, Integer(k) * h); }
  TransportProblem problem(const SimplicialMap& g, long s2) const {
    return TransportProblem{pair, pair, g, at(0), at(s2), std::nullopt, std::nullopt};
  }
};

const Cp2& cp2() {
  static const Cp2 c;
  return c;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Internal;
}

}  // namespace

TEST(Transport, IdentityGivesZeroDifference) {
  const auto& c = cp2();
  for (long k : {0L, 2L, -1L}) {
    TransportProblem p{c.pair, c.pair, SimplicialMap::identity(c.x), c.at(k), c.at(k), std::nullopt, std::nullopt};
    const auto r = transport(p);
    EXPECT_TRUE(r.d.is_zero());
    EXPECT_TRUE(r.delta.is_zero());
    EXPECT_EQ(r.transported, c.at(k));
  }
}

TEST(Transport, ShiftedStructureGivesGenerator) {
  const auto& c = cp2();
  const auto r = transport(c.problem(SimplicialMap::identity(c.x), 1));
  EXPECT_EQ(r.d.coords(), c.h);
  EXPECT_EQ(r.d.coords(), difference(c.at(0), c.at(1)));
  EXPECT_EQ(r.transported, c.at(1));
  ASSERT_EQ(r.ambiguity.size(), 1u);
  EXPECT_TRUE(r.ambiguity[0].is_zero());
  // 2 delta = g^* lift2 - lift1, exactly.
  const auto rel1 = r.lift1.cls.parent();
  EXPECT_EQ(Integer(2) * r.delta, pullback(SimplicialMap::identity(c.x), r.lift2.cls, rel1) - r.lift1.cls);
  EXPECT_EQ(relative_to_absolute(r.delta, c.torsor->group()), r.d);
}

TEST(Transport, HypothesesPassOnGoodFixtures) {
  const auto& c = cp2();
  const auto h = verify_hypotheses(c.problem(cp2_translation(c.x, 0, 1), 0));
  EXPECT_TRUE(h.restriction_isomorphism.pass);
  EXPECT_TRUE(h.no_two_torsion.pass);
  EXPECT_TRUE(h.collapse1.pass);
  EXPECT_TRUE(h.collapse2.pass);
  EXPECT_TRUE(h.induced_isomorphism.pass);
  EXPECT_TRUE(h.blocking(true).empty());
}

TEST(Transport, LiftInvarianceUnderConnectingImages) {
  const auto& c = cp2();
  const auto id = SimplicialMap::identity(c.x);
  const auto base = c.problem(id, 1);
  const auto engine = transport(base);
  const auto kernel = connecting_images(c.pair);
  ASSERT_EQ(kernel.size(), 1u);
  const GroupPtr abs1 = c.torsor->group();
  EXPECT_TRUE(relative_to_absolute(kernel[0], abs1).is_zero());
  EXPECT_FALSE(kernel[0].is_zero());

  for (long k : {-2L, 1L, 3L}) {
    // Moving lift1 by 2k * (connecting image) moves delta by -k of it.
    Cochain l1 = engine.lift1.cocycle;
    const Cochain e = representative(kernel[0]);
    for (std::size_t i = 0; i < l1.values.size(); ++i) l1.values[i] += 2 * k * e.values[i];
    TransportProblem p = base;
    p.lift1 = l1;
    p.lift2 = engine.lift2.cocycle;
    const auto r = transport(p);
    EXPECT_EQ(r.mode, LiftMode::User);
    EXPECT_EQ(r.delta, engine.delta - Integer(k) * kernel[0]);
    EXPECT_EQ(r.d, engine.d);
    EXPECT_EQ(r.transported, engine.transported);
  }
}

TEST(Transport, OddUserLiftDifferenceIsIncompatible) {
  const auto& c = cp2();
  const auto id = SimplicialMap::identity(c.x);
  TransportProblem p = c.problem(id, 0);
  const auto engine = transport(p);
  const Cochain e = representative(connecting_images(c.pair)[0]);
  Cochain l1 = engine.lift1.cocycle;
  for (std::size_t i = 0; i < l1.values.size(); ++i) l1.values[i] += e.values[i];
  p.lift1 = l1;
  p.lift2 = engine.lift2.cocycle;
  const auto diff = class_of(engine.lift1.cls.parent(), l1) - engine.lift1.cls;
  bool odd = false;
  for (const auto& v : diff.coords().free()) odd = odd || mod_floor(v, 2) != 0;
  ASSERT_TRUE(odd);
  EXPECT_EQ(code_of([&] { transport(p); }), ErrorCode::IncompatibleLifts);

  // A lift that does not restrict to c1 is rejected as well.
  p.lift1 = zero_cochain(*c.x, 2, Ring::Z);
  EXPECT_EQ(code_of([&] { transport(p); }), ErrorCode::IncompatibleLifts);
  p.lift2.reset();
  EXPECT_EQ(code_of([&] { transport(p); }), ErrorCode::InvalidInput);
}

TEST(Transport, Equivariance) {
  const auto& c = cp2();
  const auto g = cp2_translation(c.x, 0, 2);
  const GroupPtr h2 = c.torsor->group();
  for (long k : {-1L, 0L, 2L}) {
    const auto base = transport(c.problem(g, k)).transported;
    for (long b : {1L, -1L, 2L}) {
      TransportProblem p = c.problem(g, k);
      p.s2 = act(p.s2, Integer(b) * c.h);
      const auto moved = transport(p).transported;
      EXPECT_EQ(moved, act(base, pullback(g, CohomologyClass(h2, Integer(b) * c.h), h2).coords()));
    }
  }
}

TEST(Transport, CompositionFunctoriality) {
  const auto& c = cp2();
  const auto g1 = cp2_translation(c.x, 0, 1);
  const auto g2 = cp2_translation(c.x, 2, 2);
  // (0,1) preserves N = {0,1,2}; (2,2) moves it, so X3 carries the image.
  const auto n2 = cycle012();
  ASSERT_TRUE(g1.image_set(Simplex{0, 1}) == (Simplex{1, 2}));
  std::vector<Simplex> moved;
  for (const auto& e : c.n->simplices(1)) moved.push_back(g2.image_set(e));
  const auto n3 = share(SimplicialComplex::from_simplices(moved));
  const SubcomplexPair p1{c.x, c.n}, p2{c.x, n2}, p3{c.x, n3};

  for (long k : {0L, 1L, -3L}) {
    const SpincStructure s3 = c.at(k);
    const auto via_x2 = transport(TransportProblem{p2, p3, g2, c.at(0), s3, std::nullopt, std::nullopt}).transported;
    const auto step = transport(TransportProblem{p1, p2, g1, c.at(0), via_x2, std::nullopt, std::nullopt}).transported;
    const auto direct =
        transport(TransportProblem{p1, p3, compose(g2, g1), c.at(0), s3, std::nullopt, std::nullopt}).transported;
    EXPECT_EQ(step, direct) << k;
    EXPECT_EQ(c1(direct), pullback(compose(g2, g1), c1(s3), c.torsor->group()));
  }
}

TEST(Transport, FactorSwapOfSphereProduct) {
  const auto dir = fixtures::corpus_path("transport/s2xs2_swap/");
  const auto x = share(read_complex(dir + "X1.scx"));
  const auto n1 = share(read_complex(dir + "N1.scx"));
  const auto n2 = share(read_complex(dir + "N2.scx"));
  const auto g = verify_simplicial_map(x, x, parse_vertex_map(read_text_file(dir + "g.smap")));
  const auto t = torsor_on(x);
  const GroupPtr h2 = t->group();
  ASSERT_EQ(h2->group(), AbelianGroup::free(2));
  const GroupHom gstar = induced_map(g, h2, h2);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto s2 = structure(t, GroupElement::unit(h2->group(), i));
    const auto r = transport(TransportProblem{{x, n1}, {x, n2}, g, basepoint(t), s2, std::nullopt, std::nullopt});
    EXPECT_EQ(r.d.coords(), gstar(s2.offset));
    EXPECT_FALSE(r.d.coords() == s2.offset);
    EXPECT_EQ(c1(r.transported), pullback(g, c1(s2), h2));
  }
}

TEST(Transport, UndersizedNeighborhoodIsRejected) {
  const auto x = fixtures::corpus("rp3xs1");
  const auto v = fixtures::complex_of({Simplex{0}});
  const auto t = torsor_on(x);
  const SubcomplexPair pair{x, v};
  TransportProblem p{pair, pair, SimplicialMap::identity(x), basepoint(t), basepoint(t), std::nullopt, std::nullopt};
  const auto h = verify_hypotheses(p);
  EXPECT_FALSE(h.no_two_torsion.pass);
  EXPECT_TRUE(h.restriction_isomorphism.pass);
  EXPECT_EQ(code_of([&] { transport(p); }), ErrorCode::HypothesisFailed);
}

TEST(Transport, CollapsingMapFailsRestrictionCheck) {
  const auto& c = cp2();
  const auto point = fixtures::complex_of({Simplex{0}});
  std::map<Vertex, Vertex> vm;
  for (Vertex v : c.x->vertices()) vm[v] = 0;
  const auto g = verify_simplicial_map(c.x, point, vm);
  const auto t = torsor_on(point);
  TransportProblem p{c.pair, {point, point}, g, c.at(0), basepoint(t), std::nullopt, std::nullopt};
  const auto h = verify_hypotheses(p);
  EXPECT_FALSE(h.restriction_isomorphism.pass);
  EXPECT_FALSE(h.induced_isomorphism.pass);
  EXPECT_EQ(code_of([&] { transport(p); }), ErrorCode::HypothesisFailed);
}

TEST(Transport, VertexStarNeighborhood) {
  const auto& c = cp2();
  const auto star = share(closed_star(*c.x, SimplicialComplex::from_simplices({Simplex{0}})));
  const SubcomplexPair pair{c.x, star};
  TransportProblem p{pair, pair, SimplicialMap::identity(c.x), c.at(0), c.at(1), std::nullopt, std::nullopt};
  const auto h = verify_hypotheses(p);
  EXPECT_TRUE(h.collapse1.pass);
  EXPECT_TRUE(h.blocking(true).empty());
  EXPECT_EQ(transport(p, true).transported, c.at(1));
}

TEST(Transport, CollapseVerdictBlocksOnlyWhenStrict) {
  HypothesisReport r;
  for (Verdict* v : {&r.restriction_isomorphism, &r.no_two_torsion, &r.collapse1, &r.collapse2, &r.induced_isomorphism})
    v->pass = true;
  r.collapse2.pass = false;
  EXPECT_TRUE(r.blocking(false).empty());
  EXPECT_EQ(r.blocking(true).size(), 1u);
}

TEST(RelativeLift, CanonicalChoices) {
  const auto& c = cp2();
  const auto zero = choose_relative_lift(structure(c.torsor, GroupElement(c.h.group())), c.pair);
  EXPECT_EQ(relative_to_absolute(zero.cls, c.torsor->group()), c1(c.at(0)));
  const auto one = choose_relative_lift(c.at(1), c.pair);
  EXPECT_EQ(relative_to_absolute(one.cls, c.torsor->group()), c1(c.at(1)));
  EXPECT_EQ(class_of(one.cls.parent(), one.cocycle), one.cls);

  const auto s4 = fixtures::corpus("s4");
  const auto t = torsor_on(s4);
  const auto l = choose_relative_lift(basepoint(t), SubcomplexPair{s4, fixtures::complex_of({Simplex{0, 1}})});
  EXPECT_TRUE(l.cls.is_zero());
  for (const auto& v : l.cocycle.values) EXPECT_TRUE(v == 0);
}
