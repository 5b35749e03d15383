#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "spinc/abelian_group.hpp"
#include "spinc/error.hpp"
#include "spinc/smith.hpp"

using namespace spinc;

namespace {

IntVector ints(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

void expect_valid_smith(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.U * m * s.V, s.D);
  EXPECT_EQ(abs(oracle::determinant(s.U)), 1);
  EXPECT_EQ(abs(oracle::determinant(s.V)), 1);
  EXPECT_EQ(s.U * s.U_inverse, IntMatrix::identity(m.rows()));
  EXPECT_EQ(s.V * s.V_inverse, IntMatrix::identity(m.cols()));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      if (i == j && i < s.rank()) {
        EXPECT_EQ(s.D(i, j), s.invariant_factors[i]);
        EXPECT_GT(s.D(i, j), 0);
      } else {
        EXPECT_EQ(s.D(i, j), 0);
      }
    }
  for (std::size_t i = 1; i < s.rank(); ++i) EXPECT_EQ(s.invariant_factors[i] % s.invariant_factors[i - 1], 0);
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, long bound) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST(Smith, TwoByTwoExample) {
  const IntMatrix m{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.invariant_factors, ints({2, 4}));
  // d1 is the gcd of the entries and d1 d2 = |det M|.
  EXPECT_EQ(s.invariant_factors[0] * s.invariant_factors[1], abs(oracle::determinant(m)));
  expect_valid_smith(m);
}

TEST(Smith, ZeroMatrix) {
  const IntMatrix m(3, 2);
  const auto s = smith_normal_form(m);
  EXPECT_TRUE(s.invariant_factors.empty());
  EXPECT_TRUE(s.D.is_zero());
  expect_valid_smith(m);
}

TEST(Smith, Identity) {
  const auto s = smith_normal_form(IntMatrix::identity(4));
  EXPECT_EQ(s.invariant_factors, ints({1, 1, 1, 1}));
}

TEST(Smith, EmptyShapes) {
  expect_valid_smith(IntMatrix(0, 3));
  expect_valid_smith(IntMatrix(3, 0));
  expect_valid_smith(IntMatrix(0, 0));
}

TEST(Smith, RandomMatricesSatisfyIdentities) {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 60; ++i) expect_valid_smith(random_matrix(rng, 7, 20));
}

TEST(Smith, LargeEntriesStayExact) {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("123456789012345678901234567890");
  m(1, 1) = Integer("987654321098765432109876543210");
  expect_valid_smith(m);
}

TEST(SolveZ, Examples) {
  EXPECT_EQ(solve_Z(IntMatrix{{2}}, ints({4})), ints({2}));
  EXPECT_FALSE(solve_Z(IntMatrix{{2}}, ints({3})).has_value());
  const auto r = integer_solve(IntMatrix{{2}}, ints({3}));
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->divisor, 2);
}

TEST(SolveZ, ZeroRightHandSideGivesZero) {
  const IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(solve_Z(m, ints({0, 0})), ints({0, 0, 0}));
}

TEST(SolveZ, RandomRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m(5, 7);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j) m(i, j) = entry(rng);
    IntVector x0(7);
    for (auto& v : x0) v = entry(rng);
    const IntVector b = m * x0;
    const auto x = solve_Z(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, b);
  }
}

TEST(SolveZ, CertificateWhenInsoluble) {
  // Column space is 2Z + 2Z; (1, 0) is outside it.
  const IntMatrix m{{2, 0}, {0, 2}};
  const auto r = integer_solve(m, ints({1, 0}));
  EXPECT_FALSE(r.solution.has_value());
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_NE(r.certificate->value % 2, 0);
}

TEST(SolveF2, Examples) {
  EXPECT_EQ(solve_F2(F2Matrix{{1, 1}, {0, 1}}, F2Vector{1, 0}), (F2Vector{1, 0}));
  const auto x = solve_F2(F2Matrix{{1, 1}}, F2Vector{1});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((F2Matrix{{1, 1}} * *x), F2Vector{1});
  EXPECT_FALSE(solve_F2(F2Matrix{{1, 1}, {1, 1}}, F2Vector{1, 0}).has_value());
}

TEST(Cokernel, Examples) {
  const Cokernel z2(IntMatrix{{2}});
  EXPECT_EQ(z2.group(), AbelianGroup(0, ints({2})));
  EXPECT_EQ(z2.project(ints({3})).torsion(), ints({1}));

  const Cokernel free2(IntMatrix(2, 0));
  EXPECT_EQ(free2.group(), AbelianGroup::free(2));
  EXPECT_EQ(free2.project(ints({5, -7})).free(), ints({5, -7}));

  const Cokernel c(IntMatrix{{2, 4}, {6, 8}});
  EXPECT_EQ(c.group(), AbelianGroup(0, ints({2, 4})));
  for (const auto& x : enumerate_elements(c.group())) EXPECT_EQ(c.project(c.section(x)), x);
}

TEST(Cokernel, ImageProjectsToZero) {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix m = random_matrix(rng, 6, 12);
    const Cokernel c(m);
    IntVector y(m.cols());
    for (auto& v : y) v = static_cast<long>(rng() % 11) - 5;
    EXPECT_TRUE(c.project(m * y).is_zero());
    if (c.group().is_finite() && c.group().order() <= 200)
      for (const auto& x : enumerate_elements(c.group())) EXPECT_EQ(c.project(c.section(x)), x);
  }
}

TEST(Halve, Examples) {
  const auto z = AbelianGroup::free(1);
  EXPECT_EQ(halve(z, GroupElement(z, ints({6}), {})).free(), ints({3}));
  const AbelianGroup z3(0, ints({3}));
  EXPECT_EQ(halve(z3, GroupElement(z3, {}, ints({1}))).torsion(), ints({2}));
  const AbelianGroup z2(0, ints({2}));
  try {
    halve(z2, GroupElement(z2, {}, ints({0})));
    FAIL() << "expected TwoTorsion";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TwoTorsion);
  }
  try {
    halve(z, GroupElement(z, ints({3}), {}));
    FAIL() << "expected NotDivisible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
}

TEST(Halve, InvertsDoublingOnOddGroups) {
  const AbelianGroup g(2, ints({3, 15}));
  for (const auto& t : enumerate_elements(AbelianGroup(0, ints({3, 15})))) {
    const GroupElement x(g, ints({-4, 7}), t.torsion());
    EXPECT_EQ(halve(g, Integer(2) * x), x);
  }
}

TEST(GroupElement, TorsionCoordinatesCanonical) {
  const AbelianGroup g(1, ints({4}));
  const GroupElement x(g, ints({1}), ints({-1}));
  EXPECT_EQ(x.torsion(), ints({3}));
  EXPECT_EQ((x + x + x + x).torsion(), ints({0}));
  EXPECT_EQ(-x + x, GroupElement(g));
}

TEST(AbelianGroup, RejectsBrokenChain) {
  EXPECT_THROW(AbelianGroup(0, ints({4, 6})), Error);
  EXPECT_THROW(AbelianGroup(0, ints({1})), Error);
}

TEST(GroupHom, PreimageAndSurjectivity) {
  // Z -> Z/6, 1 |-> 2: image {0, 2, 4}.
  const AbelianGroup z = AbelianGroup::free(1);
  const AbelianGroup z6(0, ints({6}));
  const GroupHom f(z, z6, {GroupElement(z6, {}, ints({2}))});
  EXPECT_FALSE(f.is_surjective());
  const auto pre = f.preimage(GroupElement(z6, {}, ints({4})));
  ASSERT_TRUE(pre.has_value());
  EXPECT_EQ(f(*pre), GroupElement(z6, {}, ints({4})));
  EXPECT_FALSE(f.preimage(GroupElement(z6, {}, ints({3}))).has_value());
  const GroupHom neg(z, z, {GroupElement(z, ints({-1}), {})});
  EXPECT_TRUE(neg.is_isomorphism());
}
