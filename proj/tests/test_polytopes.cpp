#include <gtest/gtest.h>

#include "support.hpp"
#include "toric/polytope.hpp"

using namespace testing_support;

namespace {

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

TDivisor divisor(const Fan& f, std::initializer_list<long long> c) { return {f, make_vector(c)}; }

}  // namespace

TEST(Polytope, FromInequalitiesSquare) {
  auto p = LatticePolytope::from_inequalities(
      2, {{v({1, 0}), 0}, {v({0, 1}), 0}, {v({-1, 0}), 1}, {v({0, -1}), 1}});
  EXPECT_EQ(p.vertices(), (std::vector<RationalVector>{rv({0, 0}), rv({0, 1}), rv({1, 0}), rv({1, 1})}));
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_EQ(area(p), 1);
  EXPECT_EQ(lattice_points(p).size(), 4u);
}

TEST(Polytope, UnboundedRejected) {
  EXPECT_THROW(LatticePolytope::from_inequalities(2, {{v({1, 0}), 0}, {v({0, 1}), 0}}), DomainError);
}

TEST(Polytope, EmptyAndPoint) {
  auto empty = LatticePolytope::from_inequalities(1, {{v({1}), -2}, {v({-1}), 1}});
  EXPECT_TRUE(empty.is_empty());
  auto point = LatticePolytope::from_vertices(2, std::vector<IntVector>{v({1, 2})});
  EXPECT_EQ(point.dim(), 0u);
  EXPECT_EQ(lattice_points(point), vs({{1, 2}}));
}

TEST(Polytope, VertexAndInequalityFormsAgree) {
  auto a = LatticePolytope::from_vertices(2, std::vector<IntVector>{v({0, 0}), v({2, 0}), v({0, 2}), v({1, 1})});
  auto b = LatticePolytope::from_inequalities(2, facets(a));
  EXPECT_EQ(a, b);
  EXPECT_EQ(facets(a).size(), 3u);
}

TEST(DivisorPolytope, RiemannRochBasis) {
  TDivisor d = divisor(triangle_fan(), {6, 6, 0});
  auto p = divisor_polytope(d);
  EXPECT_EQ(p.vertices(), (std::vector<RationalVector>{rv({-6, -6}), rv({-2, 2}), rv({2, -2})}));
  auto rr = riemann_roch(d);
  EXPECT_EQ(rr.size(), 31u);
  EXPECT_EQ(rr.front(), v({-6, -6}));
  EXPECT_EQ(rr.back(), v({2, -2}));
  EXPECT_TRUE(is_cartier(d));
}

TEST(DivisorPolytope, RationalVertices) {
  TDivisor g = divisor(triangle_fan(), {0, 0, 10});
  auto p = divisor_polytope(g);
  EXPECT_EQ(p.vertices(),
            (std::vector<RationalVector>{rv({0, 0}), rv({Rational(10, 3), Rational(20, 3)}),
                                         rv({Rational(20, 3), Rational(10, 3)})}));
  EXPECT_EQ(area(p), Rational(50, 3));
  EXPECT_EQ(lattice_points(p).size(), 22u);
  EXPECT_FALSE(is_cartier(g));
}

TEST(Cartier, SmoothFansAreFactorial) {
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= 2; ++b) EXPECT_TRUE(is_cartier(divisor(p2(), {a, b, 1})));
}

TEST(SupportFunction, SquareRoundTrip) {
  auto sq = LatticePolytope::from_vertices(2, std::vector<IntVector>{v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})});
  Fan f = fan_from_polytope(sq);
  EXPECT_EQ(f.rays(), vs({{0, 1}, {1, 0}, {0, -1}, {-1, 0}}));
  EXPECT_TRUE(is_complete(f));
  auto h = support_from_polytope(sq, f);
  EXPECT_EQ(h.ray_values, v({0, 0, 1, 1}));
  EXPECT_TRUE(is_strictly_upper_convex(h));
  EXPECT_EQ(polytope_from_support(f, h), sq);
  EXPECT_EQ(support_from_divisor(divisor_from_support(h)).ray_values, h.ray_values);
}

TEST(SupportFunction, ZeroIsConvexButNotStrict) {
  SupportFunction h{p2(), v({0, 0, 0})};
  EXPECT_TRUE(is_upper_convex(h));
  EXPECT_FALSE(is_strictly_upper_convex(h));
  EXPECT_EQ(polytope_from_support(h.fan, h).vertices(), (std::vector<RationalVector>{rv({0, 0})}));
}

TEST(SupportFunction, NonConvex) {
  // On P^2, h(e1) = h(e2) = 0 and h(-e1-e2) = -1: the piece on [e1, e2] is 0 but h(-e1-e2) < 0.
  SupportFunction h{p2(), v({0, 0, -1})};
  EXPECT_FALSE(is_upper_convex(h));
}

TEST(SupportFunction, LinearPiece) {
  SupportFunction h{p1xp1(), v({1, 2, 3, 4})};
  auto m = linear_piece(h, cone({{1, 0}, {0, 1}}));
  EXPECT_EQ(m, rv({1, 2}));
  EXPECT_EQ(support_value(h, v({0, -1})), 4);
}
