#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "toric/fan.hpp"
#include "toric/format.hpp"
#include "toric/resolution.hpp"

using namespace testing_support;

TEST(ValidateFan, RejectsLines) {
  try {
    validate_fan(2, raw({{{1, 0}, {-1, 0}, {0, -1}}}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "cone 1 [(1,0),(-1,0),(0,-1)] is not strongly convex");
  }
}

TEST(ValidateFan, RejectsOverlap) {
  try {
    validate_fan(2, raw({{{1, 0}, {1, 2}}, {{1, 1}, {0, 1}}}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "cones [(1,0),(1,2)] and [(1,1),(0,1)] intersect in [(1,1),(1,2)], which is not a face of both");
  }
}

TEST(ValidateFan, FaceClosure) {
  Fan f = p1xp1();
  EXPECT_EQ(f.cones().size(), 9u);
  EXPECT_EQ(f.maximal_cones().size(), 4u);
  EXPECT_EQ(f.rays(), vs({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  EXPECT_EQ(number_of_cones_dim(f, 0), 1u);
  EXPECT_EQ(number_of_cones_dim(f, 1), 4u);
  EXPECT_EQ(number_of_cones_dim(f, 2), 4u);
  EXPECT_TRUE(f.contains(cone({{0, 1}})));
  EXPECT_FALSE(f.contains(cone({{1, 1}})));
}

TEST(ValidateFan, ListedFacesAreNotMaximal) {
  Fan f = validate_fan(2, raw({{{1, 0}, {0, 1}}, {{1, 0}}}));
  EXPECT_EQ(f.maximal_cones().size(), 1u);
}

TEST(Completeness, Examples) {
  EXPECT_TRUE(is_complete(p1xp1()));
  EXPECT_TRUE(is_complete(p2()));
  EXPECT_TRUE(is_complete(triangle_fan()));
  EXPECT_FALSE(is_complete(validate_fan(2, raw({{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}}))));
  EXPECT_TRUE(is_smooth(p2()));
  EXPECT_FALSE(is_smooth(triangle_fan()));
}

TEST(Star, PlaneGapListing) {
  Fan f = validate_fan(2, raw({{{2, -1}, {1, 0}}, {{1, 0}, {1, 1}}, {{1, 1}, {2, 0}}}));
  EXPECT_EQ(gap(star(cone({{1, 0}}), f).raw), "[ [ [ 1, 0 ] ], [ [ 2, -1 ], [ 1, 0 ] ], [ [ 1, 0 ], [ 1, 1 ] ] ]");
  EXPECT_EQ(gap(star(cone({{1, 0}, {2, -1}}), f).raw), "[ [ [ 2, -1 ], [ 1, 0 ] ] ]");
}

TEST(Star, SpaceGapListing) {
  Fan f = validate_fan(3, raw({{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, {{2, 0, 0}, {0, 2, 0}, {1, 1, -2}}}));
  auto s = star(cone({{2, 0, 0}}), f);
  EXPECT_EQ(gap(s.raw),
            "[ [ [ 2, 0, 0 ] ], [ [ 0, 0, 2 ], [ 2, 0, 0 ] ], [ [ 0, 2, 0 ], [ 2, 0, 0 ] ], "
            "[ [ 1, 1, -2 ], [ 2, 0, 0 ] ], [ [ 2, 0, 0 ], [ 0, 2, 0 ], [ 0, 0, 2 ] ], "
            "[ [ 2, 0, 0 ], [ 0, 2, 0 ], [ 1, 1, -2 ] ] ]");
  EXPECT_EQ(s.projected.ambient_dim(), 2u);
  EXPECT_EQ(s.projected.cones().size(), s.raw.size());
  EXPECT_EQ(gap(star(cone({{2, 0, 0}, {0, 2, 0}}), f).raw),
            "[ [ [ 0, 2, 0 ], [ 2, 0, 0 ] ], [ [ 2, 0, 0 ], [ 0, 2, 0 ], [ 0, 0, 2 ] ], "
            "[ [ 2, 0, 0 ], [ 0, 2, 0 ], [ 1, 1, -2 ] ] ]");
}

TEST(Star, RejectsConeOutsideFan) {
  EXPECT_THROW(star(cone({{1, 1}}), p1xp1()), DomainError);
}

TEST(Betti, ProjectiveLineSquared) {
  Fan f = p1xp1();
  EXPECT_EQ(betti_number(f, 0), 1);
  EXPECT_EQ(betti_number(f, 1), 0);
  EXPECT_EQ(betti_number(f, 2), 2);
  EXPECT_EQ(betti_number(f, 4), 1);
  EXPECT_EQ(euler_characteristic(f), 4);
}

TEST(Betti, WarnsOffSmoothComplete) {
  std::string warning;
  betti_number(triangle_fan(), 2, &warning);
  EXPECT_FALSE(warning.empty());
  warning.clear();
  betti_number(p2(), 2, &warning);
  EXPECT_TRUE(warning.empty());
}

TEST(Cardinality, SmallFields) {
  Fan f = p1xp1();
  EXPECT_EQ(cardinality_of_X(f, 2), 9);
  EXPECT_EQ(cardinality_of_X(f, 3), 16);
  EXPECT_EQ(cardinality_of_X(f, 5), 36);
  std::vector<long long> expected{7, 13, 21, 31, 57, 73};
  std::vector<long long> qs{2, 3, 4, 5, 7, 8};
  for (std::size_t i = 0; i < qs.size(); ++i) EXPECT_EQ(cardinality_of_X(triangle_fan(), qs[i]), expected[i]);
  EXPECT_THROW(cardinality_of_X(f, 6), DomainError);
}

TEST(Automorphisms, Orders) {
  EXPECT_EQ(fan_automorphism_group(p2()).elements.size(), 6u);
  EXPECT_EQ(fan_automorphism_group(p1xp1()).elements.size(), 8u);
  EXPECT_EQ(fan_automorphism_group(triangle_fan()).elements.size(), 6u);
  EXPECT_EQ(fan_automorphism_group(octagon()).elements.size(), 8u);
}

TEST(Automorphisms, ApplyPreservesFan) {
  Fan f = p2();
  for (const auto& g : fan_automorphism_group(f).elements) EXPECT_EQ(apply(g, f), f);
}

TEST(Morphism, SwapAndScaling) {
  Fan t = triangle_fan();
  auto swap = is_fan_morphism(make_matrix({{0, 1}, {1, 0}}), t, t);
  EXPECT_TRUE(swap);
  EXPECT_EQ(swap.morphism->cone_assignment.size(), t.cones().size());
  EXPECT_TRUE(is_fan_morphism(make_matrix({{2, 0}, {0, 2}}), p1xp1(), p1xp1()));
  // [(1,0),(0,1)] maps to [(1,1),(-1,1)], which straddles two cones.
  auto bad = is_fan_morphism(make_matrix({{1, -1}, {1, 1}}), p1xp1(), p1xp1());
  EXPECT_FALSE(bad);
  ASSERT_TRUE(bad.failing_cone.has_value());
}

TEST(Morphism, ProjectionToLine) {
  Fan line = validate_fan(1, raw({{{1}}, {{-1}}}));
  EXPECT_TRUE(is_fan_morphism(make_matrix({{1, 0}}), p1xp1(), line));
  EXPECT_FALSE(is_fan_morphism(make_matrix({{1, 1}}), p1xp1(), line));
}

TEST(Gluing, ProjectiveLine) {
  auto [m1, m2] = gluing_map(Cone::zero(1), cone({{1}}), cone({{-1}}), Lattice::standard(1));
  EXPECT_EQ(m1.exponents, vs({{1}}));
  EXPECT_EQ(m2.exponents, vs({{-1}}));
}

TEST(Gluing, AlongARay) {
  auto [m1, m2] = gluing_map(cone({{1, 1}}), cone({{1, 0}, {1, 1}}), cone({{1, 1}, {0, 1}}), Lattice::standard(2));
  EXPECT_TRUE(is_birational(m1));
  EXPECT_TRUE(is_birational(m2));
  EXPECT_EQ(m1.exponents.size(), 2u);
  EXPECT_EQ(m2.exponents.size(), 2u);
}
