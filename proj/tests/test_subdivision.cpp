#include "support.hpp"

#include "tnp/faces.hpp"

#include <gtest/gtest.h>

using namespace tnp;
using namespace tnp::testing;

namespace {

const std::vector<ExtRat> kNoLevels{ExtRat::neg_inf(), ExtRat::neg_inf()};

std::size_t cells_in_relative_interior(const CellComplex& c, const Vec& x) {
  std::size_t k = 0;
  for (const auto& cell : c.cells) k += cell.closure.in_relative_interior(x) ? 1 : 0;
  return k;
}

long euler_characteristic(const CellComplex& c) {
  long chi = 0;
  for (const auto& cell : c.cells) chi += cell.dim % 2 == 0 ? 1 : -1;
  return chi;
}

bool pointed(const CellComplex& c) {
  return std::all_of(c.cells.begin(), c.cells.end(), [](const Cell& x) { return x.closure.lineality().empty(); });
}

}  // namespace

TEST(Subdivision, OneVariableWithLevel) {
  const CellComplex c = decomposition({poly(1, {{{1}, 0}})}, {ExtRat(Rat(0))});
  ASSERT_EQ(c.cells.size(), 3u);
  const Cell& left = c.locate(v({-3}));
  const Cell& mid = c.locate(v({0}));
  const Cell& right = c.locate(v({2}));
  EXPECT_EQ(left.dim, 1);
  EXPECT_EQ(mid.dim, 0);
  EXPECT_EQ(right.dim, 1);
  EXPECT_TRUE(equal_as_sets(left.dual, Polyhedron::point(v({0}))));
  EXPECT_TRUE(equal_as_sets(mid.dual, convex_hull({v({0}), v({1})})));
  EXPECT_TRUE(equal_as_sets(right.dual, Polyhedron::point(v({1}))));
  EXPECT_TRUE(left.level_attained[0]);
  EXPECT_TRUE(mid.level_attained[0]);
  EXPECT_FALSE(right.level_attained[0]);
}

TEST(Subdivision, VirtualPreimageVertexOfLevelledExample) {
  const TropicalMap f = load_map("ex43.json");
  const CellComplex c = decomposition(f.components(), {ExtRat(Rat(-2)), ExtRat(Rat(-1))});
  EXPECT_TRUE(check_duality(c).empty());
  EXPECT_EQ(euler_characteristic(c), 1);
  std::size_t corner_vertices = 0;
  for (const auto& cell : c.cells) {
    bool corner = true;
    for (std::size_t i = 0; i < 2; ++i) {
      if (cell.argmax[i].size() + (cell.level_attained[i] ? 1 : 0) < 2) corner = false;
    }
    if (corner && cell.dim == 0) {
      ++corner_vertices;
      EXPECT_EQ(cell.dual.dim(), 2);
    }
  }
  EXPECT_GE(corner_vertices, 1u);
}

TEST(Subdivision, DicriticalCellsOfTwoVariableFixture) {
  const TropicalMap f = load_map("eq1.json");
  const CellComplex xi = decomposition(f);
  const Polyhedron face = *face_in_direction(minkowski_sum(xi.newton[0], xi.newton[1]), v({1, -2}));
  std::size_t on_face = 0, unbounded = 0;
  for (const auto& cell : xi.cells) {
    if (cell.dim != 1 || !is_subset(cell.dual, face)) continue;
    ++on_face;
    const Cone rc = recession_cone(cell.closure);
    if (rc.is_zero()) continue;
    ++unbounded;
    EXPECT_EQ(rc.rays(), std::vector<Vec>{v({1, -2})});
  }
  EXPECT_EQ(on_face, 2u);
  EXPECT_EQ(unbounded, 2u);
}

TEST(Subdivision, Transversality) {
  const TropicalPolynomial line = poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, -1}});
  EXPECT_FALSE(is_transversal(decomposition({line, line}, kNoLevels)).transversal);
  EXPECT_FALSE(is_transversal(decomposition({line, line}, kNoLevels)).offending.empty());
  EXPECT_TRUE(is_transversal(decomposition(load_map("eq1.json"))).transversal);
  EXPECT_TRUE(is_transversal(decomposition({line}, {ExtRat::neg_inf()})).transversal);
}

TEST(Subdivision, DualityHoldsOnFixtures) {
  for (const char* name : {"eq1.json", "ex43.json", "eq3.json"}) {
    const CellComplex c = decomposition(load_map(name));
    EXPECT_TRUE(check_duality(c).empty()) << name;
  }
}

TEST(Subdivision, RegularSubdivisionWithZeroLiftIsTrivial) {
  const std::vector<LatticePoint> pts{{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}};
  std::map<LatticePoint, Rat> lift;
  for (const auto& p : pts) lift[p] = Rat(0);
  const auto cells = regular_subdivision(pts, lift);
  ASSERT_FALSE(cells.empty());
  EXPECT_EQ(cells.front().cell.dim(), 2);
  EXPECT_EQ(std::count_if(cells.begin(), cells.end(), [](const RegularCell& c) { return c.cell.dim() == 2; }), 1);
  EXPECT_TRUE(equal_as_sets(cells.front().cell, convex_hull({v({0, 0}), v({2, 0}), v({0, 2})})));
  EXPECT_EQ(cells.front().points.size(), pts.size());
}

TEST(Subdivision, RegularSubdivisionOfMarkedPoints) {
  const std::map<LatticePoint, Rat> lift{{{1, 1, 0}, Rat(0)}, {{1, 1, 2}, Rat(0)}, {{0, 1, 2}, Rat(7)},
                                         {{0, 2, 4}, Rat(3)}, {{1, 2, 4}, Rat(2)}, {{2, 2, 4}, Rat(5)}};
  std::vector<LatticePoint> pts;
  std::vector<Vec> coords;
  for (const auto& [p, h] : lift) {
    pts.push_back(p);
    coords.push_back(to_vec(p));
  }
  const Polyhedron hull = convex_hull(coords);
  const auto cells = regular_subdivision(pts, lift);
  std::vector<Polyhedron> maximal;
  for (const auto& c : cells) {
    EXPECT_TRUE(is_subset(c.cell, hull));
    if (c.cell.dim() == hull.dim()) maximal.push_back(c.cell);
  }
  ASSERT_GE(maximal.size(), 2u);
  EXPECT_TRUE(union_contains(maximal, hull));
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      EXPECT_LT(intersect(maximal[i], maximal[j]).dim(), hull.dim());
    }
  }
}

TEST(Subdivision, CollinearLiftedPointIsNotAVertex) {
  const std::map<LatticePoint, Rat> lift{
      {{2, 0}, Rat(-8)}, {{1, 0}, Rat(-4)}, {{1, 1}, Rat(-4)}, {{0, 1}, Rat(-2)}, {{0, 2}, Rat(0)}};
  std::vector<LatticePoint> pts;
  for (const auto& [p, h] : lift) pts.push_back(p);
  for (const auto& c : regular_subdivision(pts, lift)) {
    EXPECT_EQ(std::count(c.vertices.begin(), c.vertices.end(), LatticePoint{1, 1}), 0);
  }
}

TEST(SubdivisionProperty, SamplesLieInExactlyOneCell) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-24, 24);
  std::size_t samples = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const TropicalMap f = random_map(rng);
    const CellComplex c = decomposition(f);
    for (int k = 0; k < 100; ++k) {
      // Half-integer points hit lower-dimensional cells often.
      const Vec x{Rat(num(rng), 2), Rat(num(rng), 2)};
      ASSERT_EQ(cells_in_relative_interior(c, x), 1u) << to_string(x);
      const Cell& cell = c.locate(x);
      for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(cell.argmax[i], eval_with_argmax(f[i], x).argmax);
      ++samples;
    }
  }
  EXPECT_GE(samples, 1000u);
}

TEST(SubdivisionProperty, DualityAndEulerCharacteristic) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const TropicalMap f = random_map(rng);
    const CellComplex c = decomposition(f);
    EXPECT_TRUE(check_duality(c).empty());
    if (pointed(c)) EXPECT_EQ(euler_characteristic(c), 1);
  }
}

TEST(SubdivisionProperty, LevelsRefineTheDecomposition) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> lvl(-6, 6);
  for (int trial = 0; trial < 25; ++trial) {
    const TropicalMap f = random_map(rng);
    const CellComplex coarse = decomposition(f);
    const CellComplex fine = decomposition(f.components(), {ExtRat(Rat(lvl(rng))), ExtRat(Rat(lvl(rng)))});
    EXPECT_TRUE(check_duality(fine).empty());
    for (const auto& cell : fine.cells) {
      const Vec x = relative_interior_point(cell.closure);
      // A factor whose level wins alone imposes nothing; the others keep their maximizers.
      bool all_terms_attained = true;
      for (std::size_t i = 0; i < 2; ++i) {
        if (cell.argmax[i].empty()) all_terms_attained = false;
        else EXPECT_EQ(cell.argmax[i], eval_with_argmax(f[i], x).argmax);
      }
      if (all_terms_attained) EXPECT_TRUE(is_subset(cell.closure, coarse.locate(x).closure));
    }
  }
}
