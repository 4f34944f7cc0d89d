#include "support.hpp"

#include "tnp/engine.hpp"
#include "tnp/oracle.hpp"

#include <gtest/gtest.h>

using namespace tnp;
using namespace tnp::testing;

TEST(Oracle, FarPointsAreNotMembers) {
  const TropicalMap f = load_map("eq1.json");
  EXPECT_FALSE(in_tnp(f, v({100, 100})).member);
  EXPECT_FALSE(in_tnp(f, v({10, 10})).member);
  EXPECT_FALSE(in_tnp(f, v({100, 100})).ray.has_value());
}

TEST(Oracle, PointOnTheBoundedEdge) {
  const TropicalMap f = load_map("eq1.json");
  const OracleVerdict verdict = in_tnp(f, v({2, -1}));
  ASSERT_TRUE(verdict.member);
  EXPECT_EQ(*verdict.ray, v({1, -2}));
  EXPECT_TRUE(verdict.cell.has_value());
}

TEST(Oracle, WitnessHalfLineLiesInTheVirtualPreimage) {
  const TropicalMap f = load_map("eq1.json");
  const TNPSet s = tnp_set(f);
  for (const auto& y : boundary_samples(s, 40)) {
    const OracleVerdict verdict = in_tnp(f, y);
    ASSERT_TRUE(verdict.member) << to_string(y);
    // Locate the witnessing cell again and walk far along the ray.
    const CellComplex xi = decomposition(f.components(), {ExtRat(y[0]), ExtRat(y[1])});
    bool found = false;
    for (const auto& cell : xi.cells) {
      if (cell.label() != *verdict.cell) continue;
      found = true;
      const Vec x = add(relative_interior_point(cell.closure), scale(*verdict.ray, Rat(1000)));
      for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(in_virtual_preimage(f[i], ExtRat(y[i]), x));
    }
    EXPECT_TRUE(found) << *verdict.cell;
  }
}

TEST(Oracle, GridAgreesOnFixture) {
  const TropicalMap f = load_map("eq1.json");
  const TNPSet s = tnp_set(f);
  const GridReport r = grid_compare(f, s, default_box(s), 9);
  EXPECT_EQ(r.points, 81u);
  EXPECT_TRUE(r.mismatches.empty());
}

TEST(Oracle, ProperMapHasNoMembers) {
  const TropicalMap id({poly(2, {{{1, 0}, 0}}), poly(2, {{{0, 1}, 0}})});
  const TNPSet s = tnp_set(id);
  const GridReport r = grid_compare(id, s, default_box(s), 7);
  EXPECT_EQ(r.points, 49u);
  EXPECT_EQ(r.members, 0u);
  EXPECT_TRUE(r.mismatches.empty());
}

TEST(Oracle, CorruptedSetsAreCaught) {
  const TropicalMap f = load_map("eq1.json");
  const TNPSet s = tnp_set(f);
  TNPSet dropped = s;
  const Piece lost = dropped.canonical.front();
  std::erase_if(dropped.pieces, [&](const Piece& p) { return is_subset(p.polytope, lost.polytope); });
  dropped.canonical.erase(dropped.canonical.begin());
  std::size_t misses = 0;
  for (const auto& y : boundary_samples(s, 60)) {
    if (in_tnp(f, y).member != membership(dropped, y)) ++misses;
  }
  EXPECT_GE(misses, 1u);

  TNPSet inflated = s;
  Piece blob{Polyhedron::from_vrep(2, {v({-20, -20}), v({20, -20}), v({-20, 20}), v({20, 20})}), 0, 0, {}, "blob"};
  inflated.pieces.push_back(blob);
  inflated.canonical.push_back(blob);
  const GridReport r = grid_compare(f, inflated, Box{v({-12, -12}), v({4, 4})}, 9);
  ASSERT_FALSE(r.mismatches.empty());
  EXPECT_TRUE(r.mismatches.front().engine);
  EXPECT_FALSE(r.mismatches.front().oracle);
  EXPECT_FALSE(r.mismatches.front().pieces.empty());
}

TEST(Oracle, OffsetsAvoidInputDenominators) {
  const TropicalMap f({poly(2, {{{1, 0}, 0}, {{0, 1}, 0}}), poly(2, {{{1, 1}, 0}})});
  const Vec off = generic_offsets(f, Box{v({0, 0}), v({1, 1})});
  ASSERT_EQ(off.size(), 2u);
  EXPECT_NE(off[0], off[1]);
  for (const auto& o : off) {
    EXPECT_GT(o, Rat(0));
    EXPECT_LT(o, Rat(1, 1000));
  }
}

TEST(Oracle, DefaultBoxInflatesVertices) {
  const TNPSet s = tnp_set(load_map("eq1.json"));
  const Box b = default_box(s);
  EXPECT_EQ(b.lo, v({-5, -7}));
  EXPECT_EQ(b.hi, v({9, 5}));
}

TEST(Oracle, BoundarySamplesAreOnPieces) {
  const TNPSet s = tnp_set(load_map("eq1.json"));
  const auto pts = boundary_samples(s, 60);
  EXPECT_EQ(pts.size(), 60u);
  for (const auto& y : pts) EXPECT_TRUE(membership(s, y));
}

TEST(Oracle, AssemblyProbeOnFixture) {
  const AssemblyProbe p = probe_assemblies(load_map("eq1.json"));
  EXPECT_GT(p.compared, 0u);
  EXPECT_TRUE(p.unions_equal);
  for (const auto& d : p.disagreements) EXPECT_FALSE(d.verdict.empty());
}

TEST(OracleProperty, EngineAgreesOnGenericRandomMaps) {
  std::mt19937_64 rng(51);
  std::size_t compared = 0;
  for (int k = 0; k < 15; ++k) {
    const TropicalMap f = random_map(rng);
    if (!check_genericity(f).generic) continue;
    const TNPSet s = tnp_set(f);
    const BoundaryReport b = boundary_compare(f, s, 10);
    EXPECT_TRUE(b.disagreements.empty());
    const GridReport g = grid_compare(f, s, default_box(s), 5);
    EXPECT_TRUE(g.mismatches.empty());
    compared += b.points + g.points;
  }
  EXPECT_GT(compared, 0u);
}
