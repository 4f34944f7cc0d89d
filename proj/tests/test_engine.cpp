#include "support.hpp"

#include "tnp/engine.hpp"
#include "tnp/faces.hpp"

#include <gtest/gtest.h>

using namespace tnp;
using namespace tnp::testing;

namespace {

const TupleFace& face_with_witness(const std::vector<TupleFace>& faces, const Vec& w) {
  for (const auto& g : faces) {
    if (g.witness == w) return g;
  }
  throw std::runtime_error("no face with witness " + to_string(w));
}

// Target curve evaluated directly: a point is on it iff two of the affine forms tie at the top.
bool on_target_curve(const Vec& y) {
  const std::vector<Rat> forms{2 * y[0] - 8, y[0] - 4, y[0] + y[1] - 4, y[1] - 2, 2 * y[1]};
  const Rat m = *std::max_element(forms.begin(), forms.end());
  return std::count(forms.begin(), forms.end(), m) >= 2;
}

}  // namespace

TEST(Engine, RestrictionsOnTheDicriticalEdge) {
  const TropicalMap f = load_map("eq1.json");
  const auto faces = enumerate_tuple_faces(delta0(f));
  const GammaContext ctx = analyze_gamma(f, face_with_witness(faces, v({1, -2})));
  ASSERT_TRUE(ctx.restricted[0].has_value());
  ASSERT_TRUE(ctx.restricted[1].has_value());
  EXPECT_EQ(*ctx.restricted[0], poly(2, {{{2, 1}, 0}, {{4, 2}, 0}}));
  EXPECT_EQ(*ctx.restricted[1], poly(2, {{{2, 1}, -2}, {{4, 2}, -4}}));
  EXPECT_TRUE(ctx.tbmcd.empty());
}

TEST(Engine, RestrictionsOfTheLevelledExample) {
  const TropicalMap f = load_map("ex43.json");
  const auto faces = enumerate_tuple_faces(delta0(f));
  const GammaContext ctx = analyze_gamma(f, face_with_witness(faces, v({1, -1})));
  EXPECT_EQ(*ctx.restricted[0], f[0]);
  EXPECT_EQ(*ctx.restricted[1], poly(2, {{{1, 1}, 0}, {{2, 2}, 0}}));
  EXPECT_TRUE(ctx.gamma.flags.strictly_pre_origin);
  EXPECT_EQ(ctx.tbmcd, std::vector<std::size_t>{0});
}

TEST(Engine, OneTermRestrictionHasNoCornerLocus) {
  const TropicalMap f = load_map("eq1.json");
  for (const auto& g : enumerate_tuple_faces(delta0(f))) {
    const GammaContext ctx = analyze_gamma(f, g);
    for (std::size_t i = 0; i < 2; ++i) {
      if (!ctx.restricted[i] || ctx.restricted[i]->terms().size() != 1) continue;
      for (const auto& cell : ctx.sigma.cells) EXPECT_EQ(cell.summands[i].dim(), 0);
    }
  }
}

TEST(Engine, ContributingCellsOfTheDicriticalEdge) {
  const TropicalMap f = load_map("eq1.json");
  const auto faces = enumerate_tuple_faces(delta0(f));
  const GammaContext ctx = analyze_gamma(f, face_with_witness(faces, v({1, -2})));
  // The restrictions bend along the parallel lines 2a+b = 0 and 2a+b = 2.
  std::size_t bends = 0;
  for (const auto& cell : ctx.sigma.cells) {
    const SigmaAnalysis a = analyze_sigma(ctx, cell);
    EXPECT_TRUE(a.contributing);
    EXPECT_FALSE(cell.summands[0].dim() > 0 && cell.summands[1].dim() > 0);
    for (std::size_t i = 0; i < 2; ++i) {
      if (cell.summands[i].dim() == 0) continue;
      ++bends;
      EXPECT_EQ(a.iup, std::vector<std::size_t>{i});
      EXPECT_EQ(a.bound_block, std::vector<std::size_t>{i});
      EXPECT_EQ(a.image_block, std::vector<std::size_t>{1 - i});
      EXPECT_EQ(cell_contribution(ctx, a).dim(), 1);
    }
  }
  EXPECT_EQ(bends, 2u);
}

TEST(Engine, AnalyzeRejectsForeignCell) {
  const TropicalMap f = load_map("eq1.json");
  const auto faces = enumerate_tuple_faces(delta0(f));
  const GammaContext ctx = analyze_gamma(f, face_with_witness(faces, v({1, -2})));
  Cell foreign = decomposition(f).cells.front();
  foreign.closure = Polyhedron::point(v({100, 100}));
  EXPECT_THROW(analyze_sigma(ctx, foreign), Error);
}

TEST(Engine, UnitedPiecesOfTwoVariableFixture) {
  const TropicalMap f = load_map("eq1.json");
  const TNPSet s = tnp_set(f);
  EXPECT_EQ(s.canonical.size(), 5u);
  for (const auto& p : s.canonical) {
    EXPECT_EQ(p.polytope.dim(), 1);
    EXPECT_EQ(p.witness, v({1, -2}));
  }
  EXPECT_TRUE(membership(s, v({-1, -2})));
  EXPECT_EQ(membership(s, v({-1, -2})), on_target_curve(v({-1, -2})));
  EXPECT_TRUE(membership(s, v({0, -2})));
  EXPECT_TRUE(membership(s, v({4, 0})));
  EXPECT_FALSE(membership(s, v({1, 1})));
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) EXPECT_EQ(membership(s, v({a, b})), on_target_curve(v({a, b}))) << a << "," << b;
  }
  EXPECT_THROW(membership(s, v({1, 2, 3})), DimensionMismatch);
}

TEST(Engine, ProperMapHasEmptySet) {
  const TropicalMap id({poly(2, {{{1, 0}, 0}}), poly(2, {{{0, 1}, 0}})});
  const TNPSet s = tnp_set(id);
  EXPECT_TRUE(s.pieces.empty());
  EXPECT_FALSE(membership(s, v({0, 0})));
}

TEST(Engine, ThreeVariablePlane) {
  const TNPSet s = tnp_set(load_map("eq3.json"));
  const Polyhedron plane = Polyhedron::from_hrep(3, {}, {Hyperplane{v({1, 0, 0}), Rat(-1)}});
  EXPECT_TRUE(union_contains(s.polytopes(), plane));
  for (const auto& p : s.pieces) EXPECT_LE(p.polytope.dim(), 2);
}

TEST(Engine, DimensionCap) {
  EngineOptions opt;
  opt.dim_cap = 2;
  EXPECT_THROW(tnp_set(load_map("eq3.json"), opt), DimensionCapExceeded);
}

TEST(Engine, CanonicalUnionDropsContainedPieces) {
  Piece big{Polyhedron::from_vrep(2, {v({0, 0})}, {v({1, 0})}), 0, 0, {}, "a"};
  Piece small{convex_hull({v({1, 0}), v({2, 0})}), 1, 0, {}, "b"};
  Piece twin = big;
  twin.cell_label = "c";
  const auto out = canonical_union({small, big, twin});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.front().cell_label, "a");
}

TEST(Engine, GenericityReportOnFixtures) {
  EXPECT_TRUE(check_genericity(load_map("eq1.json")).generic);
  const TropicalPolynomial line = poly(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, -1}});
  const GenericityReport r = check_genericity(TropicalMap({line, line}));
  EXPECT_FALSE(r.generic);
  EXPECT_FALSE(r.violations.empty());
}

TEST(Engine, BijectionOnTwoVariableFixture) {
  const TropicalMap f = load_map("eq1.json");
  const CellComplex xi = decomposition(f);
  for (const auto& g : enumerate_tuple_faces(delta0(f))) {
    const bool point_member = std::any_of(g.members.begin(), g.members.end(), [](const Polyhedron& m) { return m.dim() == 0 && m.contains(v({0, 0})); });
    if (point_member) continue;
    const GammaContext ctx = analyze_gamma(f, g);
    const BijectionReport b = check_bijection(xi, ctx);
    EXPECT_TRUE(b.holds()) << "face " << g.id << ": " << b.xi_cells << " vs " << b.sigma_cells;
  }
}

TEST(EngineProperty, NonPreOriginFacesContributeNothing) {
  std::mt19937_64 rng(41);
  std::size_t checked = 0;
  for (int k = 0; k < 30; ++k) {
    const TropicalMap f = random_map(rng);
    for (const auto& g : enumerate_tuple_faces(delta0(f))) {
      if (g.flags.pre_origin && g.flags.dicritical) continue;
      const GammaContext ctx = analyze_gamma(f, g);
      for (const auto& cell : ctx.sigma.cells) {
        EXPECT_TRUE(cell_contribution(ctx, analyze_sigma(ctx, cell)).is_empty());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(EngineProperty, PiecesAreCodimensionAtLeastOne) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 30; ++k) {
    const TropicalMap f = random_map(rng);
    try {
      const TNPSet s = tnp_set(f);
      for (const auto& p : s.pieces) EXPECT_LE(p.polytope.dim(), 1);
      for (const auto& p : s.canonical) {
        EXPECT_EQ(std::count_if(s.canonical.begin(), s.canonical.end(),
                                [&](const Piece& q) { return is_subset(p.polytope, q.polytope); }),
                  1);
      }
    } catch (const GenericityViolation&) {
      EXPECT_FALSE(check_genericity(f).generic);
    }
  }
}

TEST(EngineProperty, AssembliesAgreeInTheDirectionOfTheProduct) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 30; ++k) {
    const TropicalMap f = random_map(rng);
    try {
      const TNPSet product = tnp_set(f);
      EngineOptions opt;
      opt.assembly = Assembly::Staircase;
      const TNPSet staircase = tnp_set(f, opt);
      // The staircase region lies inside the product box.
      EXPECT_TRUE(std::all_of(staircase.pieces.begin(), staircase.pieces.end(), [&](const Piece& p) {
        return union_contains(product.polytopes(), p.polytope);
      }));
    } catch (const GenericityViolation&) {
    }
  }
}
