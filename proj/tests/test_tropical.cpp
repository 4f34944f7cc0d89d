#include "support.hpp"

#include "tnp/faces.hpp"

#include <gtest/gtest.h>

using namespace tnp;
using namespace tnp::testing;

namespace {

// Independent evaluation: plain loop over the terms.
Rat brute_max(const TropicalPolynomial& f, const Vec& x) {
  std::optional<Rat> best;
  for (const auto& t : f.terms()) {
    Rat val = t.coefficient + dot(to_vec(t.exponent), x);
    if (!best || val > *best) best = val;
  }
  return *best;
}

Vec random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 7);
  Vec x;
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(num(rng), den(rng));
  return x;
}

}  // namespace

TEST(Tropical, EvaluationAtOrigin) {
  const TropicalMap f = load_map("eq1.json");
  const Evaluation e1 = eval_with_argmax(f[0], v({0, 0}));
  EXPECT_EQ(e1.value, Rat(0));
  EXPECT_EQ(e1.argmax, (std::vector<LatticePoint>{{0, 1}, {2, 1}, {4, 2}}));
  const Evaluation e2 = eval_with_argmax(f[1], v({0, 0}));
  EXPECT_EQ(e2.value, Rat(0));
  EXPECT_EQ(e2.argmax, (std::vector<LatticePoint>{{0, 1}}));
}

TEST(Tropical, SingleTerm) {
  const TropicalPolynomial g = poly(2, {{{3, 1}, -2}});
  const Evaluation e = eval_with_argmax(g, v({1, 5}));
  EXPECT_EQ(e.value, Rat(6));
  EXPECT_EQ(e.argmax.size(), 1u);
  EXPECT_FALSE(in_corner_locus(g, v({1, 5})));
  EXPECT_FALSE(in_corner_locus(g, v({-7, 0})));
}

TEST(Tropical, CornerLocus) {
  const TropicalMap f = load_map("eq1.json");
  EXPECT_TRUE(in_corner_locus(f[0], v({0, 0})));
  EXPECT_FALSE(in_corner_locus(f[1], v({0, 0})));
}

TEST(Tropical, VirtualPreimage) {
  const TropicalMap f = load_map("eq1.json");
  EXPECT_TRUE(in_virtual_preimage(f[1], ExtRat(Rat(0)), v({0, 0})));
  EXPECT_FALSE(in_virtual_preimage(f[1], ExtRat(Rat(5)), v({0, 0})));
  for (const Vec& x : {v({0, 0}), v({1, -2}), v({3, 3})}) {
    EXPECT_EQ(in_virtual_preimage(f[0], ExtRat::neg_inf(), x), in_corner_locus(f[0], x));
  }
}

TEST(Tropical, RejectsConstantAndDuplicateTerms) {
  EXPECT_THROW(poly(2, {{{0, 0}, 1}, {{1, 0}, 0}}), ConstantTermError);
  EXPECT_THROW(TropicalPolynomial(2, {Term{{1, 0}, Rat(0)}, Term{{1, 0}, Rat(2)}}), Error);
  EXPECT_THROW(TropicalPolynomial(2, {}), Error);
  EXPECT_THROW(poly(2, {{{1, 0, 0}, 0}}), Error);
  EXPECT_THROW(poly(2, {{{-1, 2}, 0}}), Error);
}

TEST(Tropical, RestrictToFaceOfSegment) {
  const TropicalMap f = load_map("ex43.json");
  const Polyhedron g2 = convex_hull({v({0, 0}), v({1, 1}), v({2, 2})});
  const auto r = restrict(f[1], g2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, poly(2, {{{1, 1}, 0}, {{2, 2}, 0}}));
  EXPECT_EQ(r->to_string(), "max(a+b, 2a+2b)");
}

TEST(Tropical, RestrictToWholePolytopeIsIdentity) {
  const TropicalMap f = load_map("eq1.json");
  const PolytopeTuple d = delta0(f);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto r = restrict(f[i], d.polytopes[i]);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, f[i]);
  }
}

TEST(Tropical, RestrictToEdgeThroughOrigin) {
  const TropicalMap f = load_map("eq1.json");
  const Polyhedron edge = convex_hull({v({0, 0}), v({4, 2})});
  const auto r = restrict(f[0], edge);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, poly(2, {{{2, 1}, 0}, {{4, 2}, 0}}));
  EXPECT_FALSE(restrict(f[0], Polyhedron::point(v({0, 0}))).has_value());
  EXPECT_THROW(restrict(f[0], convex_hull({v({0, 0}), v({1, 2})})), Error);
}

TEST(TropicalProperty, EvaluationIsConvexAndMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const TropicalMap f = random_map(rng, 6, 4);
    for (const auto& g : f.components()) {
      const Vec x = random_point(rng, 2), z = random_point(rng, 2);
      const Rat t(static_cast<long>(rng() % 11), 10);
      const Vec mid = add(scale(x, t), scale(z, Rat(1) - t));
      EXPECT_EQ(eval_with_argmax(g, x).value, brute_max(g, x));
      EXPECT_LE(eval_with_argmax(g, mid).value,
                t * eval_with_argmax(g, x).value + (Rat(1) - t) * eval_with_argmax(g, z).value);
    }
  }
}

TEST(TropicalProperty, LevelMonotonicity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const TropicalMap f = random_map(rng, 5, 3);
    const Vec x = random_point(rng, 2);
    const Rat m = eval_with_argmax(f[0], x).value;
    EXPECT_TRUE(in_virtual_preimage(f[0], ExtRat(m), x));
    EXPECT_FALSE(in_virtual_preimage(f[0], ExtRat(m + Rat(1, 3)), x));
  }
}

TEST(TropicalProperty, RestrictionAgreesWithArgmaxOnTheFace) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const TropicalMap f = random_map(rng, 5, 3);
    const PolytopeTuple d = delta0(f);
    for (const auto& face : enumerate_faces(d.polytopes[0])) {
      if (face.face.dim() == d.polytopes[0].dim()) continue;
      const auto r = restrict(f[0], face.face);
      if (!r) continue;
      for (int k = 0; k < 4; ++k) {
        const Vec x = random_point(rng, 2);
        const Evaluation full = eval_with_argmax(f[0], x);
        std::vector<LatticePoint> on_face;
        for (const auto& a : full.argmax) {
          if (face.face.contains(to_vec(a))) on_face.push_back(a);
        }
        if (on_face.empty()) continue;
        const Evaluation part = eval_with_argmax(*r, x);
        EXPECT_EQ(part.value, full.value);
        EXPECT_EQ(part.argmax, on_face);
      }
    }
  }
}
