#include "tnp/oracle.hpp"

#include "tnp/parallel.hpp"

#include <algorithm>
#include <set>

namespace tnp {

namespace {

std::string label_of(const PartialCell& c) {
  std::string s;
  for (std::size_t i = 0; i < c.argmax.size(); ++i) {
    if (i) s += "|";
    s += "{";
    bool first = true;
    if (c.level_attained[i]) {
      s += "y";
      first = false;
    }
    for (const auto& a : c.argmax[i]) {
      if (!first) s += ",";
      s += to_string(to_vec(a));
      first = false;
    }
    s += "}";
  }
  return s;
}

bool may_recede_dicritically(const Polyhedron& p) { return is_dicritical_cone(recession_cone(p)); }

}  // namespace

OracleVerdict in_tnp(const TropicalMap& f, const Vec& y) {
  const std::size_t n = f.n();
  if (y.size() != n) throw DimensionMismatch("query point has wrong length");
  // Only cells where every factor sits at a corner matter; a cell recedes along a
  // direction only if every region containing it does, so both filters prune early.
  std::vector<PartialCell> parts{PartialCell{Polyhedron::whole_space(n), {}, {}}};
  for (std::size_t i = 0; i < n && !parts.empty(); ++i) {
    std::vector<Region> regions;
    for (auto& r : factor_regions(n, f[i], ExtRat(y[i]))) {
      if (r.argmax.size() + (r.level_attained ? 1 : 0) < 2) continue;
      if (!may_recede_dicritically(r.closure)) continue;
      regions.push_back(std::move(r));
    }
    parts = refine(parts, regions);
    std::erase_if(parts, [](const PartialCell& c) { return !may_recede_dicritically(c.closure); });
  }
  std::sort(parts.begin(), parts.end(), [](const PartialCell& a, const PartialCell& b) { return a.closure < b.closure; });
  OracleVerdict v;
  for (const auto& c : parts) {
    if (auto ray = dicritical_direction(recession_cone(c.closure))) {
      v.member = true;
      v.cell = label_of(c);
      v.ray = std::move(ray);
      break;
    }
  }
  return v;
}

Box default_box(const TNPSet& s, const Rat& margin) {
  std::optional<Box> b;
  for (const auto& p : s.canonical) {
    for (const auto& v : p.polytope.vertices()) {
      if (!b) b = Box{v, v};
      for (std::size_t i = 0; i < s.n; ++i) {
        b->lo[i] = std::min(b->lo[i], v[i]);
        b->hi[i] = std::max(b->hi[i], v[i]);
      }
    }
  }
  if (!b) b = Box{zero_vec(s.n), zero_vec(s.n)};
  for (std::size_t i = 0; i < s.n; ++i) {
    b->lo[i] -= margin;
    b->hi[i] += margin;
  }
  return *b;
}

Vec generic_offsets(const TropicalMap& f, const Box& box) {
  std::vector<Int> dens;
  for (const auto& c : f.components()) {
    for (const auto& t : c.terms()) dens.push_back(boost::multiprecision::denominator(t.coefficient));
  }
  for (const auto& x : box.lo) dens.push_back(boost::multiprecision::denominator(x));
  for (const auto& x : box.hi) dens.push_back(boost::multiprecision::denominator(x));
  auto is_prime = [](long p) {
    for (long d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  };
  Vec out;
  long p = 1009;
  while (out.size() < f.n()) {
    const bool usable = is_prime(p) && std::none_of(dens.begin(), dens.end(), [&](const Int& d) { return d % p == 0; });
    if (usable) out.emplace_back(1, p);
    ++p;
  }
  return out;
}

GridReport grid_compare(const TropicalMap& f, const TNPSet& engine, const Box& box, std::size_t res) {
  const std::size_t n = f.n();
  if (res == 0) throw Error("grid resolution must be positive");
  const Vec offset = generic_offsets(f, box);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= res;
  std::vector<std::optional<GridMismatch>> found(total);
  std::vector<char> member(total, 0);
  parallel_for(total, [&](std::size_t flat) {
    std::vector<std::size_t> idx(n);
    Vec y(n);
    std::size_t rest = flat;
    for (std::size_t i = n; i-- > 0;) {
      idx[i] = rest % res;
      rest /= res;
      Rat step = res > 1 ? (box.hi[i] - box.lo[i]) / Rat(static_cast<long>(res - 1)) : Rat(0);
      y[i] = box.lo[i] + step * Rat(static_cast<long>(idx[i])) + offset[i];
    }
    const OracleVerdict v = in_tnp(f, y);
    const bool e = membership(engine, y);
    member[flat] = v.member;
    if (v.member == e) return;
    GridMismatch m{idx, y, v.member, e, v.ray, v.cell, {}};
    for (const auto& p : engine.pieces) {
      if (p.polytope.contains(y)) m.pieces.push_back("face " + std::to_string(p.gamma) + " cell " + p.cell_label);
    }
    found[flat] = std::move(m);
  });
  GridReport r;
  r.points = total;
  r.members = static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));
  for (auto& m : found) {
    if (m) r.mismatches.push_back(std::move(*m));
  }
  return r;
}

std::vector<Vec> boundary_samples(const TNPSet& s, std::size_t count) {
  std::vector<std::vector<Vec>> per_piece;
  for (const auto& piece : s.canonical) {
    const Polyhedron& p = piece.polytope;
    std::vector<Vec> pts{relative_interior_point(p)};
    const auto& vs = p.vertices();
    for (const auto& v : vs) pts.push_back(v);
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) pts.push_back(scale(add(vs[k], vs[k + 1]), Rat(1, 2)));
    for (long j = 1; j <= 24; ++j) {
      const Rat t(j, 25);
      for (std::size_t k = 0; k + 1 < vs.size(); ++k) pts.push_back(add(vs[k], scale(sub(vs[k + 1], vs[k]), t)));
      for (const auto& v : vs) {
        for (const auto& r : p.rays()) pts.push_back(add(v, scale(r, Rat(7 * j, 4))));
        for (const auto& l : p.lineality()) {
          pts.push_back(add(v, scale(l, Rat(5 * j, 4))));
          pts.push_back(sub(v, scale(l, Rat(5 * j, 4))));
        }
      }
    }
    per_piece.push_back(std::move(pts));
  }
  std::vector<Vec> out;
  std::set<Vec, VecLess> seen;
  for (std::size_t round = 0; out.size() < count; ++round) {
    bool any = false;
    for (const auto& pts : per_piece) {
      if (round >= pts.size()) continue;
      any = true;
      if (seen.insert(pts[round]).second) out.push_back(pts[round]);
      if (out.size() == count) break;
    }
    if (!any) break;
  }
  return out;
}

BoundaryReport boundary_compare(const TropicalMap& f, const TNPSet& engine, std::size_t count) {
  const auto pts = boundary_samples(engine, count);
  std::vector<char> agree(pts.size(), 1);
  parallel_for(pts.size(), [&](std::size_t k) { agree[k] = in_tnp(f, pts[k]).member == membership(engine, pts[k]); });
  BoundaryReport r;
  r.points = pts.size();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!agree[k]) r.disagreements.push_back(pts[k]);
  }
  return r;
}

AssemblyProbe probe_assemblies(const TropicalMap& f) {
  AssemblyProbe out;
  std::vector<AssemblyDisagreement> diffs;
  std::vector<Polyhedron> products, staircases;
  for (const auto& g : enumerate_tuple_faces(delta0(f))) {
    if (!g.flags.dicritical || !g.flags.pre_origin) continue;
    const GammaContext ctx = analyze_gamma(f, g);
    for (const auto& cell : ctx.sigma.cells) {
      const SigmaAnalysis a = analyze_sigma(ctx, cell);
      Polyhedron p = cell_contribution(ctx, a, Assembly::Product);
      Polyhedron s = cell_contribution(ctx, a, Assembly::Staircase);
      if (p.is_empty() && s.is_empty()) continue;
      ++out.compared;
      if (!p.is_empty()) products.push_back(p);
      if (!s.is_empty()) staircases.push_back(s);
      if (!(p == s)) diffs.push_back(AssemblyDisagreement{g.id, cell.label(), std::move(p), std::move(s), "", {}});
    }
  }
  out.unions_equal = unions_equal(products, staircases);
  for (auto& d : diffs) {
    std::optional<Vec> pt = uncovered_point(staircases, d.product);
    if (!pt) pt = uncovered_point(products, d.staircase);
    if (!pt) {
      d.verdict = "absorbed";
    } else {
      const bool truth = in_tnp(f, *pt).member;
      const bool in_product = std::any_of(products.begin(), products.end(), [&](const Polyhedron& q) { return q.contains(*pt); });
      d.verdict = truth == in_product ? "product" : "staircase";
      d.probe = std::move(pt);
    }
    out.disagreements.push_back(std::move(d));
  }
  return out;
}

}  // namespace tnp
