#include "tnp/engine.hpp"

#include "tnp/parallel.hpp"

#include <algorithm>

namespace tnp {

namespace {

bool contains_index(const std::vector<std::size_t>& v, std::size_t i) { return std::find(v.begin(), v.end(), i) != v.end(); }

// Places `p` (in R^|coords|) on the given coordinates of R^n.
struct Block {
  std::vector<std::size_t> coords;
  Polyhedron p;
};

// Product of the blocks, every coordinate not covered by a block left free.
Polyhedron embed_product(std::size_t n, const std::vector<Block>& blocks) {
  std::vector<Vec> vertices{zero_vec(n)};
  std::vector<Vec> rays, lineality;
  std::vector<bool> covered(n, false);
  for (const auto& b : blocks) {
    if (b.coords.empty()) continue;
    if (b.p.is_empty()) return Polyhedron::empty(n);
    auto lift = [&](const Vec& v) {
      Vec y = zero_vec(n);
      for (std::size_t k = 0; k < b.coords.size(); ++k) y[b.coords[k]] = v[k];
      return y;
    };
    std::vector<Vec> next;
    for (const auto& base : vertices) {
      for (const auto& v : b.p.vertices()) next.push_back(add(base, lift(v)));
    }
    vertices = std::move(next);
    for (const auto& r : b.p.rays()) rays.push_back(lift(r));
    for (const auto& l : b.p.lineality()) lineality.push_back(lift(l));
    for (std::size_t c : b.coords) covered[c] = true;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!covered[j]) lineality.push_back(unit_vec(n, j));
  }
  return Polyhedron::from_vrep(n, std::move(vertices), std::move(rays), std::move(lineality));
}

// Affine form of a restricted polynomial on a cell, as (slope, constant).
std::pair<Vec, Rat> affine_form(const TropicalPolynomial& f, const LatticePoint& a) {
  for (const auto& t : f.terms()) {
    if (t.exponent == a) return {to_vec(a), t.coefficient};
  }
  throw Error("exponent " + to_string(to_vec(a)) + " not in the restricted polynomial");
}

Polyhedron image_under(const Polyhedron& closure, const GammaContext& ctx, const Cell& cell,
                       const std::vector<std::size_t>& indices) {
  const std::size_t m = indices.size();
  if (m == 0) return Polyhedron::whole_space(0);
  std::vector<Vec> rows;
  Vec offset;
  for (std::size_t i : indices) {
    if (!ctx.restricted[i] || cell.argmax[i].empty()) return Polyhedron::empty(m);
    auto [slope, c] = affine_form(*ctx.restricted[i], cell.argmax[i].front());
    rows.push_back(std::move(slope));
    offset.push_back(std::move(c));
  }
  return affine_image(closure, rows, offset);
}

}  // namespace

GammaContext analyze_gamma(const TropicalMap& f, const TupleFace& gamma) {
  const std::size_t n = f.n();
  if (gamma.members.size() != n) throw DimensionMismatch("tuple-face has the wrong number of members");
  GammaContext ctx;
  ctx.gamma = gamma;
  for (std::size_t i = 0; i < n; ++i) {
    ctx.restricted.push_back(restrict(f[i], gamma.members[i]));
    if (!contains_index(gamma.flags.bmcd, i)) ctx.tbmcd.push_back(i);
  }
  ctx.sigma = decomposition(n, ctx.restricted, std::vector<ExtRat>(n, ExtRat::neg_inf()));
  return ctx;
}

SigmaAnalysis analyze_sigma(const GammaContext& ctx, const Cell& sigma) {
  if (sigma.id >= ctx.sigma.cells.size() || !(ctx.sigma.cells[sigma.id].closure == sigma.closure)) {
    throw Error("cell is not part of the restricted decomposition");
  }
  const std::size_t n = ctx.sigma.n;
  SigmaAnalysis a;
  a.cell = sigma.id;
  const Vec x = relative_interior_point(sigma.closure);
  a.contributing = std::all_of(ctx.tbmcd.begin(), ctx.tbmcd.end(), [&](std::size_t i) {
    return ctx.restricted[i] && in_corner_locus(*ctx.restricted[i], x);
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma.summands[i].dim() > 0) a.iup.push_back(i);
  }
  for (std::size_t i : ctx.gamma.flags.bmcd) {
    if (contains_index(a.iup, i)) a.bound_block.push_back(i);
    else a.image_block.push_back(i);
  }
  for (std::size_t i : a.bound_block) {
    auto [slope, c] = affine_form(*ctx.restricted[i], sigma.argmax[i].front());
    auto top = support_value(sigma.closure, slope);
    a.eps[i] = top ? std::optional<Rat>(*top + c) : std::nullopt;
  }
  a.y_image = image_under(sigma.closure, ctx, sigma, a.image_block);
  return a;
}

Polyhedron cell_contribution(const GammaContext& ctx, const SigmaAnalysis& a, Assembly assembly) {
  const std::size_t n = ctx.sigma.n;
  const auto& flags = ctx.gamma.flags;
  if (!flags.dicritical || !flags.pre_origin || !a.contributing) return Polyhedron::empty(n);
  const Cell& sigma = ctx.sigma.cells.at(a.cell);
  const std::size_t u = a.bound_block.size();
  Polyhedron bound;
  if (assembly == Assembly::Product) {
    Vec corner = zero_vec(u);
    std::vector<Vec> rays, lineality;
    for (std::size_t k = 0; k < u; ++k) {
      const auto& e = a.eps.at(a.bound_block[k]);
      if (e) {
        corner[k] = *e;
        rays.push_back(unit_vec(u, k, Rat(-1)));
      } else {
        lineality.push_back(unit_vec(u, k));
      }
    }
    bound = Polyhedron::from_vrep(u, {corner}, std::move(rays), std::move(lineality));
  } else {
    Polyhedron image = image_under(sigma.closure, ctx, sigma, a.bound_block);
    std::vector<Vec> down;
    for (std::size_t k = 0; k < u; ++k) down.push_back(unit_vec(u, k, Rat(-1)));
    bound = minkowski_sum(image, Polyhedron::from_vrep(u, {zero_vec(u)}, std::move(down)));
  }
  Polyhedron out = embed_product(n, {Block{a.image_block, a.y_image}, Block{a.bound_block, bound}});
  if (out.dim() > static_cast<int>(n) - 1) {
    throw GenericityViolation("full-dimensional contribution from face " + std::to_string(ctx.gamma.id) + ", cell " +
                              sigma.label());
  }
  return out;
}

std::vector<Polyhedron> TNPSet::polytopes() const {
  std::vector<Polyhedron> out;
  for (const auto& p : canonical) out.push_back(p.polytope);
  return out;
}

std::vector<Piece> canonical_union(std::vector<Piece> pieces) {
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.polytope.dim() != b.polytope.dim()) return a.polytope.dim() > b.polytope.dim();
    return a.polytope < b.polytope;
  });
  std::vector<Piece> kept;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < pieces.size() && !redundant; ++j) {
      if (j == i || !is_subset(pieces[i].polytope, pieces[j].polytope)) continue;
      // Equal pieces: keep the first.
      redundant = j < i || !(pieces[i].polytope == pieces[j].polytope);
    }
    if (!redundant) kept.push_back(pieces[i]);
  }
  std::sort(kept.begin(), kept.end(), [](const Piece& a, const Piece& b) { return a.polytope < b.polytope; });
  return kept;
}

TNPSet tnp_set(const TropicalMap& f, const EngineOptions& options) {
  const std::size_t n = f.n();
  if (n > options.dim_cap) {
    throw DimensionCapExceeded("ambient dimension " + std::to_string(n) + " exceeds the cap " +
                               std::to_string(options.dim_cap));
  }
  const auto faces = enumerate_tuple_faces(delta0(f));
  std::vector<const TupleFace*> active;
  for (const auto& g : faces) {
    if (g.flags.dicritical && g.flags.pre_origin) active.push_back(&g);
  }
  std::vector<std::vector<Piece>> per_face(active.size());
  parallel_for(active.size(), [&](std::size_t k) {
    const TupleFace& g = *active[k];
    GammaContext ctx = analyze_gamma(f, g);
    for (const auto& cell : ctx.sigma.cells) {
      SigmaAnalysis a = analyze_sigma(ctx, cell);
      Polyhedron p = cell_contribution(ctx, a, options.assembly);
      if (p.is_empty()) continue;
      per_face[k].push_back(Piece{std::move(p), g.id, cell.id, g.witness, cell.label()});
    }
  });
  TNPSet s;
  s.n = n;
  for (auto& v : per_face) {
    for (auto& p : v) s.pieces.push_back(std::move(p));
  }
  s.canonical = canonical_union(s.pieces);
  return s;
}

bool membership(const TNPSet& s, const Vec& y) {
  if (y.size() != s.n) throw DimensionMismatch("query point has wrong length");
  return std::any_of(s.pieces.begin(), s.pieces.end(), [&](const Piece& p) { return p.polytope.contains(y); });
}

GenericityReport check_genericity(const TropicalMap& f) {
  const std::size_t n = f.n();
  GenericityReport r;
  auto check = [&](const std::vector<Factor>& restricted, const std::string& where) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<Factor> sub;
      std::string idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (1u << i)) || !restricted[i]) continue;
        sub.push_back(restricted[i]);
        idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
      }
      if (sub.empty()) continue;
      auto c = decomposition(n, sub, std::vector<ExtRat>(sub.size(), ExtRat::neg_inf()));
      auto t = is_transversal(c);
      if (!t.transversal) {
        r.generic = false;
        std::string cells;
        for (std::size_t id : t.offending) cells += (cells.empty() ? "" : " ") + c.cells[id].label();
        r.violations.push_back(where + ", factors {" + idx + "}: " + cells);
      }
    }
  };
  std::vector<Factor> full;
  for (const auto& c : f.components()) full.emplace_back(c);
  check(full, "full map");
  for (const auto& g : enumerate_tuple_faces(delta0(f))) {
    std::vector<Factor> restricted;
    for (std::size_t i = 0; i < n; ++i) restricted.push_back(restrict(f[i], g.members[i]));
    check(restricted, "face " + std::to_string(g.id) + " " + to_string(g.witness));
  }
  return r;
}

BijectionReport check_bijection(const CellComplex& xi, const GammaContext& ctx) {
  BijectionReport r;
  r.sigma_cells = ctx.sigma.cells.size();
  for (const auto& c : xi.cells) {
    if (!is_subset(c.dual, ctx.gamma.sum_face)) continue;
    ++r.xi_cells;
    const Vec x = relative_interior_point(c.closure);
    std::size_t hosts = 0;
    for (const auto& s : ctx.sigma.cells) {
      if (s.closure.in_relative_interior(x) && is_subset(c.closure, s.closure)) ++hosts;
    }
    if (hosts == 1) ++r.uniquely_placed;
  }
  return r;
}

}  // namespace tnp
