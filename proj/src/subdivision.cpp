#include "tnp/subdivision.hpp"

#include <algorithm>

namespace tnp {

namespace {

struct Lifted {
  LatticePoint exponent;
  Rat height;
  bool is_level;
};

std::vector<Lifted> lifted_terms(std::size_t n, const Factor& f, const ExtRat& level) {
  std::vector<Lifted> out;
  if (f) {
    for (const auto& t : f->terms()) out.push_back(Lifted{t.exponent, t.coefficient, false});
  }
  if (!level.is_neg_inf()) out.push_back(Lifted{LatticePoint(n, 0), level.value(), true});
  return out;
}

// Affine form <x, a> + height as a half-space row difference.
Vec exponent_diff(const LatticePoint& a, const LatticePoint& b) {
  Vec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = Rat(a[i] - b[i]);
  return d;
}

Polyhedron summand_of(std::size_t n, const std::vector<LatticePoint>& argmax, bool level_attained) {
  std::vector<Vec> pts;
  for (const auto& a : argmax) pts.push_back(to_vec(a));
  if (level_attained || pts.empty()) pts.push_back(zero_vec(n));
  return convex_hull(pts);
}

}  // namespace

std::vector<Region> factor_regions(std::size_t n, const Factor& f, const ExtRat& level) {
  if (f && f->num_vars() != n) throw DimensionMismatch("factor in the wrong number of variables");
  const auto terms = lifted_terms(n, f, level);
  std::vector<Region> out;
  if (terms.size() <= 1) {
    Region r{Polyhedron::whole_space(n), {}, false};
    if (!terms.empty()) {
      if (terms[0].is_level) r.level_attained = true;
      else r.argmax.push_back(terms[0].exponent);
    }
    out.push_back(std::move(r));
    return out;
  }
  std::vector<Vec> lifted;
  for (const auto& t : terms) {
    Vec p = to_vec(t.exponent);
    p.push_back(t.height);
    lifted.push_back(std::move(p));
  }
  const Polyhedron hull = convex_hull(lifted);
  for (const auto& pf : enumerate_faces(hull)) {
    std::vector<std::size_t> on;
    for (std::size_t k = 0; k < lifted.size(); ++k) {
      if (pf.face.contains(lifted[k])) on.push_back(k);
    }
    const Lifted& base = terms[on.front()];
    std::vector<HalfSpace> ineqs;
    std::vector<Hyperplane> eqs;
    std::size_t next_on = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const bool member = next_on < on.size() && on[next_on] == k;
      if (member) ++next_on;
      if (k == on.front()) continue;
      Vec d = exponent_diff(terms[k].exponent, base.exponent);
      Rat rhs = base.height - terms[k].height;
      if (member) eqs.push_back(Hyperplane{std::move(d), std::move(rhs)});
      else ineqs.push_back(HalfSpace{std::move(d), std::move(rhs)});
    }
    Polyhedron q = Polyhedron::from_hrep(n, std::move(ineqs), std::move(eqs));
    if (q.is_empty()) continue;
    // Lower faces of the lifted hull give regions whose relative interior maximizes more terms.
    const Vec x = relative_interior_point(q);
    Rat best;
    std::size_t attained = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      Rat v = terms[k].height + dot(to_vec(terms[k].exponent), x);
      if (attained == 0 || v > best) {
        best = std::move(v);
        attained = 1;
      } else if (v == best) {
        ++attained;
      }
    }
    if (attained != on.size()) continue;
    if (dot(to_vec(base.exponent), x) + base.height != best) continue;
    Region r{std::move(q), {}, false};
    for (std::size_t k : on) {
      if (terms[k].is_level) r.level_attained = true;
      else r.argmax.push_back(terms[k].exponent);
    }
    std::sort(r.argmax.begin(), r.argmax.end());
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Region& a, const Region& b) { return a.closure < b.closure; });
  return out;
}

std::vector<PartialCell> refine(const std::vector<PartialCell>& cells, const std::vector<Region>& regions) {
  std::vector<PartialCell> out;
  for (const auto& c : cells) {
    for (const auto& r : regions) {
      Polyhedron meet = intersect(c.closure, r.closure);
      if (meet.is_empty()) continue;
      const Vec x = relative_interior_point(meet);
      if (!c.closure.in_relative_interior(x) || !r.closure.in_relative_interior(x)) continue;
      PartialCell next{std::move(meet), c.argmax, c.level_attained};
      next.argmax.push_back(r.argmax);
      next.level_attained.push_back(r.level_attained);
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::string Cell::label() const {
  std::string s;
  for (std::size_t i = 0; i < argmax.size(); ++i) {
    if (i) s += "|";
    s += "{";
    bool first = true;
    if (level_attained[i]) {
      s += "y";
      first = false;
    }
    for (const auto& a : argmax[i]) {
      if (!first) s += ",";
      s += to_string(to_vec(a));
      first = false;
    }
    s += "}";
  }
  return s;
}

const Cell& CellComplex::locate(const Vec& x) const {
  for (const auto& c : cells) {
    if (c.closure.in_relative_interior(x)) return c;
  }
  throw Error("point " + to_string(x) + " lies in no cell");
}

CellComplex decomposition(std::size_t n, const std::vector<Factor>& factors, const std::vector<ExtRat>& levels) {
  if (factors.size() != levels.size()) throw DimensionMismatch("one level per factor required");
  CellComplex out;
  out.n = n;
  out.levels = levels;
  std::vector<PartialCell> parts{PartialCell{Polyhedron::whole_space(n), {}, {}}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    parts = refine(parts, factor_regions(n, factors[i], levels[i]));
    std::vector<LatticePoint> support;
    if (factors[i]) support = factors[i]->support();
    out.newton.push_back(summand_of(n, support, !levels[i].is_neg_inf()));
  }
  for (auto& p : parts) {
    Cell c;
    c.closure = std::move(p.closure);
    c.dim = c.closure.dim();
    c.argmax = std::move(p.argmax);
    c.level_attained = std::move(p.level_attained);
    Polyhedron dual = Polyhedron::point(zero_vec(n));
    for (std::size_t i = 0; i < c.argmax.size(); ++i) {
      c.summands.push_back(summand_of(n, c.argmax[i], c.level_attained[i]));
      dual = minkowski_sum(dual, c.summands.back());
    }
    c.dual = std::move(dual);
    out.cells.push_back(std::move(c));
  }
  std::sort(out.cells.begin(), out.cells.end(), [](const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.closure < b.closure;
  });
  for (std::size_t k = 0; k < out.cells.size(); ++k) out.cells[k].id = k;
  return out;
}

CellComplex decomposition(const std::vector<TropicalPolynomial>& polys, const std::vector<ExtRat>& levels) {
  if (polys.empty()) throw Error("decomposition needs at least one polynomial");
  const std::size_t n = polys.front().num_vars();
  std::vector<Factor> factors;
  for (const auto& p : polys) {
    if (p.num_vars() != n) throw DimensionMismatch("polynomials in different numbers of variables");
    factors.emplace_back(p);
  }
  return decomposition(n, factors, levels);
}

CellComplex decomposition(const TropicalMap& f) {
  return decomposition(f.components(), std::vector<ExtRat>(f.n(), ExtRat::neg_inf()));
}

TransversalityReport is_transversal(const CellComplex& c) {
  TransversalityReport r;
  for (const auto& cell : c.cells) {
    int sum = 0;
    for (const auto& s : cell.summands) sum += s.dim();
    if (cell.dual.dim() != sum) {
      r.transversal = false;
      r.offending.push_back(cell.id);
    }
  }
  return r;
}

std::vector<DualityViolation> check_duality(const CellComplex& c) {
  std::vector<DualityViolation> out;
  Polyhedron total = Polyhedron::point(zero_vec(c.n));
  for (const auto& p : c.newton) total = minkowski_sum(total, p);
  struct WitnessedFace {
    Polyhedron face;
    Vec witness;
  };
  std::vector<WitnessedFace> proper;
  for (const auto& pf : enumerate_faces(total)) {
    if (pf.tight.empty()) continue;
    Vec w = zero_vec(c.n);
    for (std::size_t k : pf.tight) w = add(w, total.inequalities()[k].normal);
    proper.push_back(WitnessedFace{pf.face, std::move(w)});
  }
  for (const auto& cell : c.cells) {
    Polyhedron sum = Polyhedron::point(zero_vec(c.n));
    for (const auto& s : cell.summands) sum = minkowski_sum(sum, s);
    if (!(sum == cell.dual)) out.push_back({cell.id, "dual differs from the sum of its summands"});
    if (cell.dim + cell.dual.dim() != static_cast<int>(c.n)) {
      out.push_back({cell.id, "dimensions " + std::to_string(cell.dim) + " + " + std::to_string(cell.dual.dim()) +
                                  " do not add up to " + std::to_string(c.n)});
    }
    const auto dirs_cell = affine_hull_directions(cell.closure);
    const auto dirs_dual = affine_hull_directions(cell.dual);
    for (const auto& u : dirs_cell) {
      for (const auto& w : dirs_dual) {
        if (dot(u, w) != 0) out.push_back({cell.id, "affine spans not orthogonal"});
      }
    }
    const Cone rec = recession_cone(cell.closure);
    for (const auto& f : proper) {
      const bool on_face = is_subset(cell.dual, f.face);
      const bool unbounded = rec.contains(f.witness);
      if (on_face != unbounded) {
        out.push_back({cell.id, std::string(on_face ? "dual on" : "dual off") + " the face with normal " +
                                    to_string(f.witness) + (unbounded ? " but" : " and not") + " receding along it"});
      }
    }
  }
  return out;
}

std::vector<RegularCell> regular_subdivision(const std::vector<LatticePoint>& support,
                                             const std::map<LatticePoint, Rat>& lift) {
  if (support.empty()) throw Error("regular subdivision of an empty support");
  const std::size_t n = support.front().size();
  std::vector<Vec> lifted;
  for (const auto& a : support) {
    if (a.size() != n) throw DimensionMismatch("support points of different lengths");
    auto it = lift.find(a);
    Vec p = to_vec(a);
    p.push_back(it == lift.end() ? Rat(0) : it->second);
    lifted.push_back(std::move(p));
  }
  const Polyhedron hull = convex_hull(lifted);
  std::vector<Vec> drop_last;
  for (std::size_t i = 0; i < n; ++i) drop_last.push_back(unit_vec(n + 1, i));
  std::vector<RegularCell> out;
  for (const auto& pf : enumerate_faces(hull)) {
    const Cone nc = normal_cone(hull, pf.tight);
    bool upper = !nc.lineality().empty() &&
                 std::any_of(nc.lineality().begin(), nc.lineality().end(), [&](const Vec& l) { return l[n] != 0; });
    upper = upper || std::any_of(nc.rays().begin(), nc.rays().end(), [&](const Vec& r) { return r[n] > 0; });
    if (!upper) continue;
    RegularCell rc{affine_image(pf.face, drop_last, zero_vec(n)), {}, {}};
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (pf.face.contains(lifted[k])) rc.points.push_back(support[k]);
    }
    for (const auto& v : pf.face.vertices()) {
      LatticePoint a;
      for (std::size_t i = 0; i < n; ++i) a.push_back(static_cast<long>(boost::multiprecision::numerator(v[i])));
      rc.vertices.push_back(std::move(a));
    }
    std::sort(rc.points.begin(), rc.points.end());
    std::sort(rc.vertices.begin(), rc.vertices.end());
    out.push_back(std::move(rc));
  }
  std::sort(out.begin(), out.end(), [](const RegularCell& a, const RegularCell& b) {
    if (a.cell.dim() != b.cell.dim()) return a.cell.dim() > b.cell.dim();
    return a.cell < b.cell;
  });
  return out;
}

}  // namespace tnp
