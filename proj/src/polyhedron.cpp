#include "tnp/polyhedron.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace tnp {

namespace {

using IVec = std::vector<Int>;

Int idot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

void normalize(IVec& v) {
  Int g = 0;
  for (const auto& x : v) {
    if (x != 0) g = boost::multiprecision::gcd(g, x);
  }
  if (g < 0) g = -g;
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

IVec to_integer_row(const Vec& v) {
  Vec p = primitive(v);
  IVec r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = boost::multiprecision::numerator(p[i]);
  return r;
}

Vec to_rat(const IVec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

struct DDRay {
  IVec v;
  boost::dynamic_bitset<> zeros;
};

struct ConeGenerators {
  std::vector<IVec> rays;
  std::vector<IVec> lineality;
};

// Double description for {z in Z^D : <a, z> <= 0 for a in ineqs, <e, z> = 0 for e in eqs}.
// Rays come out extreme modulo the lineality space.
ConeGenerators dd_cone(std::size_t D, const std::vector<IVec>& ineqs, const std::vector<IVec>& eqs) {
  std::vector<IVec> lin;
  for (std::size_t i = 0; i < D; ++i) {
    IVec e(D, Int(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  for (const auto& e : eqs) {
    auto it = std::find_if(lin.begin(), lin.end(), [&](const IVec& l) { return idot(e, l) != 0; });
    if (it == lin.end()) continue;
    IVec l0 = *it;
    Int s0 = idot(e, l0);
    lin.erase(it);
    for (auto& l : lin) {
      Int s = idot(e, l);
      if (s == 0) continue;
      for (std::size_t k = 0; k < D; ++k) l[k] = s0 * l[k] - s * l0[k];
      normalize(l);
    }
  }

  const std::size_t m = ineqs.size();
  std::vector<DDRay> rays;
  for (std::size_t c = 0; c < m; ++c) {
    const IVec& a = ineqs[c];
    auto it = std::find_if(lin.begin(), lin.end(), [&](const IVec& l) { return idot(a, l) != 0; });
    if (it != lin.end()) {
      IVec l0 = *it;
      Int s0 = idot(a, l0);
      lin.erase(it);
      for (auto& l : lin) {
        Int s = idot(a, l);
        if (s == 0) continue;
        for (std::size_t k = 0; k < D; ++k) l[k] = s0 * l[k] - s * l0[k];
        normalize(l);
      }
      const Int abs0 = s0 < 0 ? Int(-s0) : s0;
      const int sign0 = s0 < 0 ? -1 : 1;
      for (auto& r : rays) {
        Int s = idot(a, r.v);
        if (s != 0) {
          for (std::size_t k = 0; k < D; ++k) r.v[k] = abs0 * r.v[k] - sign0 * s * l0[k];
          normalize(r.v);
        }
        r.zeros.set(c);
      }
      if (s0 > 0) {
        for (auto& x : l0) x = -x;
      }
      normalize(l0);
      DDRay fresh{std::move(l0), boost::dynamic_bitset<>(m)};
      for (std::size_t k = 0; k < c; ++k) fresh.zeros.set(k);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Int> s(rays.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = idot(a, rays[i].v);
      if (s[i] > 0) plus.push_back(i);
      else if (s[i] < 0) minus.push_back(i);
    }
    if (plus.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (s[i] == 0) rays[i].zeros.set(c);
      }
      continue;
    }
    std::vector<DDRay> next;
    next.reserve(rays.size());
    for (std::size_t p : plus) {
      for (std::size_t n : minus) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[n].zeros;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IVec v(D);
        for (std::size_t k = 0; k < D; ++k) v[k] = s[p] * rays[n].v[k] - s[n] * rays[p].v[k];
        normalize(v);
        common.set(c);
        next.push_back(DDRay{std::move(v), std::move(common)});
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) {
        next.push_back(std::move(rays[i]));
      } else if (s[i] == 0) {
        rays[i].zeros.set(c);
        next.push_back(std::move(rays[i]));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  out.lineality = std::move(lin);
  return out;
}

// Orthogonal projection onto the complement of span(basis).
class ComplementProjector {
 public:
  explicit ComplementProjector(const std::vector<Vec>& basis) : basis_(orthogonalize(basis)) {}

  Vec operator()(Vec v) const {
    for (const auto& [b, nb] : basis_) {
      Rat c = dot(v, b) / nb;
      if (c == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    return v;
  }

 private:
  static std::vector<std::pair<Vec, Rat>> orthogonalize(const std::vector<Vec>& basis) {
    std::vector<std::pair<Vec, Rat>> out;
    for (Vec v : basis) {
      for (const auto& [b, nb] : out) {
        Rat c = dot(v, b) / nb;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
      }
      if (is_zero(v)) continue;
      Rat nv = dot(v, v);
      out.emplace_back(std::move(v), std::move(nv));
    }
    return out;
  }

  std::vector<std::pair<Vec, Rat>> basis_;
};

void sort_unique(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), VecLess{});
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void check_ambient(std::size_t ambient, const std::vector<Vec>& vs, const char* what) {
  for (const auto& v : vs) {
    if (v.size() != ambient) {
      throw DimensionMismatch(std::string(what) + " of length " + std::to_string(v.size()) +
                              " in ambient dimension " + std::to_string(ambient));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Polyhedron Polyhedron::empty(std::size_t ambient) {
  Polyhedron p;
  p.ambient_ = ambient;
  p.dim_ = -1;
  p.inequalities_.push_back(HalfSpace{zero_vec(ambient), Rat(-1)});
  return p;
}

Polyhedron Polyhedron::whole_space(std::size_t ambient) {
  std::vector<Vec> lin;
  for (std::size_t i = 0; i < ambient; ++i) lin.push_back(unit_vec(ambient, i));
  return from_generators(ambient, {zero_vec(ambient)}, {}, std::move(lin));
}

Polyhedron Polyhedron::point(Vec p) {
  const std::size_t n = p.size();
  return from_vrep(n, {std::move(p)});
}

Polyhedron Polyhedron::from_hrep(std::size_t ambient, std::vector<HalfSpace> inequalities,
                                 std::vector<Hyperplane> equalities) {
  const std::size_t D = ambient + 1;
  std::vector<IVec> rows;
  std::vector<IVec> eq_rows;
  for (const auto& h : inequalities) {
    if (h.normal.size() != ambient) throw DimensionMismatch("half-space normal has wrong length");
    Vec row(h.normal);
    row.push_back(-h.offset);
    if (is_zero(h.normal)) {
      if (h.offset < 0) return empty(ambient);
      continue;
    }
    rows.push_back(to_integer_row(row));
  }
  for (const auto& e : equalities) {
    if (e.normal.size() != ambient) throw DimensionMismatch("hyperplane normal has wrong length");
    if (is_zero(e.normal)) {
      if (e.offset != 0) return empty(ambient);
      continue;
    }
    Vec row(e.normal);
    row.push_back(-e.offset);
    eq_rows.push_back(to_integer_row(row));
  }
  IVec t_nonneg(D, Int(0));
  t_nonneg[ambient] = -1;
  rows.push_back(std::move(t_nonneg));

  ConeGenerators g = dd_cone(D, rows, eq_rows);
  std::vector<Vec> vertices, rays, lineality;
  for (const auto& r : g.rays) {
    const Int& t = r[ambient];
    Vec x(ambient);
    if (t > 0) {
      for (std::size_t i = 0; i < ambient; ++i) x[i] = Rat(r[i], t);
      vertices.push_back(std::move(x));
    } else {
      for (std::size_t i = 0; i < ambient; ++i) x[i] = Rat(r[i]);
      rays.push_back(std::move(x));
    }
  }
  if (vertices.empty()) return empty(ambient);
  for (const auto& l : g.lineality) {
    Vec x = to_rat(l);
    x.resize(ambient);
    lineality.push_back(std::move(x));
  }
  return from_generators(ambient, std::move(vertices), std::move(rays), std::move(lineality));
}

Polyhedron Polyhedron::from_vrep(std::size_t ambient, std::vector<Vec> vertices, std::vector<Vec> rays,
                                 std::vector<Vec> lineality) {
  check_ambient(ambient, vertices, "vertex");
  check_ambient(ambient, rays, "ray");
  check_ambient(ambient, lineality, "lineality vector");
  if (vertices.empty()) return empty(ambient);
  Polyhedron p = from_generators(ambient, std::move(vertices), std::move(rays), std::move(lineality));
  // Round trip through the facets to prune redundant generators.
  return from_hrep(ambient, p.inequalities_, p.equalities_);
}

// Computes the facets of conv(vertices) + cone(rays) + span(lineality) and
// stores the generators (possibly redundant) in canonical form.
Polyhedron Polyhedron::from_generators(std::size_t ambient, std::vector<Vec> vertices, std::vector<Vec> rays,
                                       std::vector<Vec> lineality) {
  Polyhedron p;
  p.ambient_ = ambient;
  const std::size_t D = ambient + 1;

  std::vector<IVec> gens;
  std::vector<IVec> lin_rows;
  for (const auto& v : vertices) {
    Vec h(v);
    h.push_back(Rat(1));
    gens.push_back(to_integer_row(h));
  }
  for (const auto& r : rays) {
    if (is_zero(r)) continue;
    Vec h(r);
    h.push_back(Rat(0));
    gens.push_back(to_integer_row(h));
  }
  for (const auto& l : lineality) {
    if (is_zero(l)) continue;
    Vec h(l);
    h.push_back(Rat(0));
    lin_rows.push_back(to_integer_row(h));
  }
  ConeGenerators polar = dd_cone(D, gens, lin_rows);
  for (const auto& w : polar.rays) {
    Vec a(ambient);
    for (std::size_t i = 0; i < ambient; ++i) a[i] = Rat(w[i]);
    if (is_zero(a)) continue;
    p.inequalities_.push_back(HalfSpace{std::move(a), Rat(-w[ambient])});
  }
  for (const auto& w : polar.lineality) {
    Vec a(ambient);
    for (std::size_t i = 0; i < ambient; ++i) a[i] = Rat(w[i]);
    if (is_zero(a)) continue;
    p.equalities_.push_back(Hyperplane{std::move(a), Rat(-w[ambient])});
  }
  p.vertices_ = std::move(vertices);
  p.rays_ = std::move(rays);
  p.lineality_ = std::move(lineality);
  p.canonicalize_h();
  p.canonicalize_v();
  p.dim_ = static_cast<int>(ambient) - static_cast<int>(p.equalities_.size());
  return p;
}

void Polyhedron::canonicalize_h() {
  std::vector<Vec> eq_rows;
  for (const auto& e : equalities_) {
    Vec row(e.normal);
    row.push_back(e.offset);
    eq_rows.push_back(std::move(row));
  }
  eq_rows = rref(std::move(eq_rows));
  equalities_.clear();
  std::vector<std::size_t> pivots;
  for (auto& row : eq_rows) {
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    pivots.push_back(pivot);
    Vec normal(row.begin(), row.begin() + static_cast<long>(ambient_));
    Rat offset = row[ambient_];
    primitive_row(normal, offset);
    equalities_.push_back(Hyperplane{std::move(normal), std::move(offset)});
  }
  for (auto& h : inequalities_) {
    for (std::size_t k = 0; k < eq_rows.size(); ++k) {
      const Rat f = h.normal[pivots[k]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < ambient_; ++i) h.normal[i] -= f * eq_rows[k][i];
      h.offset -= f * eq_rows[k][ambient_];
    }
    primitive_row(h.normal, h.offset);
  }
  std::erase_if(inequalities_, [](const HalfSpace& h) { return is_zero(h.normal); });
  std::sort(inequalities_.begin(), inequalities_.end(), [](const HalfSpace& a, const HalfSpace& b) {
    if (auto c = compare(a.normal, b.normal); c != 0) return c < 0;
    return a.offset < b.offset;
  });
  inequalities_.erase(std::unique(inequalities_.begin(), inequalities_.end()), inequalities_.end());
  std::sort(equalities_.begin(), equalities_.end(), [](const Hyperplane& a, const Hyperplane& b) {
    if (auto c = compare(a.normal, b.normal); c != 0) return c < 0;
    return a.offset < b.offset;
  });
}

void Polyhedron::canonicalize_v() {
  std::vector<Vec> lin;
  for (auto& l : lineality_) {
    if (!is_zero(l)) lin.push_back(l);
  }
  lin = rref(std::move(lin));
  for (auto& l : lin) l = primitive_line(l);
  std::sort(lin.begin(), lin.end(), VecLess{});
  ComplementProjector project(lin);
  for (auto& v : vertices_) v = project(std::move(v));
  std::vector<Vec> rays;
  for (auto& r : rays_) {
    Vec q = project(std::move(r));
    if (!is_zero(q)) rays.push_back(primitive(q));
  }
  rays_ = std::move(rays);
  lineality_ = std::move(lin);
  sort_unique(vertices_);
  sort_unique(rays_);
}

bool Polyhedron::contains(const Vec& x) const {
  if (x.size() != ambient_) throw DimensionMismatch("point has wrong length");
  if (is_empty()) return false;
  for (const auto& e : equalities_) {
    if (!e.contains(x)) return false;
  }
  for (const auto& h : inequalities_) {
    if (!h.contains(x)) return false;
  }
  return true;
}

bool Polyhedron::in_relative_interior(const Vec& x) const {
  if (!contains(x)) return false;
  for (const auto& h : inequalities_) {
    if (dot(h.normal, x) == h.offset) return false;
  }
  return true;
}

std::string Polyhedron::describe() const {
  if (is_empty()) return "empty";
  std::string s = "dim " + std::to_string(dim_) + " V[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) s += (i ? " " : "") + to_string(vertices_[i]);
  s += "]";
  if (!rays_.empty()) {
    s += " R[";
    for (std::size_t i = 0; i < rays_.size(); ++i) s += (i ? " " : "") + to_string(rays_[i]);
    s += "]";
  }
  if (!lineality_.empty()) {
    s += " L[";
    for (std::size_t i = 0; i < lineality_.size(); ++i) s += (i ? " " : "") + to_string(lineality_[i]);
    s += "]";
  }
  return s;
}

bool operator==(const Polyhedron& a, const Polyhedron& b) {
  return a.ambient_ == b.ambient_ && a.dim_ == b.dim_ && a.equalities_ == b.equalities_ &&
         a.inequalities_ == b.inequalities_;
}

std::strong_ordering operator<=>(const Polyhedron& a, const Polyhedron& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  auto cmp_list = [](const auto& x, const auto& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = compare(x[i].normal, y[i].normal); c != 0) return c;
      if (auto c = compare(x[i].offset, y[i].offset); c != 0) return c;
    }
    return x.size() <=> y.size();
  };
  if (auto c = cmp_list(a.equalities_, b.equalities_); c != 0) return c;
  return cmp_list(a.inequalities_, b.inequalities_);
}

// ---------------------------------------------------------------------------
// Cones

Cone Cone::from_generators(std::size_t ambient, std::vector<Vec> rays, std::vector<Vec> lineality) {
  return Cone(Polyhedron::from_vrep(ambient, {zero_vec(ambient)}, std::move(rays), std::move(lineality)));
}

Cone Cone::zero(std::size_t ambient) { return Cone(Polyhedron::point(zero_vec(ambient))); }

Cone recession_cone(const Polyhedron& p) {
  if (p.is_empty()) throw Error("recession cone of an empty polyhedron");
  return Cone(Polyhedron::from_vrep(p.ambient_dim(), {zero_vec(p.ambient_dim())}, p.rays(), p.lineality()));
}

bool is_dicritical_cone(const Cone& c) { return dicritical_direction(c).has_value(); }

std::optional<Vec> dicritical_direction(const Cone& c) {
  for (const auto& r : c.rays()) {
    if (std::any_of(r.begin(), r.end(), [](const Rat& x) { return x > 0; })) return primitive(r);
  }
  for (const auto& l : c.lineality()) {
    auto it = std::find_if(l.begin(), l.end(), [](const Rat& x) { return x != 0; });
    if (it != l.end()) return *it > 0 ? primitive(l) : primitive(scale(l, Rat(-1)));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Operations

Polyhedron convex_hull(const std::vector<Vec>& points) {
  if (points.empty()) throw Error("convex hull of an empty point list");
  return Polyhedron::from_vrep(points.front().size(), points);
}

Polyhedron dual_description(const Polyhedron& p) {
  if (p.is_empty()) return Polyhedron::empty(p.ambient_dim());
  return Polyhedron::from_hrep(p.ambient_dim(), p.inequalities(), p.equalities());
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("Minkowski sum of different ambient dimensions");
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(p.ambient_dim());
  std::vector<Vec> vertices;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) vertices.push_back(add(a, b));
  }
  std::vector<Vec> rays(p.rays());
  rays.insert(rays.end(), q.rays().begin(), q.rays().end());
  std::vector<Vec> lin(p.lineality());
  lin.insert(lin.end(), q.lineality().begin(), q.lineality().end());
  return Polyhedron::from_vrep(p.ambient_dim(), std::move(vertices), std::move(rays), std::move(lin));
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("intersection of different ambient dimensions");
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(p.ambient_dim());
  std::vector<HalfSpace> h(p.inequalities());
  h.insert(h.end(), q.inequalities().begin(), q.inequalities().end());
  std::vector<Hyperplane> e(p.equalities());
  e.insert(e.end(), q.equalities().begin(), q.equalities().end());
  return Polyhedron::from_hrep(p.ambient_dim(), std::move(h), std::move(e));
}

std::optional<Rat> support_value(const Polyhedron& p, const Vec& alpha) {
  if (p.is_empty()) throw Error("support value of an empty polyhedron");
  for (const auto& r : p.rays()) {
    if (dot(alpha, r) > 0) return std::nullopt;
  }
  for (const auto& l : p.lineality()) {
    if (dot(alpha, l) != 0) return std::nullopt;
  }
  Rat best = dot(alpha, p.vertices().front());
  for (const auto& v : p.vertices()) best = std::max(best, dot(alpha, v));
  return best;
}

std::optional<Polyhedron> face_in_direction(const Polyhedron& p, const Vec& alpha) {
  if (p.is_empty()) throw Error("face of an empty polyhedron");
  if (alpha.size() != p.ambient_dim()) throw DimensionMismatch("direction has wrong length");
  auto top = support_value(p, alpha);
  if (!top) return std::nullopt;
  std::vector<Vec> vertices, rays;
  for (const auto& v : p.vertices()) {
    if (dot(alpha, v) == *top) vertices.push_back(v);
  }
  for (const auto& r : p.rays()) {
    if (dot(alpha, r) == 0) rays.push_back(r);
  }
  return Polyhedron::from_vrep(p.ambient_dim(), std::move(vertices), std::move(rays), p.lineality());
}

bool contains(const Polyhedron& p, const Vec& x) { return p.contains(x); }

int affine_dim(const Polyhedron& p) { return p.dim(); }

bool is_subset(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("subset test across ambient dimensions");
  if (p.is_empty()) return true;
  if (q.is_empty()) return false;
  for (const auto& v : p.vertices()) {
    if (!q.contains(v)) return false;
  }
  for (const auto& r : p.rays()) {
    for (const auto& e : q.equalities()) {
      if (dot(e.normal, r) != 0) return false;
    }
    for (const auto& h : q.inequalities()) {
      if (dot(h.normal, r) > 0) return false;
    }
  }
  for (const auto& l : p.lineality()) {
    for (const auto& e : q.equalities()) {
      if (dot(e.normal, l) != 0) return false;
    }
    for (const auto& h : q.inequalities()) {
      if (dot(h.normal, l) != 0) return false;
    }
  }
  return true;
}

bool equal_as_sets(const Polyhedron& p, const Polyhedron& q) { return is_subset(p, q) && is_subset(q, p); }

Vec relative_interior_point(const Polyhedron& p) {
  if (p.is_empty()) throw Error("relative interior point of an empty polyhedron");
  Vec c = zero_vec(p.ambient_dim());
  for (const auto& v : p.vertices()) c = add(c, v);
  c = scale(c, Rat(1, static_cast<long>(p.vertices().size())));
  for (const auto& r : p.rays()) c = add(c, r);
  return c;
}

Polyhedron affine_image(const Polyhedron& p, const std::vector<Vec>& matrix, const Vec& offset) {
  const std::size_t m = matrix.size();
  if (offset.size() != m) throw DimensionMismatch("affine image offset has wrong length");
  for (const auto& row : matrix) {
    if (row.size() != p.ambient_dim()) throw DimensionMismatch("affine image matrix has wrong width");
  }
  if (p.is_empty()) return Polyhedron::empty(m);
  auto apply_linear = [&](const Vec& x) {
    Vec y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = dot(matrix[i], x);
    return y;
  };
  std::vector<Vec> vertices, rays, lin;
  for (const auto& v : p.vertices()) vertices.push_back(add(apply_linear(v), offset));
  for (const auto& r : p.rays()) rays.push_back(apply_linear(r));
  for (const auto& l : p.lineality()) lin.push_back(apply_linear(l));
  return Polyhedron::from_vrep(m, std::move(vertices), std::move(rays), std::move(lin));
}

std::vector<Vec> affine_hull_directions(const Polyhedron& p) {
  std::vector<Vec> rows;
  for (const auto& e : p.equalities()) rows.push_back(e.normal);
  return null_space(rows, p.ambient_dim());
}

// ---------------------------------------------------------------------------
// Face lattice

namespace {

struct Incidence {
  // vertex_tight[v][k]: inequality k tight at vertex v; ray_tight likewise for rays.
  std::vector<boost::dynamic_bitset<>> vertex_tight;
  std::vector<boost::dynamic_bitset<>> ray_tight;
};

Incidence incidence(const Polyhedron& p) {
  const auto& ineqs = p.inequalities();
  Incidence inc;
  for (const auto& v : p.vertices()) {
    boost::dynamic_bitset<> b(ineqs.size());
    for (std::size_t k = 0; k < ineqs.size(); ++k) {
      if (dot(ineqs[k].normal, v) == ineqs[k].offset) b.set(k);
    }
    inc.vertex_tight.push_back(std::move(b));
  }
  for (const auto& r : p.rays()) {
    boost::dynamic_bitset<> b(ineqs.size());
    for (std::size_t k = 0; k < ineqs.size(); ++k) {
      if (dot(ineqs[k].normal, r) == 0) b.set(k);
    }
    inc.ray_tight.push_back(std::move(b));
  }
  return inc;
}

std::vector<std::size_t> bits_to_indices(const boost::dynamic_bitset<>& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != boost::dynamic_bitset<>::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

Polyhedron face_from_tight(const Polyhedron& p, const Incidence& inc, const boost::dynamic_bitset<>& tight) {
  std::vector<Vec> vertices, rays;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (tight.is_subset_of(inc.vertex_tight[i])) vertices.push_back(p.vertices()[i]);
  }
  for (std::size_t i = 0; i < p.rays().size(); ++i) {
    if (tight.is_subset_of(inc.ray_tight[i])) rays.push_back(p.rays()[i]);
  }
  return Polyhedron::from_vrep(p.ambient_dim(), std::move(vertices), std::move(rays), p.lineality());
}

}  // namespace

std::vector<PolyhedronFace> enumerate_faces(const Polyhedron& p) {
  std::vector<PolyhedronFace> out;
  if (p.is_empty()) return out;
  const std::size_t m = p.inequalities().size();
  const Incidence inc = incidence(p);
  const std::size_t nv = inc.vertex_tight.size();
  const std::size_t nr = inc.ray_tight.size();

  // Faces are identified by their closed tight sets.
  auto closure = [&](const boost::dynamic_bitset<>& vs, const boost::dynamic_bitset<>& rs) {
    boost::dynamic_bitset<> t(m);
    t.set();
    for (std::size_t i = 0; i < nv; ++i) {
      if (vs.test(i)) t &= inc.vertex_tight[i];
    }
    for (std::size_t i = 0; i < nr; ++i) {
      if (rs.test(i)) t &= inc.ray_tight[i];
    }
    return t;
  };
  auto members = [&](const boost::dynamic_bitset<>& t) {
    boost::dynamic_bitset<> vs(nv), rs(nr);
    for (std::size_t i = 0; i < nv; ++i) {
      if (t.is_subset_of(inc.vertex_tight[i])) vs.set(i);
    }
    for (std::size_t i = 0; i < nr; ++i) {
      if (t.is_subset_of(inc.ray_tight[i])) rs.set(i);
    }
    return std::make_pair(vs, rs);
  };

  std::set<boost::dynamic_bitset<>> seen;
  std::vector<boost::dynamic_bitset<>> queue;
  boost::dynamic_bitset<> all_v(nv), all_r(nr);
  all_v.set();
  all_r.set();
  auto root = closure(all_v, all_r);
  seen.insert(root);
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto t = queue[head];
    for (std::size_t k = 0; k < m; ++k) {
      if (t.test(k)) continue;
      auto bigger = t;
      bigger.set(k);
      auto [vs, rs] = members(bigger);
      if (vs.none()) continue;
      auto closed = closure(vs, rs);
      if (seen.insert(closed).second) queue.push_back(closed);
    }
  }
  for (const auto& t : queue) out.push_back(PolyhedronFace{face_from_tight(p, inc, t), bits_to_indices(t)});
  std::stable_sort(out.begin(), out.end(), [](const PolyhedronFace& a, const PolyhedronFace& b) {
    if (a.face.dim() != b.face.dim()) return a.face.dim() > b.face.dim();
    return a.tight < b.tight;
  });
  return out;
}

Cone normal_cone(const Polyhedron& p, const std::vector<std::size_t>& tight) {
  std::vector<Vec> rays, lin;
  for (std::size_t k : tight) rays.push_back(p.inequalities().at(k).normal);
  for (const auto& e : p.equalities()) lin.push_back(e.normal);
  return Cone::from_generators(p.ambient_dim(), std::move(rays), std::move(lin));
}

PolyhedronFace minimal_face(const Polyhedron& p, const Vec& x) {
  if (!p.contains(x)) throw Error("minimal_face: point not in polyhedron");
  const Incidence inc = incidence(p);
  boost::dynamic_bitset<> t(p.inequalities().size());
  for (std::size_t k = 0; k < p.inequalities().size(); ++k) {
    if (dot(p.inequalities()[k].normal, x) == p.inequalities()[k].offset) t.set(k);
  }
  Polyhedron face = face_from_tight(p, inc, t);
  // Close the tight set over the face's generators.
  boost::dynamic_bitset<> closed(p.inequalities().size());
  closed.set();
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (t.is_subset_of(inc.vertex_tight[i])) closed &= inc.vertex_tight[i];
  }
  for (std::size_t i = 0; i < p.rays().size(); ++i) {
    if (t.is_subset_of(inc.ray_tight[i])) closed &= inc.ray_tight[i];
  }
  return PolyhedronFace{std::move(face), bits_to_indices(closed)};
}

// ---------------------------------------------------------------------------
// Unions

namespace {

enum class Side { Below, Above, Split };

Side side_of(const Polyhedron& p, const Vec& a, const Rat& b) {
  bool below = true, above = true;
  for (const auto& v : p.vertices()) {
    Rat s = dot(a, v) - b;
    if (s > 0) below = false;
    if (s < 0) above = false;
  }
  for (const auto& r : p.rays()) {
    Rat s = dot(a, r);
    if (s > 0) below = false;
    if (s < 0) above = false;
  }
  for (const auto& l : p.lineality()) {
    if (dot(a, l) != 0) below = above = false;
  }
  if (below) return Side::Below;
  if (above) return Side::Above;
  return Side::Split;
}

}  // namespace

std::optional<Vec> uncovered_point(const std::vector<Polyhedron>& cover, const Polyhedron& piece) {
  if (piece.is_empty()) return std::nullopt;
  for (const auto& c : cover) {
    if (is_subset(piece, c)) return std::nullopt;
  }
  std::vector<std::pair<Vec, Rat>> cuts;
  std::set<std::pair<Vec, Rat>, std::less<>> seen;
  auto add_cut = [&](Vec a, Rat b) {
    primitive_row(a, b);
    auto key = std::make_pair(a, b);
    auto neg = std::make_pair(scale(a, Rat(-1)), Rat(-b));
    if (seen.count(key) || seen.count(neg)) return;
    seen.insert(key);
    cuts.emplace_back(std::move(a), std::move(b));
  };
  for (const auto& c : cover) {
    if (c.is_empty()) continue;
    for (const auto& h : c.inequalities()) add_cut(h.normal, h.offset);
    for (const auto& e : c.equalities()) add_cut(e.normal, e.offset);
  }
  const int d = piece.dim();
  std::vector<Polyhedron> parts{piece};
  for (const auto& [a, b] : cuts) {
    std::vector<Polyhedron> next;
    for (auto& part : parts) {
      if (side_of(part, a, b) != Side::Split) {
        next.push_back(std::move(part));
        continue;
      }
      auto lo = intersect(part, Polyhedron::from_hrep(part.ambient_dim(), {HalfSpace{a, b}}));
      auto hi = intersect(part, Polyhedron::from_hrep(part.ambient_dim(), {HalfSpace{scale(a, Rat(-1)), -b}}));
      if (lo.dim() == d) next.push_back(std::move(lo));
      if (hi.dim() == d) next.push_back(std::move(hi));
    }
    parts = std::move(next);
  }
  for (const auto& part : parts) {
    const Vec x = relative_interior_point(part);
    bool covered = std::any_of(cover.begin(), cover.end(), [&](const Polyhedron& c) { return c.contains(x); });
    if (!covered) return x;
  }
  return std::nullopt;
}

bool union_contains(const std::vector<Polyhedron>& cover, const Polyhedron& piece) {
  return !uncovered_point(cover, piece).has_value();
}

bool unions_equal(const std::vector<Polyhedron>& a, const std::vector<Polyhedron>& b) {
  for (const auto& p : a) {
    if (!union_contains(b, p)) return false;
  }
  for (const auto& q : b) {
    if (!union_contains(a, q)) return false;
  }
  return true;
}

}  // namespace tnp
