#include "tnp/tropical.hpp"

#include <algorithm>
#include <set>

namespace tnp {

Vec to_vec(const LatticePoint& a) {
  Vec v;
  v.reserve(a.size());
  for (long x : a) v.emplace_back(x);
  return v;
}

TropicalPolynomial::TropicalPolynomial(std::size_t n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
  if (terms_.empty()) throw Error("tropical polynomial needs at least one term");
  for (const auto& t : terms_) {
    if (t.exponent.size() != n_) {
      throw DimensionMismatch("exponent of length " + std::to_string(t.exponent.size()) + " in " +
                              std::to_string(n_) + " variables");
    }
    if (std::any_of(t.exponent.begin(), t.exponent.end(), [](long e) { return e < 0; })) {
      throw Error("negative exponent in " + tnp::to_string(to_vec(t.exponent)));
    }
    if (std::all_of(t.exponent.begin(), t.exponent.end(), [](long e) { return e == 0; })) {
      throw ConstantTermError("constant term in a tropical polynomial: every support point must differ from the "
                              "origin, otherwise the origin cannot be told apart from the adjoined level");
    }
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (std::size_t k = 1; k < terms_.size(); ++k) {
    if (terms_[k].exponent == terms_[k - 1].exponent) {
      throw Error("repeated exponent " + tnp::to_string(to_vec(terms_[k].exponent)));
    }
  }
}

std::vector<LatticePoint> TropicalPolynomial::support() const {
  std::vector<LatticePoint> out;
  for (const auto& t : terms_) out.push_back(t.exponent);
  return out;
}

std::string TropicalPolynomial::to_string() const {
  static const char* names[] = {"a", "b", "c", "d"};
  std::string s = "max(";
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) s += ", ";
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      long e = terms_[k].exponent[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "+";
      if (e != 1) mono += std::to_string(e);
      mono += n_ <= 4 ? std::string(names[i]) : "x" + std::to_string(i + 1);
    }
    const Rat& c = terms_[k].coefficient;
    if (c != 0) s += tnp::to_string(c) + "+";
    s += mono;
  }
  return s + ")";
}

TropicalMap::TropicalMap(std::vector<TropicalPolynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error("tropical map needs at least one component");
  for (const auto& f : components_) {
    if (f.num_vars() != components_.size()) {
      throw DimensionMismatch("map with " + std::to_string(components_.size()) + " components has a polynomial in " +
                              std::to_string(f.num_vars()) + " variables");
    }
  }
}

Evaluation eval_with_argmax(const TropicalPolynomial& f, const Vec& x) {
  if (x.size() != f.num_vars()) throw DimensionMismatch("evaluation point has wrong length");
  Evaluation out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rat v = t.coefficient;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (t.exponent[i] != 0) v += x[i] * t.exponent[i];
    }
    if (first || v > out.value) {
      out.value = std::move(v);
      out.argmax.assign(1, t.exponent);
      first = false;
    } else if (v == out.value) {
      out.argmax.push_back(t.exponent);
    }
  }
  return out;
}

bool in_corner_locus(const TropicalPolynomial& f, const Vec& x) { return eval_with_argmax(f, x).argmax.size() >= 2; }

bool in_virtual_preimage(const TropicalPolynomial& f, const ExtRat& level, const Vec& x) {
  auto e = eval_with_argmax(f, x);
  if (level.is_neg_inf() || level.value() < e.value) return e.argmax.size() >= 2;
  return level.value() == e.value;
}

std::optional<TropicalPolynomial> restrict(const TropicalPolynomial& f, const Polyhedron& face) {
  const std::size_t n = f.num_vars();
  if (face.ambient_dim() != n) throw DimensionMismatch("face lives in the wrong dimension");
  std::vector<Vec> points{zero_vec(n)};
  for (const auto& t : f.terms()) points.push_back(to_vec(t.exponent));
  const Polyhedron hull = convex_hull(points);
  const auto faces = enumerate_faces(hull);
  if (std::none_of(faces.begin(), faces.end(), [&](const PolyhedronFace& pf) { return pf.face == face; })) {
    throw Error("restriction target " + face.describe() + " is not a face of the Newton polytope");
  }
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (face.contains(to_vec(t.exponent))) kept.push_back(t);
  }
  if (kept.empty()) return std::nullopt;
  return TropicalPolynomial(n, std::move(kept));
}

}  // namespace tnp
