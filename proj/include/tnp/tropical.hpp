#pragma once

#include "tnp/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tnp {

/// Exponent vector with nonnegative entries.
using LatticePoint = std::vector<long>;

Vec to_vec(const LatticePoint& a);

/// Raised when a polynomial has a term at the origin.
class ConstantTermError : public Error {
 public:
  using Error::Error;
};

struct Term {
  LatticePoint exponent;
  Rat coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// x -> max_a (<x, a> + coefficient_a), with no constant term.
class TropicalPolynomial {
 public:
  /// Validates the terms and sorts them by exponent.
  TropicalPolynomial(std::size_t n, std::vector<Term> terms);

  std::size_t num_vars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<LatticePoint> support() const;

  /// Human readable form over variables a, b, c, d (x1.. beyond four).
  std::string to_string() const;

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  std::size_t n_;
  std::vector<Term> terms_;
};

/// Square tropical polynomial map R^n -> R^n.
class TropicalMap {
 public:
  explicit TropicalMap(std::vector<TropicalPolynomial> components);

  std::size_t n() const { return components_.size(); }
  const std::vector<TropicalPolynomial>& components() const { return components_; }
  const TropicalPolynomial& operator[](std::size_t i) const { return components_.at(i); }

  friend bool operator==(const TropicalMap&, const TropicalMap&) = default;

 private:
  std::vector<TropicalPolynomial> components_;
};

/// A rational number or minus infinity.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(Rat r) : value_(std::move(r)) {}
  static ExtRat neg_inf() { return ExtRat(); }

  bool is_neg_inf() const { return !value_.has_value(); }
  const Rat& value() const { return value_.value(); }
  std::string to_string() const { return value_ ? tnp::to_string(*value_) : "-inf"; }

  friend bool operator==(const ExtRat&, const ExtRat&) = default;
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.is_neg_inf()) return !b.is_neg_inf();
    if (b.is_neg_inf()) return false;
    return a.value() < b.value();
  }
  friend ExtRat operator+(const ExtRat& a, const Rat& r) {
    return a.is_neg_inf() ? a : ExtRat(a.value() + r);
  }

 private:
  std::optional<Rat> value_;
};

struct Evaluation {
  Rat value;
  /// Maximizing exponents, sorted.
  std::vector<LatticePoint> argmax;
};

Evaluation eval_with_argmax(const TropicalPolynomial& f, const Vec& x);

/// True iff the maximum is attained by at least two terms.
bool in_corner_locus(const TropicalPolynomial& f, const Vec& x);

/// Corner locus membership of max(f, level), the level counting as one extra term.
bool in_virtual_preimage(const TropicalPolynomial& f, const ExtRat& level, const Vec& x);

/// Terms of f whose exponents lie in `face`; nullopt when none do.
/// Throws unless `face` is a face of conv({0} and the support of f).
std::optional<TropicalPolynomial> restrict(const TropicalPolynomial& f, const Polyhedron& face);

}  // namespace tnp
