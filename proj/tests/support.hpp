#pragma once

#include "tnp/io.hpp"
#include "tnp/subdivision.hpp"
#include "tnp/tropical.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace tnp::testing {

inline std::string fixture(const std::string& name) { return std::string(TNP_FIXTURES) + "/" + name; }

inline TropicalMap load_map(const std::string& name) { return read_input_file(fixture(name)).map; }

inline Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline TropicalPolynomial poly(std::size_t n, std::initializer_list<std::pair<LatticePoint, long>> terms) {
  std::vector<Term> ts;
  for (const auto& [a, c] : terms) ts.push_back(Term{a, Rat(c)});
  return TropicalPolynomial(n, std::move(ts));
}

/// Closures of the codimension-one cells of a single polynomial's decomposition.
inline std::vector<Polyhedron> corner_locus(const TropicalPolynomial& g) {
  const std::size_t n = g.num_vars();
  const CellComplex c = decomposition({g}, {ExtRat::neg_inf()});
  std::vector<Polyhedron> out;
  for (const auto& cell : c.cells) {
    if (cell.dim == static_cast<int>(n) - 1) out.push_back(cell.closure);
  }
  return out;
}

/// Random square map in two variables: 1..max_terms terms per polynomial,
/// exponents in [0, max_exp]^2 without the origin, integer coefficients in [lo, hi].
inline TropicalMap random_map(std::mt19937_64& rng, std::size_t max_terms = 5, long max_exp = 3, long lo = -9,
                              long hi = 9) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<long> exp(0, max_exp);
  std::uniform_int_distribution<long> coef(lo, hi);
  std::vector<TropicalPolynomial> comps;
  for (int i = 0; i < 2; ++i) {
    const std::size_t k = count(rng);
    std::set<LatticePoint> seen;
    std::vector<Term> terms;
    while (terms.size() < k) {
      LatticePoint a{exp(rng), exp(rng)};
      if (a == LatticePoint{0, 0} || !seen.insert(a).second) continue;
      terms.push_back(Term{a, Rat(coef(rng))});
    }
    comps.emplace_back(2, std::move(terms));
  }
  return TropicalMap(std::move(comps));
}

}  // namespace tnp::testing
