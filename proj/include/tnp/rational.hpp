#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tnp {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// A point or direction in Q^n.
using Vec = std::vector<Rat>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
Vec add(std::span<const Rat> a, std::span<const Rat> b);
Vec sub(std::span<const Rat> a, std::span<const Rat> b);
Vec scale(std::span<const Rat> a, const Rat& s);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i, const Rat& s = Rat(1));
bool is_zero(std::span<const Rat> a);

/// Positive multiple of `v` with coprime integer entries. Zero maps to zero.
Vec primitive(std::span<const Rat> v);

/// Like `primitive`, but also flips the sign so the first nonzero entry is positive.
Vec primitive_line(std::span<const Rat> v);

/// Scales (normal, offset) jointly to coprime integers with a positive factor.
void primitive_row(Vec& normal, Rat& offset);

std::strong_ordering compare(const Rat& a, const Rat& b);
std::strong_ordering compare(std::span<const Rat> a, std::span<const Rat> b);

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return compare(a, b) < 0; }
};

/// "p" or "p/q".
std::string to_string(const Rat& r);
std::string to_string(std::span<const Rat> v);

/// Parses "p", "-p", "p/q" or a terminating decimal such as "1.25".
Rat parse_rat(std::string_view s);

/// Rank of a list of vectors (all of the same length).
std::size_t rank(std::vector<Vec> rows);

/// Reduced row echelon form; zero rows are dropped.
std::vector<Vec> rref(std::vector<Vec> rows);

/// Basis of {x : <r, x> = 0 for all rows r} in an n-dimensional space.
std::vector<Vec> null_space(const std::vector<Vec>& rows, std::size_t n);

}  // namespace tnp
