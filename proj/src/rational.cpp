#include "tnp/rational.hpp"

#include <algorithm>
#include <sstream>

namespace tnp {

namespace {

void require_same_size(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
}

// Multiplier that turns `v` into a coprime integer vector (positive).
Rat integer_scale(std::span<const Rat> v) {
  Int den_lcm = 1;
  for (const auto& x : v) {
    if (x != 0) den_lcm = boost::multiprecision::lcm(den_lcm, Int(boost::multiprecision::denominator(x)));
  }
  Int num_gcd = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    Int scaled = boost::multiprecision::numerator(Rat(x * den_lcm));
    num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
  }
  if (num_gcd == 0) return Rat(1);
  if (num_gcd < 0) num_gcd = -num_gcd;
  return Rat(den_lcm) / Rat(num_gcd);
}

}  // namespace

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  require_same_size(a, b);
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

Vec add(std::span<const Rat> a, std::span<const Rat> b) {
  require_same_size(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(std::span<const Rat> a, std::span<const Rat> b) {
  require_same_size(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(std::span<const Rat> a, const Rat& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vec(std::size_t n, std::size_t i, const Rat& s) {
  Vec v(n, Rat(0));
  v.at(i) = s;
  return v;
}

bool is_zero(std::span<const Rat> a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Vec primitive(std::span<const Rat> v) { return scale(v, integer_scale(v)); }

Vec primitive_line(std::span<const Rat> v) {
  Vec p = primitive(v);
  auto it = std::find_if(p.begin(), p.end(), [](const Rat& x) { return x != 0; });
  if (it != p.end() && *it < 0) {
    for (auto& x : p) x = -x;
  }
  return p;
}

void primitive_row(Vec& normal, Rat& offset) {
  Vec joint(normal);
  joint.push_back(offset);
  Rat s = integer_scale(joint);
  for (auto& x : normal) x *= s;
  offset *= s;
}

std::strong_ordering compare(const Rat& a, const Rat& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(std::span<const Rat> a, std::span<const Rat> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::string to_string(const Rat& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return r.str();
}

std::string to_string(std::span<const Rat> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

Rat parse_rat(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto to_int = [](std::string_view t) {
    if (!t.empty() && t[0] == '+') t.remove_prefix(1);
    return Int(std::string(t));
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string_view num(s.data(), slash), den(s.data() + slash + 1, s.size() - slash - 1);
    if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational '" + s + "'");
    Int d = to_int(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(to_int(num), d);
  }
  if (auto dot_pos = s.find('.'); dot_pos != std::string::npos) {
    std::string_view whole(s.data(), dot_pos), frac(s.data() + dot_pos + 1, s.size() - dot_pos - 1);
    bool neg = !whole.empty() && whole[0] == '-';
    std::string_view digits = whole;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
    if ((!digits.empty() && !valid_int(digits)) || (!frac.empty() && !valid_int(frac)) ||
        (digits.empty() && frac.empty())) {
      throw ParseError("malformed decimal '" + s + "'");
    }
    Int w = digits.empty() ? Int(0) : to_int(digits);
    Int f = frac.empty() ? Int(0) : to_int(frac);
    Int p = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) p *= 10;
    Rat r = Rat(w) + Rat(f, p);
    return neg ? -r : r;
  }
  if (!valid_int(s)) throw ParseError("malformed rational '" + s + "'");
  return Rat(to_int(s));
}

std::vector<Vec> rref(std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t lead = 0;
  std::size_t r = 0;
  for (; r < rows.size() && lead < cols; ++lead) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][lead] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    Rat inv = 1 / rows[r][lead];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][lead] == 0) continue;
      Rat f = rows[k][lead];
      for (std::size_t c = lead; c < cols; ++c) rows[k][c] -= f * rows[r][c];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t rank(std::vector<Vec> rows) { return rref(std::move(rows)).size(); }

std::vector<Vec> null_space(const std::vector<Vec>& rows, std::size_t n) {
  auto reduced = rref(rows);
  std::vector<std::size_t> pivots;
  for (const auto& row : reduced) {
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c] != 0) {
        pivots.push_back(c);
        break;
      }
    }
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vec v = zero_vec(n);
    v[free] = 1;
    for (std::size_t k = 0; k < reduced.size(); ++k) v[pivots[k]] = -reduced[k][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

}  // namespace tnp
