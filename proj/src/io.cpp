#include "tnp/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace tnp {

namespace {

struct Complex {
  Rat re = 0;
  Rat im = 0;
};

class SeriesParser {
 public:
  SeriesParser(std::string_view text, std::vector<std::string>& notices) : s_(text), notices_(notices) {}

  Rat valuation() {
    std::map<Rat, Complex> by_exponent;
    skip();
    if (pos_ == s_.size()) fail("empty series");
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (get() == '-') sign = -1;
        skip();
      } else if (!first_) {
        fail("expected '+' or '-'");
      }
      first_ = false;
      Complex c = coefficient();
      if (sign < 0) {
        c.re = -c.re;
        c.im = -c.im;
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      }
      Rat exponent = 0;
      if (peek() == 't') {
        ++pos_;
        exponent = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          exponent = power();
        }
      } else if (!had_number_) {
        fail("term without coefficient or t");
      }
      Complex& acc = by_exponent[exponent];
      acc.re += c.re;
      acc.im += c.im;
      skip();
    }
    for (const auto& [r, c] : by_exponent) {
      if (c.im != 0) {
        notices_.push_back("imaginary part of the t^" + to_string(r) + " coefficient in '" + std::string(s_) +
                           "' discarded");
      }
    }
    for (const auto& [r, c] : by_exponent) {
      if (c.re != 0 || c.im != 0) return -r;
    }
    fail("series is identically zero");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse series '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string number_token() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' || s_[pos_] == '/')) {
      ++pos_;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  Complex coefficient() {
    had_number_ = false;
    Complex c{Rat(1), Rat(0)};
    if (peek() == '(') {
      ++pos_;
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      c = complex_literal(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      had_number_ = true;
      return c;
    }
    std::string tok = number_token();
    if (!tok.empty()) {
      c.re = parse_rat(tok);
      had_number_ = true;
    }
    if (peek() == 'i') {
      ++pos_;
      c = Complex{Rat(0), c.re};
      had_number_ = true;
    }
    return c;
  }

  Complex complex_literal(std::string_view body) {
    Complex c;
    std::size_t k = 0;
    auto skip_ws = [&] {
      while (k < body.size() && std::isspace(static_cast<unsigned char>(body[k]))) ++k;
    };
    skip_ws();
    if (k == body.size()) fail("empty parenthesized coefficient");
    while (k < body.size()) {
      int sign = 1;
      if (body[k] == '+' || body[k] == '-') {
        sign = body[k] == '-' ? -1 : 1;
        ++k;
        skip_ws();
      }
      const std::size_t start = k;
      while (k < body.size() && (std::isdigit(static_cast<unsigned char>(body[k])) || body[k] == '.' || body[k] == '/')) ++k;
      Rat value = k > start ? parse_rat(body.substr(start, k - start)) : Rat(1);
      skip_ws();
      if (k < body.size() && body[k] == '*') {
        ++k;
        skip_ws();
      }
      if (k < body.size() && body[k] == 'i') {
        ++k;
        c.im += sign * value;
      } else {
        if (k == start) fail("malformed complex coefficient");
        c.re += sign * value;
      }
      skip_ws();
    }
    return c;
  }

  Rat power() {
    if (peek() == '{' || peek() == '(') {
      const char close_ch = peek() == '{' ? '}' : ')';
      ++pos_;
      const std::size_t close = s_.find(close_ch, pos_);
      if (close == std::string_view::npos) fail("unbalanced exponent group");
      Rat r = parse_rat(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return r;
    }
    std::string tok;
    if (peek() == '-' || peek() == '+') tok.push_back(get());
    tok += number_token();
    if (tok.empty() || tok == "-" || tok == "+") fail("missing exponent");
    return parse_rat(tok);
  }

  std::string_view s_;
  std::vector<std::string>& notices_;
  std::size_t pos_ = 0;
  bool first_ = true;
  bool had_number_ = false;
};

Json rat_json(const Rat& r) { return to_string(r); }

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

Json vecs_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

Rat rat_from(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Vec vec_from(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  Vec v;
  for (const auto& x : j) v.push_back(rat_from(x));
  return v;
}

std::vector<Vec> vecs_from(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<Vec> out;
  for (const auto& x : j) out.push_back(vec_from(x));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string assembly_name(Assembly a) { return a == Assembly::Product ? "product" : "staircase"; }

}  // namespace

Rat series_valuation(std::string_view text, std::vector<std::string>& notices) {
  return SeriesParser(text, notices).valuation();
}

InputSpec parse_input(const Json& j) {
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  const Json& jn = field(j, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) throw ParseError("'n' must be a positive integer");
  const auto n = static_cast<std::size_t>(jn.get<long long>());
  const Json& maps = field(j, "maps");
  if (!maps.is_array() || maps.size() != n) throw ParseError("'maps' must list exactly n polynomials");
  std::vector<std::string> notices;
  std::vector<TropicalPolynomial> comps;
  for (const auto& poly : maps) {
    if (!poly.is_array() || poly.empty()) throw ParseError("each polynomial must be a nonempty list of terms");
    std::vector<Term> terms;
    for (const auto& t : poly) {
      const Json& exp = field(t, "exp");
      if (!exp.is_array() || exp.size() != n) throw ParseError("exponent " + exp.dump() + " must have n entries");
      LatticePoint a;
      for (const auto& e : exp) {
        if (!e.is_number_integer() || e.get<long long>() < 0) {
          throw ParseError("exponent entries must be nonnegative integers: " + exp.dump());
        }
        a.push_back(static_cast<long>(e.get<long long>()));
      }
      Rat coef;
      if (t.contains("val") && t.contains("series")) throw ParseError("term has both 'val' and 'series'");
      if (t.contains("val")) coef = rat_from(t.at("val"));
      else if (t.contains("series")) coef = series_valuation(t.at("series").get<std::string>(), notices);
      else throw ParseError("term " + t.dump() + " needs 'val' or 'series'");
      terms.push_back(Term{std::move(a), std::move(coef)});
    }
    try {
      comps.emplace_back(n, std::move(terms));
    } catch (const ConstantTermError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  return InputSpec{TropicalMap(std::move(comps)), std::move(notices), j.value("options", Json::object())};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

InputSpec read_input_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(j);
}

Json map_to_json(const TropicalMap& f) {
  Json maps = Json::array();
  for (const auto& c : f.components()) {
    Json terms = Json::array();
    for (const auto& t : c.terms()) terms.push_back(Json{{"exp", t.exponent}, {"val", to_string(t.coefficient)}});
    maps.push_back(std::move(terms));
  }
  return Json{{"n", f.n()}, {"maps", std::move(maps)}};
}

Json polyhedron_to_json(const Polyhedron& p) {
  Json ineq = Json::array(), eq = Json::array();
  for (const auto& h : p.inequalities()) ineq.push_back(Json{{"normal", vec_json(h.normal)}, {"offset", rat_json(h.offset)}});
  for (const auto& e : p.equalities()) eq.push_back(Json{{"normal", vec_json(e.normal)}, {"offset", rat_json(e.offset)}});
  return Json{{"ambient", p.ambient_dim()},
              {"dim", p.dim()},
              {"inequalities", std::move(ineq)},
              {"equalities", std::move(eq)},
              {"vertices", vecs_json(p.vertices())},
              {"rays", vecs_json(p.rays())},
              {"lineality", vecs_json(p.lineality())}};
}

Polyhedron polyhedron_from_json(const Json& j) {
  const auto ambient = field(j, "ambient").get<std::size_t>();
  std::vector<HalfSpace> ineq;
  std::vector<Hyperplane> eq;
  for (const auto& h : field(j, "inequalities")) ineq.push_back(HalfSpace{vec_from(field(h, "normal")), rat_from(field(h, "offset"))});
  for (const auto& e : field(j, "equalities")) eq.push_back(Hyperplane{vec_from(field(e, "normal")), rat_from(field(e, "offset"))});
  Polyhedron p = Polyhedron::from_hrep(ambient, std::move(ineq), std::move(eq));
  if (p.dim() != field(j, "dim").get<int>() || p.vertices() != vecs_from(field(j, "vertices")) ||
      p.rays() != vecs_from(field(j, "rays")) || p.lineality() != vecs_from(field(j, "lineality"))) {
    throw ParseError("stored generators disagree with the stored inequalities");
  }
  return p;
}

OutputDoc make_output(const TropicalMap& f, const TNPSet& s, const std::vector<TupleFace>& faces,
                      const GenericityReport& genericity, Assembly assembly) {
  OutputDoc d;
  d.n = f.n();
  d.assembly = assembly_name(assembly);
  d.input = map_to_json(f);
  for (const auto& p : s.canonical) d.pieces.push_back(PieceRecord{p.polytope, p.gamma, p.witness, p.cell, p.cell_label});
  d.raw_pieces = s.pieces.size();
  for (const auto& g : faces) {
    FaceRecord r{g.id, g.witness, {}, g.flags};
    for (const auto& m : g.members) r.member_vertices.push_back(m.vertices());
    d.faces.push_back(std::move(r));
  }
  d.genericity = genericity;
  return d;
}

FanRecord fan_record(const RecoveredFan& fan) {
  return FanRecord{fan.face_vector, fan.facet_normals, fan.lineality, fan.complete, fan.diagnostic};
}

Json to_json(const OutputDoc& doc) {
  Json pieces = Json::array();
  for (const auto& p : doc.pieces) {
    pieces.push_back(Json{{"polytope", polyhedron_to_json(p.polytope)},
                          {"provenance", Json{{"face", p.face}, {"witness", vec_json(p.witness)}, {"cell", p.cell},
                                              {"cell_label", p.cell_label}}}});
  }
  Json faces = Json::array();
  for (const auto& f : doc.faces) {
    Json members = Json::array();
    for (const auto& m : f.member_vertices) members.push_back(vecs_json(m));
    Json bmcd = Json::array();
    for (std::size_t i : f.flags.bmcd) bmcd.push_back(i + 1);
    faces.push_back(Json{{"id", f.id},
                         {"witness", vec_json(f.witness)},
                         {"members", std::move(members)},
                         {"dicritical", f.flags.dicritical},
                         {"origin", f.flags.origin},
                         {"pre_origin", f.flags.pre_origin},
                         {"strictly_pre_origin", f.flags.strictly_pre_origin},
                         {"origin_members", std::move(bmcd)}});
  }
  Json j{{"schema", kSchema},
         {"n", doc.n},
         {"assembly", doc.assembly},
         {"input", doc.input},
         {"pieces", std::move(pieces)},
         {"raw_pieces", doc.raw_pieces},
         {"faces", std::move(faces)},
         {"transversality", Json{{"generic", doc.genericity.generic}, {"violations", doc.genericity.violations}}}};
  if (doc.fan) {
    j["fan"] = Json{{"face_vector", doc.fan->face_vector},
                    {"facet_normals", vecs_json(doc.fan->facet_normals)},
                    {"lineality", vecs_json(doc.fan->lineality)},
                    {"complete", doc.fan->complete},
                    {"diagnostic", doc.fan->diagnostic},
                    {"note", "normal fan only: edge lengths need multiplicities, which are not computed"}};
  }
  if (doc.oracle) {
    j["oracle"] = Json{{"points", doc.oracle->points},
                       {"members", doc.oracle->members},
                       {"mismatches", doc.oracle->mismatches},
                       {"boundary_points", doc.oracle->boundary_points},
                       {"boundary_disagreements", doc.oracle->boundary_disagreements}};
  }
  return j;
}

OutputDoc output_from_json(const Json& j) {
  if (field(j, "schema") != kSchema) throw ParseError("unsupported schema " + field(j, "schema").dump());
  OutputDoc d;
  d.n = field(j, "n").get<std::size_t>();
  d.assembly = field(j, "assembly").get<std::string>();
  d.input = field(j, "input");
  for (const auto& p : field(j, "pieces")) {
    const Json& prov = field(p, "provenance");
    d.pieces.push_back(PieceRecord{polyhedron_from_json(field(p, "polytope")), field(prov, "face").get<std::size_t>(),
                                   vec_from(field(prov, "witness")), field(prov, "cell").get<std::size_t>(),
                                   field(prov, "cell_label").get<std::string>()});
  }
  d.raw_pieces = field(j, "raw_pieces").get<std::size_t>();
  for (const auto& f : field(j, "faces")) {
    FaceRecord r;
    r.id = field(f, "id").get<std::size_t>();
    r.witness = vec_from(field(f, "witness"));
    for (const auto& m : field(f, "members")) r.member_vertices.push_back(vecs_from(m));
    r.flags.dicritical = field(f, "dicritical").get<bool>();
    r.flags.origin = field(f, "origin").get<bool>();
    r.flags.pre_origin = field(f, "pre_origin").get<bool>();
    r.flags.strictly_pre_origin = field(f, "strictly_pre_origin").get<bool>();
    for (const auto& i : field(f, "origin_members")) r.flags.bmcd.push_back(i.get<std::size_t>() - 1);
    d.faces.push_back(std::move(r));
  }
  const Json& t = field(j, "transversality");
  d.genericity.generic = field(t, "generic").get<bool>();
  d.genericity.violations = field(t, "violations").get<std::vector<std::string>>();
  if (j.contains("fan")) {
    const Json& f = j.at("fan");
    d.fan = FanRecord{field(f, "face_vector").get<std::vector<std::size_t>>(), vecs_from(field(f, "facet_normals")),
                      vecs_from(field(f, "lineality")), field(f, "complete").get<bool>(),
                      field(f, "diagnostic").get<std::string>()};
  }
  if (j.contains("oracle")) {
    const Json& o = j.at("oracle");
    d.oracle = OracleRecord{field(o, "points").get<std::size_t>(), field(o, "members").get<std::size_t>(),
                            field(o, "mismatches").get<std::size_t>(), field(o, "boundary_points").get<std::size_t>(),
                            field(o, "boundary_disagreements").get<std::size_t>()};
  }
  return d;
}

std::vector<Polyhedron> pieces_of(const OutputDoc& doc) {
  std::vector<Polyhedron> out;
  for (const auto& p : doc.pieces) out.push_back(p.polytope);
  return out;
}

}  // namespace tnp
