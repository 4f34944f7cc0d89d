#include "tnp/engine.hpp"
#include "tnp/faces.hpp"
#include "tnp/io.hpp"
#include "tnp/newton.hpp"
#include "tnp/oracle.hpp"
#include "tnp/svg.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace tnp;

namespace {

enum Exit { kOk = 0, kParse = 1, kTransversality = 2, kDimCap = 3, kPlotDim = 4 };

Vec parse_vec(const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rat(item));
  if (v.empty()) throw ParseError("empty coordinate list '" + text + "'");
  return v;
}

// "lo,hi" for the same range on every axis, or "lo1,hi1,lo2,hi2,..".
Box parse_box(const std::string& text, std::size_t n) {
  const Vec v = parse_vec(text);
  Box b;
  if (v.size() == 2) {
    b.lo.assign(n, v[0]);
    b.hi.assign(n, v[1]);
  } else if (v.size() == 2 * n) {
    for (std::size_t i = 0; i < n; ++i) {
      b.lo.push_back(v[2 * i]);
      b.hi.push_back(v[2 * i + 1]);
    }
  } else {
    throw ParseError("box needs 2 or 2n numbers, got '" + text + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(b.lo[i] < b.hi[i])) throw ParseError("box bounds out of order in '" + text + "'");
  }
  return b;
}

Json vec_out(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

void emit(const std::string& path, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") std::cout << text;
  else write_text_file(path, text);
}

InputSpec load(const std::string& path) {
  InputSpec in = read_input_file(path);
  for (const auto& n : in.notices) std::cerr << "notice: " << n << "\n";
  return in;
}

void check_cap(const InputSpec& in, std::size_t cap) {
  if (in.map.n() > cap) {
    throw DimensionCapExceeded("n = " + std::to_string(in.map.n()) + " exceeds the dimension cap " +
                               std::to_string(cap));
  }
}

int run_compute(const std::string& input, const std::string& output, bool staircase, std::size_t cap) {
  const InputSpec in = load(input);
  check_cap(in, cap);
  EngineOptions opt;
  opt.assembly = staircase ? Assembly::Staircase : Assembly::Product;
  opt.dim_cap = cap;
  const GenericityReport gen = check_genericity(in.map);
  TNPSet s;
  try {
    s = tnp_set(in.map, opt);
  } catch (const GenericityViolation& e) {
    std::cerr << "transversality violation: " << e.what() << "\n";
    for (const auto& v : gen.violations) std::cerr << "  " << v << "\n";
    return kTransversality;
  }
  OutputDoc doc = make_output(in.map, s, enumerate_tuple_faces(delta0(in.map)), gen, opt.assembly);
  if (!s.canonical.empty()) {
    try {
      doc.fan = fan_record(recover_fan(s));
    } catch (const Error& e) {
      doc.fan = FanRecord{{}, {}, {}, false, e.what()};
    }
  }
  emit(output, to_json(doc));
  if (!gen.generic) {
    std::cerr << "transversality violation in " << gen.violations.size() << " place(s):\n";
    for (const auto& v : gen.violations) std::cerr << "  " << v << "\n";
    return kTransversality;
  }
  return kOk;
}

int run_oracle(const std::string& input, const std::string& point, bool grid, const std::string& box_text,
               std::size_t res, const std::string& against, std::size_t boundary, const std::string& output) {
  const InputSpec in = load(input);
  const std::size_t n = in.map.n();
  if (!point.empty()) {
    const Vec y = parse_vec(point);
    if (y.size() != n) throw ParseError("point needs " + std::to_string(n) + " coordinates");
    const OracleVerdict v = in_tnp(in.map, y);
    Json j{{"point", vec_out(y)}, {"member", v.member}};
    if (v.cell) j["cell"] = *v.cell;
    if (v.ray) j["ray"] = vec_out(*v.ray);
    emit(output, j);
    return kOk;
  }
  if (!grid) throw ParseError("oracle needs --point or --grid");
  TNPSet engine;
  if (!against.empty()) {
    const OutputDoc doc = output_from_json(Json::parse(read_text_file(against)));
    engine.n = doc.n;
    for (const auto& p : doc.pieces) engine.canonical.push_back(Piece{p.polytope, p.face, p.cell, p.witness, p.cell_label});
    engine.pieces = engine.canonical;
  } else {
    engine = tnp_set(in.map);
  }
  const Box box = box_text.empty() ? default_box(engine) : parse_box(box_text, n);
  const GridReport g = grid_compare(in.map, engine, box, res);
  const BoundaryReport b = boundary_compare(in.map, engine, boundary);
  Json mism = Json::array();
  for (const auto& m : g.mismatches) {
    Json e{{"point", vec_out(m.point)}, {"oracle", m.oracle}, {"engine", m.engine}, {"pieces", m.pieces}};
    if (m.witness_ray) e["ray"] = vec_out(*m.witness_ray);
    if (m.witness_cell) e["cell"] = *m.witness_cell;
    mism.push_back(std::move(e));
  }
  Json bd = Json::array();
  for (const auto& p : b.disagreements) bd.push_back(vec_out(p));
  emit(output, Json{{"box", Json{{"lo", vec_out(box.lo)}, {"hi", vec_out(box.hi)}}},
                    {"resolution", res},
                    {"points", g.points},
                    {"members", g.members},
                    {"mismatches", std::move(mism)},
                    {"boundary_points", b.points},
                    {"boundary_disagreements", std::move(bd)}});
  return g.mismatches.empty() && b.disagreements.empty() ? kOk : kTransversality;
}

int run_faces(const std::string& input, const std::string& output) {
  const InputSpec in = load(input);
  OutputDoc doc = make_output(in.map, TNPSet{}, enumerate_tuple_faces(delta0(in.map)), GenericityReport{},
                              Assembly::Product);
  emit(output, to_json(doc).at("faces"));
  return kOk;
}

int run_newton(const std::string& input, const std::string& tnp_file, const std::string& output) {
  std::vector<Polyhedron> pieces;
  if (!tnp_file.empty()) {
    pieces = pieces_of(output_from_json(Json::parse(read_text_file(tnp_file))));
  } else {
    pieces = tnp_set(load(input).map).polytopes();
  }
  const FanRecord r = fan_record(recover_fan(pieces));
  Json normals = Json::array();
  for (const auto& v : r.facet_normals) normals.push_back(vec_out(v));
  Json lin = Json::array();
  for (const auto& v : r.lineality) lin.push_back(vec_out(v));
  emit(output, Json{{"face_vector", r.face_vector},
                    {"facet_normals", std::move(normals)},
                    {"lineality", std::move(lin)},
                    {"complete", r.complete},
                    {"diagnostic", r.diagnostic}});
  return kOk;
}

int run_plot(const std::string& input, const std::string& svg, const std::string& window, const std::string& level) {
  const InputSpec in = load(input);
  if (in.map.n() != 2) throw PlotDimensionError("plotting needs n = 2, got n = " + std::to_string(in.map.n()));
  const TNPSet s = tnp_set(in.map);
  const Box w = window.empty() ? default_box(s) : parse_box(window, 2);
  std::optional<Vec> y;
  if (!level.empty()) {
    y = parse_vec(level);
    if (y->size() != 2) throw ParseError("level needs 2 coordinates");
  }
  const std::string text = plot_svg(in.map, s, w, y);
  if (svg.empty() || svg == "-") std::cout << text;
  else write_text_file(svg, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical non-properness sets of tropical polynomial maps"};
  app.require_subcommand(1);

  std::string input, output, point, box, against, tnp_file, svg, window, level;
  bool staircase = false, grid = false;
  std::size_t cap = 4, res = 33, boundary = 50;

  auto* compute = app.add_subcommand("compute", "Compute the non-properness set");
  compute->add_option("--input,-i", input, "Input JSON")->required();
  compute->add_option("--output,-o", output, "Output JSON (stdout if omitted)");
  compute->add_flag("--staircase", staircase, "Use the staircase assembly");
  compute->add_option("--dim-cap", cap, "Largest accepted n");

  auto* oracle = app.add_subcommand("oracle", "Definition-level membership test");
  oracle->add_option("--input,-i", input, "Input JSON")->required();
  auto* opt_point = oracle->add_option("--point", point, "Comma separated coordinates");
  auto* opt_grid = oracle->add_flag("--grid", grid, "Compare against the engine on a grid");
  opt_point->excludes(opt_grid);
  oracle->add_option("--box", box, "lo,hi or lo1,hi1,..,lon,hin");
  oracle->add_option("--res", res, "Grid points per axis");
  oracle->add_option("--boundary", boundary, "Points sampled on piece boundaries");
  oracle->add_option("--against", against, "Output of compute to compare with");
  oracle->add_option("--output,-o", output, "Report JSON (stdout if omitted)");

  auto* faces = app.add_subcommand("faces", "Classify tuple-faces");
  faces->add_option("--input,-i", input, "Input JSON")->required();
  faces->add_option("--output,-o", output, "Output JSON (stdout if omitted)");

  auto* newton = app.add_subcommand("newton", "Recover the normal fan of the Newton polytope");
  auto* opt_in = newton->add_option("--input,-i", input, "Input JSON");
  auto* opt_tnp = newton->add_option("--tnp", tnp_file, "Output of compute");
  opt_in->excludes(opt_tnp);
  newton->add_option("--output,-o", output, "Output JSON (stdout if omitted)");

  auto* plot = app.add_subcommand("plot", "SVG of the decomposition and the set (n = 2)");
  plot->add_option("--input,-i", input, "Input JSON")->required();
  plot->add_option("--svg", svg, "Output SVG (stdout if omitted)");
  plot->add_option("--window", window, "lo,hi or x0,x1,y0,y1");
  plot->add_option("--level", level, "Overlay the virtual preimage of this point");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return run_compute(input, output, staircase, cap);
    if (*oracle) return run_oracle(input, point, grid, box, res, against, boundary, output);
    if (*faces) return run_faces(input, output);
    if (*newton) {
      if (input.empty() && tnp_file.empty()) throw ParseError("newton needs --input or --tnp");
      return run_newton(input, tnp_file, output);
    }
    if (*plot) return run_plot(input, svg, window, level);
  } catch (const ConstantTermError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDimCap;
  } catch (const PlotDimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPlotDim;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return kOk;
}
