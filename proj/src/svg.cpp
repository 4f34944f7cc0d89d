#include "tnp/svg.hpp"

#include <cstdio>

namespace tnp {

namespace {

constexpr double kSize = 600.0;
constexpr double kPad = 20.0;

class Canvas {
 public:
  explicit Canvas(const Box& w) : w_(w), box_(Polyhedron::from_vrep(2, corners(w))) {}

  void draw(const Polyhedron& p, const char* style) {
    Polyhedron clipped = intersect(p, box_);
    if (clipped.is_empty()) return;
    const auto& vs = clipped.vertices();
    if (clipped.dim() == 0) {
      auto [x, y] = map(vs.front());
      body_ += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"3\" " + style + "/>\n";
    } else if (clipped.dim() == 1) {
      auto [x1, y1] = map(vs.front());
      auto [x2, y2] = map(vs.back());
      body_ += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" + fmt(y2) + "\" " +
               style + "/>\n";
    }
  }

  std::string finish() const {
    const std::string total = fmt(kSize + 2 * kPad);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           total + "\" height=\"" + total + "\" viewBox=\"0 0 " + total + " " + total +
           "\">\n<rect x=\"0\" y=\"0\" width=\"" + total + "\" height=\"" + total + "\" fill=\"white\"/>\n" + body_ +
           "</svg>\n";
  }

 private:
  static std::vector<Vec> corners(const Box& w) {
    return {{w.lo[0], w.lo[1]}, {w.hi[0], w.lo[1]}, {w.lo[0], w.hi[1]}, {w.hi[0], w.hi[1]}};
  }

  std::pair<double, double> map(const Vec& p) const {
    const double sx = ((p[0] - w_.lo[0]) / (w_.hi[0] - w_.lo[0])).convert_to<double>();
    const double sy = ((p[1] - w_.lo[1]) / (w_.hi[1] - w_.lo[1])).convert_to<double>();
    return {kPad + sx * kSize, kPad + (1.0 - sy) * kSize};
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }

  Box w_;
  Polyhedron box_;
  std::string body_;
};

}  // namespace

std::string plot_svg(const TropicalMap& f, const TNPSet& s, const Box& window, const std::optional<Vec>& level) {
  if (f.n() != 2) throw PlotDimensionError("plotting needs n = 2, got n = " + std::to_string(f.n()));
  if (window.lo.size() != 2 || window.hi.size() != 2 || !(window.lo[0] < window.hi[0]) || !(window.lo[1] < window.hi[1])) {
    throw Error("plot window must be a nondegenerate box in the plane");
  }
  Canvas canvas(window);
  for (const auto& c : decomposition(f).cells) {
    if (c.dim <= 1) canvas.draw(c.closure, "stroke=\"#b0b0b0\" stroke-width=\"1.5\" fill=\"#b0b0b0\"");
  }
  if (level) {
    std::vector<ExtRat> levels{ExtRat((*level)[0]), ExtRat((*level)[1])};
    const CellComplex xi = decomposition(f.components(), levels);
    for (const auto& c : xi.cells) {
      bool at_corner = true;
      for (std::size_t i = 0; i < 2; ++i) {
        if (c.argmax[i].size() + (c.level_attained[i] ? 1 : 0) < 2) at_corner = false;
      }
      if (at_corner && c.dim <= 1) {
        canvas.draw(c.closure, "stroke=\"#1f6fd1\" stroke-width=\"2\" stroke-dasharray=\"6 4\" fill=\"#1f6fd1\"");
      }
    }
  }
  for (const auto& p : s.canonical) canvas.draw(p.polytope, "stroke=\"#8e24aa\" stroke-width=\"3\" fill=\"#8e24aa\"");
  return canvas.finish();
}

}  // namespace tnp
