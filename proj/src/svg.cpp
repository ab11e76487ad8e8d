#include "gabortile/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "gabortile/error.hpp"

namespace gabortile {

namespace {

constexpr double kSize = 480;
constexpr double kMargin = 20;

struct Frame {
  double x0, y0, scale;
  double px(double x) const { return kMargin + (x - x0) * scale; }
  double py(double y) const { return kMargin + kSize - (y - y0) * scale; }
};

Frame fit(double x0, double y0, double x1, double y1) {
  double span = std::max(x1 - x0, y1 - y0);
  if (span <= 0) span = 1;
  return {x0, y0, kSize / span};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string header(const std::string& title) {
  const std::string side = num(kSize + 2 * kMargin);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + side + "\" height=\"" + side +
         "\">\n<title>" + title + "</title>\n";
}

std::string points(const Frame& f, const std::vector<RatVec>& vs) {
  std::string out;
  for (const auto& v : vs) out += num(f.px(v[0].get_d())) + "," + num(f.py(v[1].get_d())) + " ";
  if (!out.empty()) out.pop_back();
  return out;
}

// Evenly spaced hues.
std::string colour(std::size_t i, std::size_t n) {
  const int hue = static_cast<int>(360.0 * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1)));
  return "hsl(" + std::to_string(hue) + ",65%,60%)";
}

}  // namespace

std::string svg_parts(const std::vector<BoxSet>& parts, const std::string& title) {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool first = true;
  for (const auto& p : parts) {
    if (p.dim() != 2) throw Error(ErrorKind::DimMismatch, "only planar sets can be drawn");
    for (const auto& b : p.boxes()) {
      double bx0 = b.lo[0].get_d(), by0 = b.lo[1].get_d(), bx1 = b.hi[0].get_d(), by1 = b.hi[1].get_d();
      if (first || bx0 < x0) x0 = bx0;
      if (first || by0 < y0) y0 = by0;
      if (first || bx1 > x1) x1 = bx1;
      if (first || by1 > y1) y1 = by1;
      first = false;
    }
  }
  const Frame f = fit(x0, y0, x1, y1);
  std::ostringstream out;
  out << header(title);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& b : parts[i].boxes()) {
      std::vector<RatVec> corners{{b.lo[0], b.lo[1]}, {b.hi[0], b.lo[1]}, {b.hi[0], b.hi[1]}, {b.lo[0], b.hi[1]}};
      out << "<polygon points=\"" << points(f, corners) << "\" fill=\"" << colour(i, parts.size())
          << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

std::string svg_arrangement(const ConvexPolygon& p, const ArrangementResult& r, const std::string& title) {
  auto [lo, hi] = p.bounds();
  double x0 = lo[0].get_d(), y0 = lo[1].get_d(), x1 = hi[0].get_d(), y1 = hi[1].get_d();
  long mmin = 0, mmax = 0;
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    for (const auto& v : r.cells[i].outline) {
      x0 = std::min(x0, v[0].get_d());
      y0 = std::min(y0, v[1].get_d());
      x1 = std::max(x1, v[0].get_d());
      y1 = std::max(y1, v[1].get_d());
    }
    if (i == 0 || r.cells[i].multiplicity < mmin) mmin = r.cells[i].multiplicity;
    if (i == 0 || r.cells[i].multiplicity > mmax) mmax = r.cells[i].multiplicity;
  }
  const Frame f = fit(x0, y0, x1, y1);
  std::ostringstream out;
  out << header(title);
  for (const auto& c : r.cells) {
    // Light for low multiplicity, dark red for high.
    const double t = mmax > mmin ? static_cast<double>(c.multiplicity - mmin) / static_cast<double>(mmax - mmin) : 0.5;
    const int light = static_cast<int>(85 - 50 * t);
    out << "<polygon points=\"" << points(f, c.outline) << "\" fill=\"hsl(10,70%," << light
        << "%)\" stroke=\"grey\" stroke-width=\"0.2\"><title>" << c.multiplicity << "</title></polygon>\n";
  }
  out << "<polygon points=\"" << points(f, p.vertices()) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace gabortile
