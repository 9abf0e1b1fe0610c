#include "hyppants/svg.hpp"

#include <cmath>
#include <cstdio>

namespace hyppants {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kCentre = kCanvas / 2.0;
constexpr double kScale = kCanvas / 2.0 - 20.0;

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

PlanePoint boundary_point(const PolygonEmbedding& e, int p) {
  return p % 2 == 0 ? e.corner(p / 2 + 1) : e.midpoint((p - 1) / 2 + 1);
}

}  // namespace

std::string geodesic_path(const PlanePoint& p, const PlanePoint& q, double c, double scale) {
  auto X = [&](const PlanePoint& z) { return num(c + scale * z.x); };
  auto Y = [&](const PlanePoint& z) { return num(c - scale * z.y); };
  std::string d = "M " + X(p) + " " + Y(p) + " ";
  // Circle orthogonal to the unit circle through p and q: centre m with
  // m.p = (|p|^2 + 1)/2 and m.q = (|q|^2 + 1)/2.
  const double det = p.x * q.y - p.y * q.x;
  if (std::abs(det) < 1e-12) return d + "L " + X(q) + " " + Y(q);
  const double bp = (p.x * p.x + p.y * p.y + 1.0) / 2.0;
  const double bq = (q.x * q.x + q.y * q.y + 1.0) / 2.0;
  const double mx = (bp * q.y - bq * p.y) / det;
  const double my = (p.x * bq - q.x * bp) / det;
  const double r = std::sqrt(mx * mx + my * my - 1.0);
  const double cross = (p.x - mx) * (q.y - my) - (p.y - my) * (q.x - mx);
  // The y axis flips on screen, so a counter-clockwise arc gets sweep 1.
  return d + "A " + num(scale * r) + " " + num(scale * r) + " 0 0 " + (cross > 0 ? "1" : "0") + " " + X(q) + " " +
         Y(q);
}

std::string polygon_svg(const CurveSystem& cs, const std::vector<CurveSpec>& curves) {
  const Polygon& p = cs.polygon();
  const PolygonEmbedding& e = cs.embedding();
  std::string s =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
      num(kCanvas) + "\" height=\"" + num(kCanvas) + "\" viewBox=\"0 0 " + num(kCanvas) + " " + num(kCanvas) +
      "\">\n";
  s += "<title>" + to_string(p.source) + "</title>\n";
  s += "<circle cx=\"" + num(kCentre) + "\" cy=\"" + num(kCentre) + "\" r=\"" + num(kScale) +
       "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  s += "<g id=\"edges\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
  for (int a = 1; a <= p.k; ++a)
    s += "<path d=\"" + geodesic_path(e.corner(a), e.corner(a == p.k ? 1 : a + 1), kCentre, kScale) + "\"/>\n";
  s += "</g>\n<g id=\"curves\" fill=\"none\" stroke-width=\"2\">\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    s += "<g stroke=\"" + std::string(kPalette[c % std::size(kPalette)]) + "\"><title>" + curves[c].name() +
         "</title>\n";
    for (const auto& step : curves[c].walk) {
      const auto a = boundary_point(e, cs.complex().start(step));
      const auto b = boundary_point(e, cs.complex().end(step));
      s += "<path d=\"" + geodesic_path(a, b, kCentre, kScale) + "\"/>\n";
    }
    s += "</g>\n";
  }
  s += "</g>\n<g id=\"corners\">\n";
  const auto orbits = vertex_orbits(p);
  for (int v = 1; v <= p.k; ++v) {
    const auto& z = e.corner(v);
    s += "<circle cx=\"" + num(kCentre + kScale * z.x) + "\" cy=\"" + num(kCentre - kScale * z.y) +
         "\" r=\"4\" fill=\"" + kPalette[orbits.class_of[v - 1] % std::size(kPalette)] + "\"/>\n";
  }
  s += "</g>\n<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (int a = 1; a <= p.k; ++a) {
    const auto& m = e.midpoint(a);
    const double len = std::hypot(m.x, m.y);
    const double push = len > 0 ? (len + 0.06) / len : 1.0;
    s += "<text x=\"" + num(kCentre + kScale * m.x * push) + "\" y=\"" + num(kCentre - kScale * m.y * push + 4) +
         "\">a" + std::to_string(a) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace hyppants
