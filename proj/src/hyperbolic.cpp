#include "hyppants/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyppants/error.hpp"

namespace hyppants {

namespace {

constexpr double kPi = std::numbers::pi;

using cplx = std::complex<double>;

// Mobius isometry of the disk sending a to 0.
cplx to_origin(cplx a, cplx z) { return (z - a) / (1.0 - std::conj(a) * z); }
cplx from_origin(cplx a, cplx w) { return (w + a) / (1.0 + std::conj(a) * w); }

double safe_acosh(double x) { return std::acosh(std::max(1.0, x)); }

}  // namespace

RadialLengths radial_lengths(int n, int n1, int n2) {
  if (n < 2 || n1 < 2 || n2 < 2 || static_cast<long long>(n1) * n2 + static_cast<long long>(n) * n2 +
                                            static_cast<long long>(n) * n1 >=
                                        static_cast<long long>(n) * n1 * n2)
    throw invalid_input("NotHyperbolic", "1/n + 1/n1 + 1/n2 must be < 1");
  const double a = kPi / n, a1 = kPi / n1, a2 = kPi / n2;
  RadialLengths r;
  r.L1 = safe_acosh((std::cos(a1) * std::cos(a) + std::cos(a2)) / (std::sin(a1) * std::sin(a)));
  r.L2 = safe_acosh((std::cos(a2) * std::cos(a) + std::cos(a1)) / (std::sin(a2) * std::sin(a)));
  return r;
}

double geodesic_dist(const PlanePoint& p, const PlanePoint& q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  const double num = 2.0 * (dx * dx + dy * dy);
  const double den = (1.0 - (p.x * p.x + p.y * p.y)) * (1.0 - (q.x * q.x + q.y * q.y));
  return safe_acosh(1.0 + num / den);
}

PlanePoint hyperbolic_midpoint(const PlanePoint& p, const PlanePoint& q) {
  const cplx a = p.z();
  const cplx w = to_origin(a, q.z());
  const double rw = std::abs(w);
  if (rw == 0.0) return p;
  const double d = 2.0 * std::atanh(rw);
  const cplx m = w / rw * std::tanh(d / 4.0);
  return PlanePoint::from(from_origin(a, m));
}

double geodesic_angle(const PlanePoint& apex, const PlanePoint& a, const PlanePoint& b) {
  // Geodesics through 0 are diameters, so directions are Euclidean there.
  const cplx wa = to_origin(apex.z(), a.z());
  const cplx wb = to_origin(apex.z(), b.z());
  double ang = std::abs(std::arg(wa) - std::arg(wb));
  if (ang > kPi) ang = 2.0 * kPi - ang;
  return ang;
}

double PolygonEmbedding::edge_length(int e) const {
  return geodesic_dist(corner(e), corner(e == k ? 1 : e + 1));
}

double PolygonEmbedding::corner_angle(int c) const {
  const int prev = c == 1 ? k : c - 1;
  const int next = c == k ? 1 : c + 1;
  return geodesic_angle(corner(c), corner(prev), corner(next));
}

PolygonEmbedding embed(const Polygon& p) {
  PolygonEmbedding e;
  e.k = p.k;
  e.radial = radial_lengths(p.n, p.n1, p.n2);
  e.corners.resize(p.k);
  for (int c = 1; c <= p.k; ++c) {
    const double L = (!p.doubled() || c % 2 == 1) ? e.radial.L2 : e.radial.L1;
    const double phi = 2.0 * kPi * (c - 1) / p.k;
    e.corners[c - 1] = PlanePoint::from(std::polar(disk_radius(L), phi));
  }
  e.midpoints.resize(p.k);
  for (int a = 1; a <= p.k; ++a) e.midpoints[a - 1] = hyperbolic_midpoint(e.corner(a), e.corner(a == p.k ? 1 : a + 1));
  return e;
}

EmbeddingCertificate certify(const Polygon& p, const PolygonEmbedding& e, double tol) {
  EmbeddingCertificate c;
  double mean = 0.0;
  for (int a = 1; a <= p.k; ++a) mean += e.edge_length(a) / p.k;
  for (int a = 1; a <= p.k; ++a) c.edge_spread = std::max(c.edge_spread, std::abs(e.edge_length(a) - mean));
  for (int v = 1; v <= p.k; ++v)
    c.corner_error = std::max(c.corner_error, std::abs(e.corner_angle(v) - p.corner_angles[v - 1].radians()));
  for (const auto& orbit : vertex_orbits(p).classes) {
    double sum = 0.0;
    for (int v : orbit) sum += e.corner_angle(v);
    c.orbit_sum_error = std::max(c.orbit_sum_error, std::abs(sum - 2.0 * kPi));
  }
  c.ok = c.edge_spread <= tol && c.corner_error <= tol && c.orbit_sum_error <= tol;
  return c;
}

std::string to_string(SignPolicy s) {
  switch (s) {
    case SignPolicy::Auto: return "auto";
    case SignPolicy::Plus: return "plus";
    case SignPolicy::Minus: return "minus";
  }
  return "?";
}

std::string to_string(ApexConvention a) {
  switch (a) {
    case ApexConvention::HalfStep: return "i*pi/n";
    case ApexConvention::CornerSpan: return "(2i-1)*2pi/k";
    case ApexConvention::ChordSpan: return "2i*2pi/k";
  }
  return "?";
}

std::string to_string(RadiusConvention r) {
  switch (r) {
    case RadiusConvention::IndexParity: return "L2 for odd i, L1 for even i";
    case RadiusConvention::EndpointCorner: return "radius of corner i+1";
  }
  return "?";
}

std::string to_string(const ClosedFormConvention& c) {
  return "sign=" + to_string(c.sign) + "; apex=" + to_string(c.apex) + "; radius=" + to_string(c.radius);
}

SignPolicy parse_sign_policy(const std::string& s) {
  if (s == "auto") return SignPolicy::Auto;
  if (s == "plus") return SignPolicy::Plus;
  if (s == "minus") return SignPolicy::Minus;
  throw invalid_input("Config", "sign policy must be auto, plus or minus");
}

double chord_length_from_apex(double radius, double apex, int sign) {
  const double ch = std::cosh(radius), sh = std::sinh(radius);
  return safe_acosh(ch * ch + sign * sh * sh * std::cos(apex));
}

double curve_length_closed(const Polygon& p, const RadialLengths& radial, int i, const ClosedFormConvention& c) {
  double apex = 0.0;
  switch (c.apex) {
    case ApexConvention::HalfStep: apex = i * kPi / p.n; break;
    case ApexConvention::CornerSpan: apex = (2.0 * i - 1.0) * 2.0 * kPi / p.k; break;
    case ApexConvention::ChordSpan: apex = 2.0 * i * 2.0 * kPi / p.k; break;
  }
  double L = 0.0;
  if (c.radius == RadiusConvention::IndexParity) {
    L = i % 2 == 1 ? radial.L2 : radial.L1;
  } else {
    const int corner = i + 1;
    L = (!p.doubled() || corner % 2 == 1) ? radial.L2 : radial.L1;
  }
  return chord_length_from_apex(L, apex, c.sign == SignPolicy::Plus ? 1 : -1);
}

double chord_length_oracle(const PolygonEmbedding& e, int corner_a, int corner_b) {
  return geodesic_dist(e.corner(corner_a), e.corner(corner_b));
}

double gamma_length_oracle(const PolygonEmbedding& e, int i) {
  return chord_length_oracle(e, i + 1, e.k + 1 - i);
}

double gamma_tilde_length_oracle(const PolygonEmbedding& e, int i) {
  return geodesic_dist(e.midpoint(i), e.midpoint(e.k + 1 - i));
}

ConventionResolution resolve_convention(const Polygon& p, const PolygonEmbedding& e, SignPolicy policy, double tol) {
  std::vector<SignPolicy> signs;
  if (policy == SignPolicy::Auto) signs = {SignPolicy::Plus, SignPolicy::Minus};
  else signs = {policy};
  const ApexConvention apexes[] = {ApexConvention::HalfStep, ApexConvention::CornerSpan, ApexConvention::ChordSpan};
  const RadiusConvention radii[] = {RadiusConvention::IndexParity, RadiusConvention::EndpointCorner};

  ConventionResolution out;
  for (auto s : signs)
    for (auto a : apexes)
      for (auto r : radii) {
        ClosedFormConvention c{s, a, r};
        double err = 0.0;
        for (int i = 1; i < p.k / 2; ++i)
          err = std::max(err, std::abs(curve_length_closed(p, e.radial, i, c) - gamma_length_oracle(e, i)));
        if (!out.matched && err <= tol) {
          out.chosen = c;
          out.matched = true;
          out.max_error = err;
        } else {
          out.rejected.emplace_back(c, err);
        }
      }
  if (!out.matched && !out.rejected.empty()) {
    auto best = std::min_element(out.rejected.begin(), out.rejected.end(),
                                 [](const auto& x, const auto& y) { return x.second < y.second; });
    out.chosen = best->first;
    out.max_error = best->second;
  }
  return out;
}

double length_bound(int n, int n1, int n2) {
  const auto r = radial_lengths(n, n1, n2);
  // With the minus sign the cosine factor peaks at the diametral apex pi.
  const double A = chord_length_from_apex(r.L2, kPi, -1);
  const double B = chord_length_from_apex(r.L1, kPi, -1);
  return 2.0 * std::max(A, B);
}

double bers_default(int g) {
  if (g < 2) throw invalid_input("Precondition", "Bers constant needs genus >= 2");
  return 6.0 * std::sqrt(3.0 * kPi) * (g - 1);
}

bool is_admissible(const std::vector<double>& lengths, double bers) {
  return std::all_of(lengths.begin(), lengths.end(), [bers](double l) { return l < bers; });
}

}  // namespace hyppants
