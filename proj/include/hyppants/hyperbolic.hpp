#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hyppants/polygon.hpp"

namespace hyppants {

// Distances from the polygon centre to the two kinds of corners. L1 belongs
// to corners of cone order n1, L2 to corners of cone order n2.
struct RadialLengths {
  double L1 = 0.0;
  double L2 = 0.0;
};

// cosh L1 = (cos(pi/n1) cos(pi/n) + cos(pi/n2)) / (sin(pi/n1) sin(pi/n)),
// L2 symmetric. Throws Error(InvalidInput, "NotHyperbolic") when
// 1/n + 1/n1 + 1/n2 >= 1.
RadialLengths radial_lengths(int n, int n1, int n2);

// Point of the open unit disk (Poincare model).
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  std::complex<double> z() const { return {x, y}; }
  static PlanePoint from(std::complex<double> z) { return {z.real(), z.imag()}; }
};

double geodesic_dist(const PlanePoint& p, const PlanePoint& q);

// Euclidean radius in the disk of a point at hyperbolic distance d from 0.
inline double disk_radius(double d) { return std::tanh(d / 2.0); }

// Point on the geodesic from p to q at equal distance from both.
PlanePoint hyperbolic_midpoint(const PlanePoint& p, const PlanePoint& q);

// Angle at `apex` between the geodesics towards a and b, in [0, pi].
double geodesic_angle(const PlanePoint& apex, const PlanePoint& a, const PlanePoint& b);

// Vertex coordinates: corner c sits at polar angle 2 pi (c-1)/k. In the
// doubled case odd corners are at distance L2 and even corners at L1; for
// k = n every corner is at distance L2 and edge midpoints carry the order-2
// points.
struct PolygonEmbedding {
  int k = 0;
  RadialLengths radial;
  std::vector<PlanePoint> corners;    // corners[c-1]
  std::vector<PlanePoint> midpoints;  // midpoints[e-1] of edge a_e

  const PlanePoint& corner(int c) const { return corners[c - 1]; }
  const PlanePoint& midpoint(int e) const { return midpoints[e - 1]; }
  double edge_length(int e) const;
  double corner_angle(int c) const;
};

PolygonEmbedding embed(const Polygon& p);

// Largest deviations of the embedding from the combinatorial polygon: edge
// lengths from their mean, corner angles from the prescribed ones, and
// vertex-orbit angle sums from 2 pi.
struct EmbeddingCertificate {
  double edge_spread = 0.0;
  double corner_error = 0.0;
  double orbit_sum_error = 0.0;
  bool ok = false;
};

EmbeddingCertificate certify(const Polygon& p, const PolygonEmbedding& e, double tol);

// --- closed-form lengths of the vertex chords gamma_i -----------------------
//
// gamma_i joins the far corner of a_i to the near corner of a_{k+1-i}
// (corners i+1 and k+1-i), so that gamma_i separates R_i from R_{i+1}.
// The closed form cosh l = cosh^2 L (+/-) sinh^2 L cos(apex) has three
// ingredients that are resolved against coordinates.

enum class SignPolicy { Auto, Plus, Minus };
enum class ApexConvention {
  HalfStep,    // i pi / n
  CornerSpan,  // (2i - 1) * 2 pi / k
  ChordSpan,   // 2i * 2 pi / k
};
enum class RadiusConvention {
  IndexParity,     // L2 for odd i, L1 for even i
  EndpointCorner,  // the radius of corner i+1
};

struct ClosedFormConvention {
  SignPolicy sign = SignPolicy::Minus;  // Plus or Minus once resolved
  ApexConvention apex = ApexConvention::ChordSpan;
  RadiusConvention radius = RadiusConvention::EndpointCorner;

  friend bool operator==(const ClosedFormConvention&, const ClosedFormConvention&) = default;
};

std::string to_string(SignPolicy s);
std::string to_string(ApexConvention a);
std::string to_string(RadiusConvention r);
std::string to_string(const ClosedFormConvention& c);
SignPolicy parse_sign_policy(const std::string& s);

// arccosh(cosh^2 L + s sinh^2 L cos(apex)), s = +1 or -1.
double chord_length_from_apex(double radius, double apex, int sign);

double curve_length_closed(const Polygon& p, const RadialLengths& radial, int i, const ClosedFormConvention& c);

// Length of the geodesic segment between two corners of the embedding.
double chord_length_oracle(const PolygonEmbedding& e, int corner_a, int corner_b);
// gamma_i measured on the embedding.
double gamma_length_oracle(const PolygonEmbedding& e, int i);
// gamma-tilde_i: between the midpoints of a_i and a_{k+1-i}.
double gamma_tilde_length_oracle(const PolygonEmbedding& e, int i);

struct ConventionResolution {
  ClosedFormConvention chosen;
  bool matched = false;
  double max_error = 0.0;  // of the chosen convention over all gamma_i
  // Candidates tried that disagree with the coordinates, with their errors.
  std::vector<std::pair<ClosedFormConvention, double>> rejected;
};

// Tries every (sign, apex, radius) combination allowed by `policy` in a
// fixed order and keeps the first that matches the coordinates within tol.
ConventionResolution resolve_convention(const Polygon& p, const PolygonEmbedding& e, SignPolicy policy, double tol);

// 2 max{A, B} with A = arccosh(cosh^2 L2 - sinh^2 L2 cos(theta)) at the
// extreme theta = pi, B likewise for L1. Equals 4 max{L1, L2}, which bounds
// every curve made of at most two chords of the polygon.
double length_bound(int n, int n1, int n2);

double bers_default(int g);
bool is_admissible(const std::vector<double>& lengths, double bers);

}  // namespace hyppants
