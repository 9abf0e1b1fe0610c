#pragma once

#include <vector>

#include <json.hpp>

#include "hyppants/dataset.hpp"

namespace hyppants {

// Exact rational multiple of pi, kept reduced.
struct PiFraction {
  long long num = 0;
  long long den = 1;

  double radians() const;
  friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

PiFraction make_pi_fraction(long long num, long long den);

// Orientation-reversing edge identification on edges 1..k:
// a_i^{-1} ~ a_{partner(i)}.
class SidePairing {
 public:
  SidePairing() = default;
  explicit SidePairing(std::vector<int> partner_of);

  int size() const { return static_cast<int>(partner_.size()); }
  // 1-based edge index in, 1-based edge index out.
  int operator()(int edge) const { return partner_[edge - 1]; }
  const std::vector<int>& as_vector() const { return partner_; }

  bool is_involution() const;
  bool is_fixed_point_free() const;

 private:
  std::vector<int> partner_;
};

struct Polygon {
  int k = 0;  // number of edges, n or 2n
  int n = 0;  // rotation order
  int n1 = 0;
  int n2 = 0;
  PiFraction theta;  // rotation angle 2 pi c3^{-1} / n
  int q = 0;
  int j = 0;
  SidePairing pairing;
  // corner_angles[c-1] is the interior angle at corner c = initial vertex of a_c.
  std::vector<PiFraction> corner_angles;
  DataSet source;

  bool doubled() const { return k == 2 * n; }
};

// Modular inverse of a unit; throws if gcd(a, m) != 1.
int inverse_mod(int a, int m);

// Side-paired k-gon realizing an irreducible Type 1 action.
// Throws Error(InvalidInput, "NotType1Irreducible").
Polygon build_polygon(const DataSet& d);

// Corner gluing classes. Classes are sorted by their minimum member and each
// class lists its corners in tracing order starting from that minimum.
struct VertexOrbitSet {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // class_of[c-1]

  int size() const { return static_cast<int>(classes.size()); }
};

// Corner c is the initial vertex of edge a_c. Gluing a_{c-1} to its partner
// identifies corner c with the initial corner of a_{partner(c-1)}.
int next_corner(const Polygon& p, int corner);

VertexOrbitSet vertex_orbits(const Polygon& p);

// Genus of the closed surface obtained by gluing; throws
// Error(Verification, "ChiParity") when V - k/2 + 1 is odd.
int glued_genus(const Polygon& p);

nlohmann::json polygon_report(const Polygon& p);

}  // namespace hyppants
