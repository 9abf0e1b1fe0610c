#include "hyppants/polygon.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "hyppants/error.hpp"

namespace hyppants {

double PiFraction::radians() const { return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den); }

PiFraction make_pi_fraction(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

SidePairing::SidePairing(std::vector<int> partner_of) : partner_(std::move(partner_of)) {}

bool SidePairing::is_involution() const {
  const int k = size();
  for (int i = 1; i <= k; ++i) {
    int j = (*this)(i);
    if (j < 1 || j > k || (*this)(j) != i) return false;
  }
  return true;
}

bool SidePairing::is_fixed_point_free() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) == i) return false;
  return true;
}

int inverse_mod(int a, int m) {
  // extended Euclid
  long long old_r = ((a % m) + m) % m, r = m;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long quot = old_r / r;
    long long tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw invalid_input("NotUnit", std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return static_cast<int>(((old_s % m) + m) % m);
}

Polygon build_polygon(const DataSet& raw) {
  auto res = validate(raw);
  if (!res.ok() || classify(raw) != ActionClass::Type1Irreducible)
    throw invalid_input("NotType1Irreducible", to_string(raw) + " is not an irreducible Type 1 data set");
  const DataSet d = canonical_type1(raw);
  const int n = d.n;
  const auto& [c1, n1] = d.cone[0];
  const auto& [c2, n2] = d.cone[1];
  const int c3 = d.cone[2].residue;
  (void)c1;

  Polygon p;
  p.n = n;
  p.n1 = n1;
  p.n2 = n2;
  p.source = d;
  const int c3_inv = inverse_mod(c3, n);
  p.theta = make_pi_fraction(2LL * c3_inv, n);
  p.q = static_cast<int>((static_cast<long long>(n / n2) * c3_inv) % n);
  p.j = n2 - c2;
  const int qj = static_cast<int>((static_cast<long long>(p.q) * p.j) % n);

  const bool doubled = n1 != 2 && n2 != 2;
  p.k = doubled ? 2 * n : n;
  std::vector<int> partner(p.k, 0);
  auto reduce = [n](int z) { return ((z - 1) % n + n) % n + 1; };  // into 1..n
  for (int m = 0; m < n; ++m) {
    int z = reduce(m + qj);
    int from = doubled ? 2 * m + 1 : m + 1;
    int to = doubled ? 2 * z : z;
    partner[from - 1] = to;
    if (doubled) partner[to - 1] = from;
  }
  p.pairing = SidePairing(std::move(partner));

  // Corner angles: the gluing cycles decide which corners carry which cone
  // order. In the doubled case the odd corners close up in cycles of length
  // n2 and the even ones in cycles of length n1.
  p.corner_angles.resize(p.k);
  for (int c = 1; c <= p.k; ++c) {
    int order = !doubled ? n2 : (c % 2 == 1 ? n2 : n1);
    p.corner_angles[c - 1] = make_pi_fraction(2, order);
  }
  return p;
}

int next_corner(const Polygon& p, int corner) {
  const int k = p.k;
  int prev_edge = corner == 1 ? k : corner - 1;
  return p.pairing(prev_edge);
}

VertexOrbitSet vertex_orbits(const Polygon& p) {
  VertexOrbitSet out;
  out.class_of.assign(p.k, -1);
  for (int start = 1; start <= p.k; ++start) {
    if (out.class_of[start - 1] >= 0) continue;
    std::vector<int> cls;
    int c = start;
    while (out.class_of[c - 1] < 0) {
      out.class_of[c - 1] = static_cast<int>(out.classes.size());
      cls.push_back(c);
      c = next_corner(p, c);
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

int glued_genus(const Polygon& p) {
  const int v = vertex_orbits(p).size();
  const int chi = v - p.k / 2 + 1;
  if (chi % 2 != 0 || chi > 2)
    throw verification_failure("ChiParity", "Euler characteristic " + std::to_string(chi) + " of glued polygon is invalid");
  return (2 - chi) / 2;
}

nlohmann::json polygon_report(const Polygon& p) {
  nlohmann::json angles = nlohmann::json::array();
  for (const auto& a : p.corner_angles) angles.push_back({a.num, a.den});
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& cls : vertex_orbits(p).classes) orbits.push_back(cls);
  return {
      {"data_set", to_json(p.source)},
      {"k", p.k},
      {"n", p.n},
      {"q", p.q},
      {"j", p.j},
      {"theta_over_pi", {p.theta.num, p.theta.den}},
      {"pairing", p.pairing.as_vector()},
      {"corner_angles_over_pi", angles},
      {"vertex_orbits", orbits},
      {"genus", glued_genus(p)},
  };
}

}  // namespace hyppants
