#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyppants/chord_complex.hpp"
#include "hyppants/hyperbolic.hpp"
#include "hyppants/polygon.hpp"

namespace hyppants {

// R_i = (a_i, a_{k+1-i}); triangles at i = 1 and i = k/2.
struct RegionPiece {
  int i = 0;
  int edge_a = 0;
  int edge_b = 0;
  bool triangle = false;
};

std::vector<RegionPiece> regions(const Polygon& p);

// Edges i for which a_i^-1 ~ a_j but not a_{k+1-i}^-1 ~ a_{k+1-j}.
std::vector<int> mirror_violations(const Polygon& p);

// Index j with R_j = R_i^-1. Throws Error(Verification, "MirrorViolation").
int region_partner(const Polygon& p, int i);

// v_i = iota(a_i), w_i = t(a_i), v^_i = t(a_{k+1-i}), w^_i = iota(a_{k+1-i}).
struct Coincidence {
  bool v_eq = false;
  bool w_eq = false;

  friend bool operator==(const Coincidence&, const Coincidence&) = default;
};

// Glued-vertex membership of the four corners, for any 1 <= i <= k.
Coincidence coincidence_trace(const Polygon& p, int i);
// Divisibility tests for i = 2 k_idx + 1; nullopt unless k = 2n.
std::optional<Coincidence> coincidence_gcd(const Polygon& p, int k_idx);
// Both evaluators for i = 2 k_idx + 1. Throws Error(Verification,
// "CriteriaMismatch") if they disagree; falls back to the trace for k = n.
Coincidence vertex_coincidence(const Polygon& p, int k_idx);

enum class PieceClass { Cylinder, PairOfPants, FourHoledSphere };
std::string to_string(PieceClass c);

struct CurveSpec {
  // Diagonal(p) joins boundary points p and 2k-p-1; these chords
  // triangulate the strips between consecutive gamma / gamma-tilde chords.
  enum class Kind { Gamma, GammaTilde, Diagonal, Concat };
  Kind kind = Kind::Gamma;
  int index = 0;                 // Gamma, GammaTilde, Diagonal
  std::vector<CurveSpec> parts;  // Concat, in traversal order
  Walk walk;
  bool closed = false;
  double length = 0.0;

  std::string name() const;
};

// Polygon together with the chords gamma_i, gamma-tilde_i, the strip
// diagonals, the exact complex they span and the metric embedding.
class CurveSystem {
 public:
  explicit CurveSystem(Polygon p);

  const Polygon& polygon() const { return polygon_; }
  const ChordComplex& complex() const { return complex_; }
  const PolygonEmbedding& embedding() const { return embedding_; }
  int genus() const { return genus_; }

  int gamma_chord(int i) const { return i - 1; }
  int gamma_tilde_chord(int i) const { return polygon_.k / 2 - 1 + i - 1; }
  int diagonal_chord(int p) const { return polygon_.k - 1 + p - 1; }
  std::vector<int> gamma_chords() const;

  double walk_length(const Walk& w) const;
  CurveSpec gamma(int i) const;
  CurveSpec gamma_tilde(int i) const;
  // Every closed way of joining the parts end to end; a single open curve
  // when none closes.
  std::vector<CurveSpec> concat(const std::vector<CurveSpec>& parts) const;
  // Curve description for a closed or open walk along chords of the complex.
  CurveSpec from_walk(const Walk& w) const;

 private:
  Polygon polygon_;
  ChordComplex complex_;
  PolygonEmbedding embedding_;
  int genus_ = 0;
};

struct PieceReport {
  int i = 0;
  int partner = 0;
  PieceClass label = PieceClass::Cylinder;  // from the coincidence rule
  int boundary_count = 0;                   // traced on the cut complex
  std::vector<Walk> boundary_loops;
  bool consistent = false;                  // label agrees with the count
};

PieceClass classify_by_coincidence(const Polygon& p, int i);
// Throws Error(Verification, "UnknownShape") if the traced boundary count is
// not 2, 3 or 4.
PieceReport classify_piece(const CurveSystem& cs, int i);
// One report per piece R_i u R_i^-1, smallest index first.
std::vector<PieceReport> pieces(const CurveSystem& cs);

// gamma_i, gamma-tilde_i and concatenations of partner-adjacent gamma's
// and of gamma-tilde_i, gamma-tilde_j for partner pairs.
std::vector<CurveSpec> build_multicurve(const CurveSystem& cs);

struct PantsVerification {
  bool ok = false;
  std::vector<std::string> violations;
  std::vector<Component> components;
};

PantsVerification verify_pants(const CurveSystem& cs, const std::vector<CurveSpec>& curves);

// Candidate families, tried cumulatively in this order.
enum class CandidateTier {
  PieceBoundaries,  // piece boundary loops and four-holed-sphere splitters
  Multicurve,       // every closed member of C
  Concatenations,   // any two gamma's or any two gamma-tilde's
  TriangulatedWalks,  // simple closed walks of up to four chords, diagonals included
};
std::string to_string(CandidateTier t);

struct PantsDecomposition {
  std::vector<CurveSpec> curves;
  std::vector<bool> admissible;
  double bers = 0.0;
  std::vector<PieceReport> pieces;
  PantsVerification verification;
  CandidateTier tier = CandidateTier::PieceBoundaries;  // widest family used
};

struct ExtractOptions {
  long node_budget = 2000000;
  int max_walk_chords = 4;
};

// Never throws on failure; check verification.ok.
PantsDecomposition try_extract_pants(const CurveSystem& cs, double bers, const ExtractOptions& opt = {});
// Throws Error(Verification, "NotPants") listing the violated checks.
PantsDecomposition extract_pants(const CurveSystem& cs, double bers, const ExtractOptions& opt = {});

nlohmann::json to_json(const CurveSpec& c, const CurveSystem& cs);
nlohmann::json pants_report(const CurveSystem& cs, const PantsDecomposition& pd);

}  // namespace hyppants
