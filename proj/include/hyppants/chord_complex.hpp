#pragma once

#include <array>
#include <vector>

#include "hyppants/polygon.hpp"

namespace hyppants {

// Boundary points of a k-gon are numbered 0..2k-1: point 2c is corner c+1
// and point 2e+1 is the midpoint of edge a_{e+1}. All indices in this
// header are 0-based.
inline int corner_point(int corner) { return 2 * (corner - 1); }
inline int midpoint_point(int edge) { return 2 * (edge - 1) + 1; }

struct Chord {
  int a = 0;  // a < b
  int b = 0;
};

// One chord traversed a -> b (forward) or b -> a.
struct Step {
  int chord = 0;
  bool forward = true;

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};
using Walk = std::vector<Step>;

Walk reversed(const Walk& w);
// Smallest rotation of w or of its reverse; equal closed curves compare equal.
Walk canonical(const Walk& w);

struct Component {
  int euler = 0;
  int boundaries = 0;
  std::vector<int> faces;
};

struct CurveAnalysis {
  bool disjoint = false;
  // Pairs (a, b), a <= b, of curves sharing a chord or crossing at a vertex.
  // a == b flags a curve that is not simple.
  std::vector<std::array<int, 2>> shared_chords;
  std::vector<std::array<int, 2>> crossings;
  // Filled only when disjoint.
  std::vector<Component> components;
  std::vector<std::array<int, 2>> side_components;  // per curve: left, right
};

struct BoundaryCircle {
  Walk steps;
  std::vector<int> junctions;  // glued vertex at the end of each step
  int component = -1;
};

struct CutAnalysis {
  std::vector<Component> components;
  std::vector<int> face_component;
  std::vector<BoundaryCircle> circles;
};

// Splits a boundary circle at repeated junction vertices into closed loops
// that do not revisit a vertex.
std::vector<Walk> split_at_repeats(const BoundaryCircle& c);

// Cell structure of the closed surface obtained from a side-paired polygon
// subdivided by pairwise non-crossing chords.
class ChordComplex {
 public:
  // Throws Error(InvalidInput, "CrossingChords") if two chords cross and
  // "BadChord" for degenerate chords.
  ChordComplex(const SidePairing& pairing, std::vector<Chord> chords);

  int k() const { return k_; }
  int point_count() const { return 2 * k_; }
  const std::vector<Chord>& chords() const { return chords_; }
  int sigma(int p) const { return sigma_[p]; }
  int vertex_of(int p) const { return vertex_[p]; }
  int vertex_count() const { return static_cast<int>(cycle_.size()); }
  int face_count() const { return face_count_; }
  int euler() const;

  int start(const Step& s) const;
  int end(const Step& s) const;
  bool is_closed(const Walk& w) const;

  // Face of the sector between rays t and t+1 (counterclockwise) at point p.
  int face_of_sector(int p, int t) const { return sector_face_[p][t]; }
  // Face on the left of the first step of w.
  int left_face(const Step& s) const;

  // Curves must be closed walks; throws Error(InvalidInput, "OpenCurve").
  CurveAnalysis analyze(const std::vector<Walk>& curves) const;
  CutAnalysis cut_along(const std::vector<int>& chord_ids) const;

 private:
  struct Ray {
    int edge;  // chord id, or chord_count + segment id
    int to;
  };
  struct Slot {
    int point;
    int ray;
  };

  int ray_of(int p, int edge) const;
  int position(int p, int t) const { return pos_[p][t]; }
  int edge_count() const { return static_cast<int>(chords_.size()) + 2 * k_; }
  // Unions faces and vertex regions, then tallies chi per component.
  std::vector<Component> tally(const std::vector<std::vector<int>>& region_of_position, const std::vector<bool>& cut,
                               std::vector<int>& face_component) const;

  int k_ = 0;
  std::vector<Chord> chords_;
  std::vector<int> pairing0_;
  std::vector<int> sigma_;
  std::vector<std::vector<Ray>> rays_;
  std::vector<int> ray_lookup_;  // point * edge_count + edge -> ray or -1
  std::vector<int> vertex_;
  std::vector<std::vector<int>> pos_;
  std::vector<std::vector<Slot>> cycle_;  // per vertex, ray at each position
  std::vector<std::vector<int>> sector_face_;
  int face_count_ = 0;
};

}  // namespace hyppants
