#include "hyppants/curve_system.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "hyppants/error.hpp"

namespace hyppants {

namespace {

int wrap(int i, int k) { return ((i - 1) % k + k) % k + 1; }

std::vector<Chord> standard_chords(int k) {
  std::vector<Chord> chords;
  for (int i = 1; i < k / 2; ++i) chords.push_back({corner_point(i + 1), corner_point(k + 1 - i)});
  for (int i = 1; i <= k / 2; ++i) chords.push_back({midpoint_point(i), midpoint_point(k + 1 - i)});
  for (int p = 1; p <= k - 2; ++p) chords.push_back({p, 2 * k - p - 1});
  return chords;
}

std::string point_label(int p) {
  return p % 2 == 0 ? "c" + std::to_string(p / 2 + 1) : "m" + std::to_string((p - 1) / 2 + 1);
}

int class_size(PieceClass c) {
  switch (c) {
    case PieceClass::Cylinder: return 2;
    case PieceClass::PairOfPants: return 3;
    case PieceClass::FourHoledSphere: return 4;
  }
  return 0;
}

PieceReport classify_with(const CurveSystem& cs, const CutAnalysis& cut, int i) {
  const Polygon& p = cs.polygon();
  PieceReport r;
  r.i = i;
  r.partner = region_partner(p, i);
  r.label = classify_by_coincidence(p, i);
  const int comp = cut.face_component[cs.complex().face_of_sector(corner_point(i), 0)];
  for (const auto& circle : cut.circles)
    if (circle.component == comp)
      for (auto& loop : split_at_repeats(circle)) r.boundary_loops.push_back(std::move(loop));
  r.boundary_count = static_cast<int>(r.boundary_loops.size());
  if (r.boundary_count < 2 || r.boundary_count > 4)
    throw verification_failure("UnknownShape", "piece R_" + std::to_string(i) + " has " +
                                                   std::to_string(r.boundary_count) + " boundary circles");
  r.consistent = class_size(r.label) == r.boundary_count;
  return r;
}

}  // namespace

std::vector<RegionPiece> regions(const Polygon& p) {
  std::vector<RegionPiece> out;
  for (int i = 1; i <= p.k / 2; ++i) out.push_back({i, i, p.k + 1 - i, i == 1 || i == p.k / 2});
  return out;
}

std::vector<int> mirror_violations(const Polygon& p) {
  std::vector<int> bad;
  for (int i = 1; i <= p.k; ++i)
    if (p.pairing(p.k + 1 - i) != p.k + 1 - p.pairing(i)) bad.push_back(i);
  return bad;
}

int region_partner(const Polygon& p, int i) {
  if (i < 1 || i > p.k / 2) throw invalid_input("Precondition", "region index out of range");
  const int j = p.pairing(i);
  if (p.pairing(p.k + 1 - i) != p.k + 1 - j)
    throw verification_failure("MirrorViolation", "a_" + std::to_string(i) + " ~ a_" + std::to_string(j) +
                                                      " but the mirrored edges are not paired");
  return std::min(j, p.k + 1 - j);
}

Coincidence coincidence_trace(const Polygon& p, int i) {
  const auto orbits = vertex_orbits(p);
  auto same = [&](int a, int b) { return orbits.class_of[wrap(a, p.k) - 1] == orbits.class_of[wrap(b, p.k) - 1]; };
  return {same(i, p.k + 2 - i), same(i + 1, p.k + 1 - i)};
}

std::optional<Coincidence> coincidence_gcd(const Polygon& p, int k_idx) {
  if (!p.doubled()) return std::nullopt;
  const long long qj = static_cast<long long>(p.q) * p.j;
  const long long g1 = std::gcd<long long>(p.n, qj);
  const long long g2 = std::gcd<long long>(p.n, qj - 1);
  return Coincidence{(2LL * k_idx) % g1 == 0, (2LL * k_idx + 1) % g2 == 0};
}

Coincidence vertex_coincidence(const Polygon& p, int k_idx) {
  const int i = 2 * k_idx + 1;
  if (k_idx < 0 || i > p.k) throw invalid_input("Precondition", "index out of range");
  const auto traced = coincidence_trace(p, i);
  const auto predicted = coincidence_gcd(p, k_idx);
  if (predicted && *predicted != traced)
    throw verification_failure("CriteriaMismatch",
                               "divisibility and corner trace disagree at i = " + std::to_string(i));
  return traced;
}

std::string to_string(PieceClass c) {
  switch (c) {
    case PieceClass::Cylinder: return "cylinder";
    case PieceClass::PairOfPants: return "pair-of-pants";
    case PieceClass::FourHoledSphere: return "four-holed-sphere";
  }
  return "?";
}

std::string CurveSpec::name() const {
  switch (kind) {
    case Kind::Gamma: return "gamma_" + std::to_string(index);
    case Kind::GammaTilde: return "gamma~_" + std::to_string(index);
    case Kind::Diagonal: return "delta_" + std::to_string(index);
    case Kind::Concat: {
      std::string s;
      for (const auto& part : parts) s += (s.empty() ? "" : "*") + part.name();
      return s;
    }
  }
  return "?";
}

CurveSystem::CurveSystem(Polygon p)
    : polygon_(std::move(p)),
      complex_(polygon_.pairing, standard_chords(polygon_.k)),
      embedding_(embed(polygon_)),
      genus_(glued_genus(polygon_)) {}

std::vector<int> CurveSystem::gamma_chords() const {
  std::vector<int> ids;
  for (int i = 1; i < polygon_.k / 2; ++i) ids.push_back(gamma_chord(i));
  return ids;
}

double CurveSystem::walk_length(const Walk& w) const {
  auto at = [&](int pt) { return pt % 2 == 0 ? embedding_.corner(pt / 2 + 1) : embedding_.midpoint((pt - 1) / 2 + 1); };
  double total = 0.0;
  for (const auto& s : w) {
    const Chord& c = complex_.chords()[s.chord];
    total += geodesic_dist(at(c.a), at(c.b));
  }
  return total;
}

CurveSpec CurveSystem::gamma(int i) const {
  CurveSpec c;
  c.kind = CurveSpec::Kind::Gamma;
  c.index = i;
  c.walk = {{gamma_chord(i), true}};
  c.closed = complex_.is_closed(c.walk);
  c.length = walk_length(c.walk);
  return c;
}

CurveSpec CurveSystem::gamma_tilde(int i) const {
  CurveSpec c;
  c.kind = CurveSpec::Kind::GammaTilde;
  c.index = i;
  c.walk = {{gamma_tilde_chord(i), true}};
  c.closed = complex_.is_closed(c.walk);
  c.length = walk_length(c.walk);
  return c;
}

std::vector<CurveSpec> CurveSystem::concat(const std::vector<CurveSpec>& parts) const {
  std::vector<CurveSpec> out;
  std::set<Walk> seen;
  const int free_parts = static_cast<int>(parts.size()) - 1;
  for (int mask = 0; mask < (1 << free_parts); ++mask) {
    CurveSpec c;
    c.kind = CurveSpec::Kind::Concat;
    for (int t = 0; t < static_cast<int>(parts.size()); ++t) {
      CurveSpec part = parts[t];
      if (t > 0 && (mask >> (t - 1)) & 1) part.walk = reversed(part.walk);
      c.walk.insert(c.walk.end(), part.walk.begin(), part.walk.end());
      c.parts.push_back(std::move(part));
    }
    if (!complex_.is_closed(c.walk) || !seen.insert(canonical(c.walk)).second) continue;
    c.closed = true;
    c.length = walk_length(c.walk);
    out.push_back(std::move(c));
  }
  if (out.empty()) {
    CurveSpec c;
    c.kind = CurveSpec::Kind::Concat;
    c.parts = parts;
    for (const auto& part : parts) c.walk.insert(c.walk.end(), part.walk.begin(), part.walk.end());
    c.length = walk_length(c.walk);
    out.push_back(std::move(c));
  }
  return out;
}

CurveSpec CurveSystem::from_walk(const Walk& w) const {
  auto single = [&](const Step& s) {
    const int half = polygon_.k / 2;
    CurveSpec c;
    if (s.chord < half - 1) {
      c = gamma(s.chord + 1);
    } else if (s.chord < polygon_.k - 1) {
      c = gamma_tilde(s.chord - (half - 1) + 1);
    } else {
      c.kind = CurveSpec::Kind::Diagonal;
      c.index = s.chord - (polygon_.k - 1) + 1;
      c.length = walk_length({s});
    }
    c.walk = {s};
    return c;
  };
  if (w.size() == 1) {
    CurveSpec c = single(w[0]);
    c.closed = complex_.is_closed(w);
    return c;
  }
  CurveSpec c;
  c.kind = CurveSpec::Kind::Concat;
  for (const auto& s : w) c.parts.push_back(single(s));
  c.walk = w;
  c.closed = complex_.is_closed(w);
  c.length = walk_length(w);
  return c;
}

PieceClass classify_by_coincidence(const Polygon& p, int i) {
  const int j = region_partner(p, i);
  if (j == i) return PieceClass::Cylinder;
  const int lo = std::min(i, j), hi = std::max(i, j);
  // A triangle's apex coincidence is automatic and, through the gluing,
  // forces one coincidence of R_lo: v_lo if a_lo ~ a_hi, w_lo if
  // a_lo ~ a_{k+1-hi}. Forced coincidences do not add boundary circles.
  const auto c = coincidence_trace(p, lo);
  const bool crossed = p.pairing(lo) != hi;
  bool v_counts = lo != 1, w_counts = true;
  if (hi == p.k / 2) (crossed ? w_counts : v_counts) = false;
  switch (int(v_counts && c.v_eq) + int(w_counts && c.w_eq)) {
    case 0: return PieceClass::Cylinder;
    case 1: return PieceClass::PairOfPants;
    default: return PieceClass::FourHoledSphere;
  }
}

PieceReport classify_piece(const CurveSystem& cs, int i) {
  return classify_with(cs, cs.complex().cut_along(cs.gamma_chords()), i);
}

std::vector<PieceReport> pieces(const CurveSystem& cs) {
  const auto cut = cs.complex().cut_along(cs.gamma_chords());
  std::vector<PieceReport> out;
  for (int i = 1; i <= cs.polygon().k / 2; ++i)
    if (i <= region_partner(cs.polygon(), i)) out.push_back(classify_with(cs, cut, i));
  return out;
}

std::vector<CurveSpec> build_multicurve(const CurveSystem& cs) {
  const int half = cs.polygon().k / 2;
  std::vector<CurveSpec> out;
  std::set<Walk> seen;
  auto add = [&](CurveSpec c) {
    if (seen.insert(canonical(c.walk)).second) out.push_back(std::move(c));
  };
  for (int i = 1; i < half; ++i) add(cs.gamma(i));
  for (int i = 1; i <= half; ++i) add(cs.gamma_tilde(i));
  for (int i = 1; i <= half; ++i) {
    const int j = region_partner(cs.polygon(), i);
    if (j < i) continue;
    std::set<int> adjacent;
    for (int a : {i - 1, i, j - 1, j})
      if (a >= 1 && a < half) adjacent.insert(a);
    for (auto a = adjacent.begin(); a != adjacent.end(); ++a)
      for (auto b = std::next(a); b != adjacent.end(); ++b)
        for (auto& c : cs.concat({cs.gamma(*a), cs.gamma(*b)})) add(std::move(c));
    if (j != i)
      for (auto& c : cs.concat({cs.gamma_tilde(i), cs.gamma_tilde(j)})) add(std::move(c));
  }
  return out;
}

PantsVerification verify_pants(const CurveSystem& cs, const std::vector<CurveSpec>& curves) {
  PantsVerification v;
  const int expected = 3 * cs.genus() - 3;
  if (static_cast<int>(curves.size()) != expected)
    v.violations.push_back("count: expected " + std::to_string(expected) + " curves, found " +
                           std::to_string(curves.size()));
  std::vector<Walk> walks;
  for (const auto& c : curves) {
    if (!cs.complex().is_closed(c.walk)) {
      v.violations.push_back("closed: " + c.name() + " is not a closed curve");
      continue;
    }
    walks.push_back(c.walk);
  }
  if (walks.size() == curves.size()) {
    const auto a = cs.complex().analyze(walks);
    for (auto [x, y] : a.shared_chords)
      v.violations.push_back(x == y ? "simple: " + curves[x].name() + " runs along a chord twice"
                                    : "disjoint: " + curves[x].name() + " and " + curves[y].name() + " share a chord");
    for (auto [x, y] : a.crossings)
      v.violations.push_back(x == y ? "simple: " + curves[x].name() + " crosses itself"
                                    : "disjoint: " + curves[x].name() + " crosses " + curves[y].name());
    v.components = a.components;
    for (std::size_t c = 0; c < a.components.size(); ++c) {
      const auto& comp = a.components[c];
      if (comp.euler != -1 || comp.boundaries != 3)
        v.violations.push_back("pants: component " + std::to_string(c) + " has chi = " + std::to_string(comp.euler) +
                               " and " + std::to_string(comp.boundaries) + " boundary circles");
    }
  }
  v.ok = v.violations.empty();
  return v;
}

std::string to_string(CandidateTier t) {
  switch (t) {
    case CandidateTier::PieceBoundaries: return "piece-boundaries";
    case CandidateTier::Multicurve: return "multicurve";
    case CandidateTier::Concatenations: return "concatenations";
    case CandidateTier::TriangulatedWalks: return "triangulated-walks";
  }
  return "?";
}

namespace {

// Curves that are pairwise disjoint, pairwise non-parallel and essential
// number at most 3g - 3, with equality exactly for pants decompositions, and
// all three conditions are checked on single curves or pairs.
class CliqueSearch {
 public:
  CliqueSearch(const ChordComplex& cx, const std::vector<Walk>& walks) : cx_(cx), walks_(walks) {
    const std::size_t n = walks.size();
    compat_.assign(n * n, -1);
  }

  bool essential(int a) const { return good({walks_[a]}); }

  bool compatible(int a, int b) {
    signed char& c = compat_[a * walks_.size() + b];
    if (c < 0) c = compat_[b * walks_.size() + a] = good({walks_[a], walks_[b]}) ? 1 : 0;
    return c == 1;
  }

  // First clique of the given size among `pool` (in pool order).
  std::optional<std::vector<int>> find(const std::vector<int>& pool, int size, long& budget) {
    chosen_.clear();
    if (dfs(pool, size, budget)) return chosen_;
    return std::nullopt;
  }

 private:
  bool good(const std::vector<Walk>& ws) const {
    const auto a = cx_.analyze(ws);
    return a.disjoint &&
           std::all_of(a.components.begin(), a.components.end(), [](const Component& c) { return c.euler < 0; });
  }

  bool dfs(const std::vector<int>& pool, int size, long& budget) {
    if (static_cast<int>(chosen_.size()) == size) return true;
    // colors[x]: classes needed by a greedy coloring of pool[x..], each class
    // pairwise incompatible, so a clique there has at most colors[x] members.
    std::vector<int> colors(pool.size() + 1, 0);
    std::vector<std::vector<int>> classes;
    for (std::size_t x = pool.size(); x-- > 0;) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c)
        if (std::none_of(classes[c].begin(), classes[c].end(), [&](int y) { return compatible(pool[x], y); })) break;
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(pool[x]);
      colors[x] = static_cast<int>(classes.size());
    }
    for (std::size_t x = 0; x < pool.size(); ++x) {
      if (static_cast<int>(chosen_.size()) + colors[x] < size || --budget < 0) return false;
      std::vector<int> rest;
      for (std::size_t y = x + 1; y < pool.size(); ++y)
        if (compatible(pool[x], pool[y])) rest.push_back(pool[y]);
      chosen_.push_back(pool[x]);
      if (dfs(rest, size, budget)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const ChordComplex& cx_;
  const std::vector<Walk>& walks_;
  std::vector<signed char> compat_;
  std::vector<int> chosen_;
};

std::vector<Walk> simple_closed_walks(const ChordComplex& cx, int max_chords) {
  const int C = static_cast<int>(cx.chords().size());
  std::vector<Walk> out;
  std::set<Walk> seen;
  std::vector<bool> used(C, false);
  Walk w;
  std::function<void()> extend = [&] {
    if (cx.is_closed(w) && seen.insert(canonical(w)).second) out.push_back(w);
    if (static_cast<int>(w.size()) == max_chords) return;
    const int v = cx.vertex_of(cx.end(w.back()));
    // The first chord is the smallest one, so each curve is generated from
    // one starting chord only.
    for (int c = w[0].chord + 1; c < C; ++c) {
      if (used[c]) continue;
      for (bool fwd : {true, false}) {
        const Step s{c, fwd};
        if (cx.vertex_of(cx.start(s)) != v) continue;
        used[c] = true;
        w.push_back(s);
        extend();
        w.pop_back();
        used[c] = false;
      }
    }
  };
  for (int c = 0; c < C; ++c) {
    used[c] = true;
    w = {{c, true}};
    extend();
    used[c] = false;
  }
  return out;
}

}  // namespace

PantsDecomposition try_extract_pants(const CurveSystem& cs, double bers, const ExtractOptions& opt) {
  PantsDecomposition pd;
  pd.bers = bers;
  pd.pieces = pieces(cs);

  std::vector<CurveSpec> cand;
  std::vector<CandidateTier> tier_of;
  std::set<Walk> seen;
  auto add = [&](CurveSpec c, CandidateTier t) {
    if (c.closed && seen.insert(canonical(c.walk)).second) {
      cand.push_back(std::move(c));
      tier_of.push_back(t);
    }
  };

  std::set<int> singles;
  std::vector<Walk> longer;
  for (const auto& pr : pd.pieces)
    for (const auto& loop : pr.boundary_loops) {
      if (loop.size() == 1) singles.insert(loop[0].chord + 1);
      else longer.push_back(loop);
    }
  for (int i : singles) add(cs.gamma(i), CandidateTier::PieceBoundaries);
  for (const auto& loop : longer) add(cs.from_walk(loop), CandidateTier::PieceBoundaries);
  for (const auto& pr : pd.pieces) {
    if (pr.boundary_count != 4) continue;
    if (pr.partner == pr.i) add(cs.gamma_tilde(pr.i), CandidateTier::PieceBoundaries);
    else
      for (auto& c : cs.concat({cs.gamma_tilde(pr.i), cs.gamma_tilde(pr.partner)}))
        add(std::move(c), CandidateTier::PieceBoundaries);
  }
  for (auto& c : build_multicurve(cs)) add(std::move(c), CandidateTier::Multicurve);
  const int half = cs.polygon().k / 2;
  for (int a = 1; a < half; ++a)
    for (int b = a + 1; b < half; ++b)
      for (auto& c : cs.concat({cs.gamma(a), cs.gamma(b)})) add(std::move(c), CandidateTier::Concatenations);
  for (int a = 1; a <= half; ++a)
    for (int b = a + 1; b <= half; ++b)
      for (auto& c : cs.concat({cs.gamma_tilde(a), cs.gamma_tilde(b)}))
        add(std::move(c), CandidateTier::Concatenations);

  const int target = 3 * cs.genus() - 3;
  long budget = 0;
  bool exhausted = false;
  std::vector<Walk> walks;
  for (const auto& c : cand) walks.push_back(c.walk);
  std::optional<std::vector<int>> found;
  {
    CliqueSearch search(cs.complex(), walks);
    std::vector<int> pool;
    std::size_t next = 0;
    for (auto t : {CandidateTier::PieceBoundaries, CandidateTier::Multicurve, CandidateTier::Concatenations}) {
      for (; next < cand.size() && tier_of[next] == t; ++next)
        if (search.essential(static_cast<int>(next))) pool.push_back(static_cast<int>(next));
      budget = opt.node_budget;
      found = search.find(pool, target, budget);
      exhausted = exhausted || budget < 0;
      if (found) break;
    }
  }
  if (!found) {
    const std::size_t first = walks.size();
    for (auto& w : simple_closed_walks(cs.complex(), opt.max_walk_chords))
      if (seen.insert(canonical(w)).second) {
        cand.push_back(cs.from_walk(w));
        tier_of.push_back(CandidateTier::TriangulatedWalks);
        walks.push_back(std::move(w));
      }
    CliqueSearch search(cs.complex(), walks);
    std::vector<int> pool;
    for (std::size_t id = 0; id < walks.size(); ++id)
      if (search.essential(static_cast<int>(id))) pool.push_back(static_cast<int>(id));
    // Earlier families first, then shorter walks.
    std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) {
      if ((a < static_cast<int>(first)) != (b < static_cast<int>(first))) return a < static_cast<int>(first);
      return cand[a].length < cand[b].length;
    });
    budget = opt.node_budget;
    found = search.find(pool, target, budget);
    exhausted = exhausted || budget < 0;
  }
  if (found) {
    for (int id : *found) {
      pd.curves.push_back(cand[id]);
      pd.admissible.push_back(cand[id].length < bers);
      pd.tier = std::max(pd.tier, tier_of[id]);
    }
  }
  pd.verification = verify_pants(cs, pd.curves);
  if (!found) {
    pd.verification.ok = false;
    pd.verification.violations.push_back(exhausted ? "search: node budget exhausted"
                                                    : "search: no decomposition among the candidate curves");
  }
  return pd;
}

PantsDecomposition extract_pants(const CurveSystem& cs, double bers, const ExtractOptions& opt) {
  auto pd = try_extract_pants(cs, bers, opt);
  if (!pd.verification.ok) {
    std::string msg;
    for (const auto& v : pd.verification.violations) msg += (msg.empty() ? "" : "; ") + v;
    throw verification_failure("NotPants", msg);
  }
  return pd;
}

nlohmann::json to_json(const CurveSpec& c, const CurveSystem& cs) {
  nlohmann::json j;
  j["name"] = c.name();
  switch (c.kind) {
    case CurveSpec::Kind::Gamma: j["kind"] = "gamma"; j["index"] = c.index; break;
    case CurveSpec::Kind::GammaTilde: j["kind"] = "gamma-tilde"; j["index"] = c.index; break;
    case CurveSpec::Kind::Diagonal: j["kind"] = "diagonal"; j["index"] = c.index; break;
    case CurveSpec::Kind::Concat: {
      j["kind"] = "concat";
      auto parts = nlohmann::json::array();
      for (const auto& p : c.parts) parts.push_back(p.name());
      j["parts"] = parts;
      break;
    }
  }
  auto segs = nlohmann::json::array();
  for (const auto& s : c.walk)
    segs.push_back({point_label(cs.complex().start(s)), point_label(cs.complex().end(s))});
  j["segments"] = segs;
  j["closed"] = c.closed;
  j["length"] = c.length;
  return j;
}

nlohmann::json pants_report(const CurveSystem& cs, const PantsDecomposition& pd) {
  const Polygon& p = cs.polygon();
  nlohmann::json j;
  j["data_set"] = to_string(p.source);
  j["genus"] = cs.genus();
  j["k"] = p.k;
  j["bers"] = pd.bers;
  j["length_bound"] = length_bound(p.n, p.n1, p.n2);
  auto curves = nlohmann::json::array();
  for (std::size_t c = 0; c < pd.curves.size(); ++c) {
    auto cj = to_json(pd.curves[c], cs);
    cj["admissible"] = static_cast<bool>(pd.admissible[c]);
    curves.push_back(cj);
  }
  j["curves"] = curves;
  auto pieces_j = nlohmann::json::array();
  for (const auto& pr : pd.pieces)
    pieces_j.push_back({{"i", pr.i},
                        {"partner", pr.partner},
                        {"class", to_string(pr.label)},
                        {"boundary_count", pr.boundary_count},
                        {"consistent", pr.consistent}});
  j["pieces"] = pieces_j;
  auto comps = nlohmann::json::array();
  for (const auto& c : pd.verification.components)
    comps.push_back({{"euler", c.euler}, {"boundaries", c.boundaries}});
  j["components"] = comps;
  j["admissible"] = std::all_of(pd.admissible.begin(), pd.admissible.end(), [](bool b) { return b; });
  j["verified"] = pd.verification.ok;
  j["violations"] = pd.verification.violations;
  j["candidate_tier"] = to_string(pd.tier);
  return j;
}

}  // namespace hyppants
