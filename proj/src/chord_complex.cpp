#include "hyppants/chord_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hyppants/error.hpp"

namespace hyppants {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

int mod(int a, int m) { return ((a % m) + m) % m; }

// x strictly inside the cyclic interval running forward from a to b.
bool strictly_inside(int x, int a, int b, int m) {
  const int dx = mod(x - a, m);
  return dx > 0 && dx < mod(b - a, m);
}

}  // namespace

Walk reversed(const Walk& w) {
  Walk r(w.rbegin(), w.rend());
  for (auto& s : r) s.forward = !s.forward;
  return r;
}

Walk canonical(const Walk& w) {
  if (w.empty()) return w;
  Walk best = w;
  for (const Walk& base : {w, reversed(w)})
    for (std::size_t r = 0; r < base.size(); ++r) {
      Walk rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      best = std::min(best, rot);
    }
  return best;
}

std::vector<Walk> split_at_repeats(const BoundaryCircle& c) {
  struct Item {
    Step step;
    int junction;
  };
  std::vector<Item> items;
  for (std::size_t s = 0; s < c.steps.size(); ++s) items.push_back({c.steps[s], c.junctions[s]});
  std::vector<Walk> loops;
  while (true) {
    const int m = static_cast<int>(items.size());
    int best_a = -1, best_len = m;
    for (int a = 0; a < m; ++a)
      for (int d = 1; d < best_len; ++d)
        if (items[(a + d) % m].junction == items[a].junction) {
          best_a = a;
          best_len = d;
          break;
        }
    if (best_a < 0) break;
    // Steps a+1 .. a+len leave from and return to the junction at a.
    Walk loop;
    std::vector<Item> rest;
    for (int d = 1; d <= best_len; ++d) loop.push_back(items[(best_a + d) % m].step);
    for (int d = best_len + 1; d <= m; ++d) rest.push_back(items[(best_a + d) % m]);
    loops.push_back(std::move(loop));
    items = std::move(rest);
  }
  if (!items.empty()) {
    Walk loop;
    for (const auto& it : items) loop.push_back(it.step);
    loops.push_back(std::move(loop));
  }
  return loops;
}

ChordComplex::ChordComplex(const SidePairing& pairing, std::vector<Chord> chords)
    : k_(static_cast<int>(pairing.as_vector().size())), chords_(std::move(chords)) {
  const int P = point_count();
  for (auto& c : chords_) {
    if (c.a > c.b) std::swap(c.a, c.b);
    if (c.a < 0 || c.b >= P || c.a == c.b || c.b - c.a == 1 || (c.a == 0 && c.b == P - 1))
      throw invalid_input("BadChord", "chord endpoints must be distinct, non-adjacent boundary points");
  }
  for (std::size_t x = 0; x < chords_.size(); ++x)
    for (std::size_t y = x + 1; y < chords_.size(); ++y) {
      const auto& c = chords_[x];
      const auto& d = chords_[y];
      if (c.a == d.a && c.b == d.b) throw invalid_input("BadChord", "duplicate chord");
      if (c.a == d.a || c.a == d.b || c.b == d.a || c.b == d.b) continue;
      if (strictly_inside(d.a, c.a, c.b, P) != strictly_inside(d.b, c.a, c.b, P))
        throw invalid_input("CrossingChords", "chords must not cross inside the polygon");
    }

  pairing0_.resize(k_);
  for (int e = 0; e < k_; ++e) pairing0_[e] = pairing(e + 1) - 1;
  sigma_.resize(P);
  for (int c = 0; c < k_; ++c) sigma_[2 * c] = 2 * pairing0_[mod(c - 1, k_)];
  for (int e = 0; e < k_; ++e) sigma_[2 * e + 1] = 2 * pairing0_[e] + 1;

  const int C = static_cast<int>(chords_.size());
  rays_.assign(P, {});
  for (int p = 0; p < P; ++p) {
    rays_[p].push_back({C + p, mod(p + 1, P)});
    std::vector<Ray> mid;
    for (int id = 0; id < C; ++id) {
      if (chords_[id].a == p) mid.push_back({id, chords_[id].b});
      if (chords_[id].b == p) mid.push_back({id, chords_[id].a});
    }
    std::sort(mid.begin(), mid.end(), [&](const Ray& x, const Ray& y) { return mod(x.to - p, P) < mod(y.to - p, P); });
    rays_[p].insert(rays_[p].end(), mid.begin(), mid.end());
    rays_[p].push_back({C + mod(p - 1, P), mod(p - 1, P)});
  }
  ray_lookup_.assign(static_cast<std::size_t>(P) * edge_count(), -1);
  for (int p = 0; p < P; ++p)
    for (int t = 0; t < static_cast<int>(rays_[p].size()); ++t)
      ray_lookup_[static_cast<std::size_t>(p) * edge_count() + rays_[p][t].edge] = t;

  // Vertex cycles: the wedge at p is followed by the wedge at sigma(p); the
  // last ray of p and the first ray of sigma(p) lie on the same glued edge.
  vertex_.assign(P, -1);
  pos_.assign(P, {});
  for (int p0 = 0; p0 < P; ++p0) {
    if (vertex_[p0] >= 0) continue;
    const int v = static_cast<int>(cycle_.size());
    cycle_.emplace_back();
    int p = p0;
    do {
      vertex_[p] = v;
      pos_[p].assign(rays_[p].size(), -1);
      for (int t = 0; t + 1 < static_cast<int>(rays_[p].size()); ++t) {
        pos_[p][t] = static_cast<int>(cycle_[v].size());
        cycle_[v].push_back({p, t});
      }
      p = sigma_[p];
    } while (p != p0);
    do {
      pos_[p].back() = pos_[sigma_[p]][0];
      p = sigma_[p];
    } while (p != p0);
  }

  std::vector<int> sector_base(P + 1, 0);
  for (int p = 0; p < P; ++p) sector_base[p + 1] = sector_base[p] + static_cast<int>(rays_[p].size()) - 1;
  UnionFind uf(sector_base[P]);
  for (int p = 0; p < P; ++p)
    for (int t = 0; t + 1 < static_cast<int>(rays_[p].size()); ++t) {
      const Ray& r = rays_[p][t + 1];
      uf.unite(sector_base[p] + t, sector_base[r.to] + ray_of(r.to, r.edge));
    }
  std::map<int, int> face_id;
  sector_face_.assign(P, {});
  for (int p = 0; p < P; ++p)
    for (int t = 0; t + 1 < static_cast<int>(rays_[p].size()); ++t) {
      const int root = uf.find(sector_base[p] + t);
      auto [it, fresh] = face_id.emplace(root, static_cast<int>(face_id.size()));
      sector_face_[p].push_back(it->second);
    }
  face_count_ = static_cast<int>(face_id.size());
}

int ChordComplex::euler() const { return vertex_count() - (static_cast<int>(chords_.size()) + k_) + face_count_; }

int ChordComplex::ray_of(int p, int edge) const {
  return ray_lookup_[static_cast<std::size_t>(p) * edge_count() + edge];
}

int ChordComplex::start(const Step& s) const { return s.forward ? chords_[s.chord].a : chords_[s.chord].b; }
int ChordComplex::end(const Step& s) const { return s.forward ? chords_[s.chord].b : chords_[s.chord].a; }

bool ChordComplex::is_closed(const Walk& w) const {
  if (w.empty()) return false;
  for (std::size_t s = 0; s < w.size(); ++s)
    if (vertex_of(end(w[s])) != vertex_of(start(w[(s + 1) % w.size()]))) return false;
  return true;
}

int ChordComplex::left_face(const Step& s) const {
  const int p = start(s);
  return sector_face_[p][ray_of(p, s.chord)];
}

std::vector<Component> ChordComplex::tally(const std::vector<std::vector<int>>& region_of_position,
                                           const std::vector<bool>& cut, std::vector<int>& face_component) const {
  int regions = 0;
  for (const auto& v : region_of_position)
    for (int r : v) regions = std::max(regions, r + 1);
  UnionFind uf(face_count_ + regions);
  for (int v = 0; v < vertex_count(); ++v)
    for (std::size_t s = 0; s < cycle_[v].size(); ++s) {
      const Slot& slot = cycle_[v][s];
      uf.unite(sector_face_[slot.point][slot.ray], face_count_ + region_of_position[v][s]);
    }
  std::map<int, int> comp_id;
  face_component.assign(face_count_, -1);
  std::vector<Component> comps;
  for (int f = 0; f < face_count_; ++f) {
    auto [it, fresh] = comp_id.emplace(uf.find(f), static_cast<int>(comps.size()));
    if (fresh) comps.emplace_back();
    face_component[f] = it->second;
    comps[it->second].faces.push_back(f);
    comps[it->second].euler += 1;
  }
  for (int r = 0; r < regions; ++r) comps[comp_id.at(uf.find(face_count_ + r))].euler += 1;
  for (int id = 0; id < static_cast<int>(chords_.size()); ++id) {
    const int a = chords_[id].a;
    const int t = ray_of(a, id);
    comps[face_component[sector_face_[a][t]]].euler -= 1;
    if (cut[id]) comps[face_component[sector_face_[a][t - 1]]].euler -= 1;
  }
  for (int e = 0; e < k_; ++e) {
    if (e > pairing0_[e]) continue;
    comps[face_component[sector_face_[2 * e][0]]].euler -= 1;
    comps[face_component[sector_face_[2 * e + 1][0]]].euler -= 1;
  }
  return comps;
}

CurveAnalysis ChordComplex::analyze(const std::vector<Walk>& curves) const {
  CurveAnalysis out;
  const int C = static_cast<int>(chords_.size());
  std::vector<std::vector<int>> users(C);
  for (int c = 0; c < static_cast<int>(curves.size()); ++c) {
    if (!is_closed(curves[c])) throw invalid_input("OpenCurve", "curve endpoints are not glued together");
    for (const auto& s : curves[c]) users[s.chord].push_back(c);
  }
  for (const auto& u : users)
    for (std::size_t x = 0; x < u.size(); ++x)
      for (std::size_t y = x + 1; y < u.size(); ++y) out.shared_chords.push_back({u[x], u[y]});

  struct Passage {
    int curve, in, out;
  };
  std::vector<std::vector<Passage>> at(vertex_count());
  for (int c = 0; c < static_cast<int>(curves.size()); ++c) {
    const Walk& w = curves[c];
    for (std::size_t s = 0; s < w.size(); ++s) {
      const Step& a = w[s];
      const Step& b = w[(s + 1) % w.size()];
      const int y = end(a), x = start(b);
      at[vertex_of(y)].push_back({c, position(y, ray_of(y, a.chord)), position(x, ray_of(x, b.chord))});
    }
  }
  for (int v = 0; v < vertex_count(); ++v) {
    const int m = static_cast<int>(cycle_[v].size());
    const auto& ps = at[v];
    for (std::size_t x = 0; x < ps.size(); ++x)
      for (std::size_t y = x + 1; y < ps.size(); ++y) {
        const auto& p = ps[x];
        const auto& q = ps[y];
        if (p.in == q.in || p.in == q.out || p.out == q.in || p.out == q.out) continue;  // shared chord
        if (strictly_inside(q.in, p.in, p.out, m) != strictly_inside(q.out, p.in, p.out, m))
          out.crossings.push_back({std::min(p.curve, q.curve), std::max(p.curve, q.curve)});
      }
  }
  std::sort(out.shared_chords.begin(), out.shared_chords.end());
  out.shared_chords.erase(std::unique(out.shared_chords.begin(), out.shared_chords.end()), out.shared_chords.end());
  std::sort(out.crossings.begin(), out.crossings.end());
  out.crossings.erase(std::unique(out.crossings.begin(), out.crossings.end()), out.crossings.end());
  out.disjoint = out.shared_chords.empty() && out.crossings.empty();
  if (!out.disjoint) return out;

  // Sectors at a vertex lie in the same region iff no passage separates them.
  std::vector<std::vector<int>> region(vertex_count());
  int next = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    const int m = static_cast<int>(cycle_[v].size());
    std::map<std::vector<bool>, int> ids;
    for (int s = 0; s < m; ++s) {
      std::vector<bool> sig;
      for (const auto& p : at[v]) sig.push_back(mod(s - p.in, m) < mod(p.out - p.in, m));
      auto [it, fresh] = ids.emplace(sig, next);
      if (fresh) ++next;
      region[v].push_back(it->second);
    }
  }
  std::vector<bool> cut(C, false);
  for (const auto& w : curves)
    for (const auto& s : w) cut[s.chord] = true;
  std::vector<int> face_component;
  out.components = tally(region, cut, face_component);
  for (const auto& w : curves) {
    const int p = start(w[0]);
    const int t = ray_of(p, w[0].chord);
    const int left = face_component[sector_face_[p][t]];
    const int right = face_component[sector_face_[p][t - 1]];
    out.side_components.push_back({left, right});
    ++out.components[left].boundaries;
    ++out.components[right].boundaries;
  }
  return out;
}

CutAnalysis ChordComplex::cut_along(const std::vector<int>& chord_ids) const {
  const int C = static_cast<int>(chords_.size());
  std::vector<bool> cut(C, false);
  for (int id : chord_ids) cut.at(id) = true;
  auto is_cut_slot = [&](const Slot& s) {
    const int e = rays_[s.point][s.ray].edge;
    return e < C && cut[e];
  };

  std::vector<std::vector<int>> region(vertex_count());
  int next = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    const int m = static_cast<int>(cycle_[v].size());
    std::vector<int> gap_of_ray(m, -1);
    for (int s = 0; s < m; ++s)
      if (is_cut_slot(cycle_[v][s])) gap_of_ray[s] = next++;
    if (std::none_of(gap_of_ray.begin(), gap_of_ray.end(), [](int x) { return x >= 0; })) {
      region[v].assign(m, next++);
      continue;
    }
    int current = -1;
    for (int s = m - 1; s >= 0 && current < 0; --s) current = gap_of_ray[s];
    for (int s = 0; s < m; ++s) {
      if (gap_of_ray[s] >= 0) current = gap_of_ray[s];
      region[v].push_back(current);
    }
  }

  CutAnalysis out;
  out.components = tally(region, cut, out.face_component);

  // Boundary circles, traversed with the kept surface on the left.
  std::map<Step, bool> seen;
  for (int id : chord_ids)
    for (bool fwd : {true, false}) {
      const Step first{id, fwd};
      if (seen[first]) continue;
      BoundaryCircle circle;
      Step cur = first;
      do {
        seen[cur] = true;
        circle.steps.push_back(cur);
        const int y = end(cur);
        const int v = vertex_of(y);
        const int m = static_cast<int>(cycle_[v].size());
        const int P0 = position(y, ray_of(y, cur.chord));
        for (int d = 1; d <= m; ++d) {
          const Slot& slot = cycle_[v][mod(P0 - d, m)];
          if (!is_cut_slot(slot)) continue;
          const int e = rays_[slot.point][slot.ray].edge;
          cur = Step{e, chords_[e].a == slot.point};
          break;
        }
        circle.junctions.push_back(v);
      } while (!(cur == first));
      circle.component = out.face_component[left_face(first)];
      ++out.components[circle.component].boundaries;
      out.circles.push_back(std::move(circle));
    }
  return out;
}

}  // namespace hyppants
