#include "hyppants/tuple.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "hyppants/error.hpp"

namespace hyppants {

bool is_canonical(const std::vector<int>& values) {
  if (values.empty() || values.size() % 2 != 0) return false;
  const int g = static_cast<int>(values.size()) / 2;
  std::vector<int> count(g + 1, 0);
  for (int v : values) {
    if (v < 1 || v > g) return false;
    ++count[v];
  }
  return std::all_of(count.begin() + 1, count.end(), [](int c) { return c == 2; });
}

CanonicalTuple make_tuple(std::vector<int> values) {
  if (!is_canonical(values))
    throw invalid_input("NotCanonical", "tuple must take each value 1..g exactly twice on 2g positions");
  return CanonicalTuple{std::move(values)};
}

std::string to_string(const CanonicalTuple& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.values.size(); ++i) s += (i ? "," : "") + std::to_string(f.values[i]);
  return s + ")";
}

std::string to_string(EquivalenceMove m) {
  switch (m) {
    case EquivalenceMove::Reversal: return "reversal";
    case EquivalenceMove::SwapFirst: return "swap-first";
    case EquivalenceMove::SwapLast: return "swap-last";
    case EquivalenceMove::PartitionRelabel: return "partition-relabel";
  }
  return "?";
}

CanonicalTuple normalized(const CanonicalTuple& f) {
  std::vector<int> label(f.values.size() / 2 + 1, 0);
  int next = 0;
  CanonicalTuple out;
  for (int v : f.values) {
    if (!label[v]) label[v] = ++next;
    out.values.push_back(label[v]);
  }
  return out;
}

CanonicalTuple apply(const CanonicalTuple& f, EquivalenceMove m) {
  CanonicalTuple out = f;
  auto& v = out.values;
  switch (m) {
    case EquivalenceMove::Reversal: std::reverse(v.begin(), v.end()); break;
    case EquivalenceMove::SwapFirst: std::swap(v[0], v[1]); break;
    case EquivalenceMove::SwapLast: std::swap(v[v.size() - 2], v[v.size() - 1]); break;
    case EquivalenceMove::PartitionRelabel: return normalized(f);
  }
  return out;
}

std::vector<std::array<int, 2>> fiber_partition(const CanonicalTuple& f) {
  std::vector<std::array<int, 2>> fibers(f.genus() + 1, {0, 0});
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    auto& fb = fibers[f.values[i]];
    (fb[0] ? fb[1] : fb[0]) = static_cast<int>(i) + 1;
  }
  fibers.erase(fibers.begin());
  std::sort(fibers.begin(), fibers.end());
  return fibers;
}

long inversion_length(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int s : sigma) {
    if (s < 0 || s >= static_cast<int>(sigma.size()) || seen[s])
      throw invalid_input("NotPermutation", "not a permutation");
    seen[s] = true;
  }
  long inv = 0;
  for (std::size_t a = 0; a < sigma.size(); ++a)
    for (std::size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) ++inv;
  return inv;
}

CanonicalTuple compose(const CanonicalTuple& f, const Permutation& sigma) {
  CanonicalTuple out;
  for (int s : sigma) out.values.push_back(f.values[s]);
  return out;
}

namespace {

void require_same_genus(const CanonicalTuple& f1, const CanonicalTuple& f2) {
  if (f1.values.size() != f2.values.size())
    throw invalid_input("GenusMismatch", "tuples " + to_string(f1) + " and " + to_string(f2) + " differ in length");
}

}  // namespace

std::vector<Permutation> connecting_permutations(const CanonicalTuple& f1, const CanonicalTuple& f2) {
  require_same_genus(f1, f2);
  const int g = f1.genus();
  std::vector<std::array<int, 2>> pos1(g + 1), pos2(g + 1);
  for (const auto& [f, pos] : {std::pair{&f1, &pos1}, std::pair{&f2, &pos2}}) {
    std::vector<int> seen(g + 1, 0);
    for (std::size_t i = 0; i < f->values.size(); ++i) (*pos)[f->values[i]][seen[f->values[i]]++] = static_cast<int>(i);
  }
  std::vector<Permutation> out;
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    Permutation s(f1.values.size());
    for (int v = 1; v <= g; ++v) {
      const bool flip = (mask >> (v - 1)) & 1u;
      s[pos2[v][0]] = pos1[v][flip ? 1 : 0];
      s[pos2[v][1]] = pos1[v][flip ? 0 : 1];
    }
    out.push_back(std::move(s));
  }
  return out;
}

long tuple_distance(const CanonicalTuple& f1, const CanonicalTuple& f2) {
  require_same_genus(f1, f2);
  // Matching equal values in order never loses to a crossed matching.
  const int g = f1.genus();
  std::vector<std::vector<int>> pos1(g + 1);
  for (std::size_t i = 0; i < f1.values.size(); ++i) pos1[f1.values[i]].push_back(static_cast<int>(i));
  std::vector<int> used(g + 1, 0);
  Permutation s;
  for (int v : f2.values) s.push_back(pos1[v][used[v]++]);
  return inversion_length(s);
}

std::set<CanonicalTuple> class_partitions(const CanonicalTuple& f, std::size_t orbit_cap) {
  std::set<CanonicalTuple> seen{normalized(f)};
  std::deque<CanonicalTuple> queue{normalized(f)};
  while (!queue.empty()) {
    auto t = queue.front();
    queue.pop_front();
    for (auto m : {EquivalenceMove::Reversal, EquivalenceMove::SwapFirst, EquivalenceMove::SwapLast}) {
      auto u = normalized(apply(t, m));
      if (seen.insert(u).second) {
        if (seen.size() > orbit_cap)
          throw invalid_input("OrbitBudgetExceeded", "class of " + to_string(f) + " exceeds the orbit cap of " +
                                                         std::to_string(orbit_cap));
        queue.push_back(u);
      }
    }
  }
  return seen;
}

namespace {

// Each fiber partition carries g! labellings.
void check_labelled_size(std::size_t partitions, int g, std::size_t orbit_cap, const CanonicalTuple& f) {
  double size = static_cast<double>(partitions);
  for (int i = 2; i <= g; ++i) size *= i;
  if (size > static_cast<double>(orbit_cap))
    throw invalid_input("OrbitBudgetExceeded",
                        "class of " + to_string(f) + " exceeds the orbit cap of " + std::to_string(orbit_cap));
}

}  // namespace

std::set<CanonicalTuple> class_members(const CanonicalTuple& f, std::size_t orbit_cap) {
  const auto parts = class_partitions(f, orbit_cap);
  check_labelled_size(parts.size(), f.genus(), orbit_cap, f);
  std::set<CanonicalTuple> out;
  std::vector<int> label(f.genus());
  for (const auto& t : parts) {
    std::iota(label.begin(), label.end(), 1);
    do {
      CanonicalTuple u;
      for (int v : t.values) u.values.push_back(label[v - 1]);
      out.insert(std::move(u));
    } while (std::next_permutation(label.begin(), label.end()));
  }
  return out;
}

CanonicalTuple class_key(const CanonicalTuple& f, std::size_t orbit_cap) {
  return *class_partitions(f, orbit_cap).begin();
}

bool equivalent(const CanonicalTuple& f1, const CanonicalTuple& f2, std::size_t orbit_cap) {
  require_same_genus(f1, f2);
  return class_key(f1, orbit_cap) == class_key(f2, orbit_cap);
}

long class_distance(const CanonicalTuple& f1, const CanonicalTuple& f2, std::size_t orbit_cap) {
  require_same_genus(f1, f2);
  const auto p1 = class_partitions(f1, orbit_cap);
  const auto p2 = class_partitions(f2, orbit_cap);
  check_labelled_size(p2.size(), f2.genus(), orbit_cap, f2);
  // Relabelling both sides together preserves d, so f1's labels stay fixed.
  long best = -1;
  std::vector<int> label(f1.genus());
  for (const auto& a : p1)
    for (const auto& b : p2) {
      std::iota(label.begin(), label.end(), 1);
      do {
        CanonicalTuple u;
        for (int v : b.values) u.values.push_back(label[v - 1]);
        const long d = tuple_distance(a, u);
        if (best < 0 || d < best) best = d;
        if (best == 0) return 0;
      } while (std::next_permutation(label.begin(), label.end()));
    }
  return best;
}

std::string arrangement_case(const Polygon& p) {
  const int g = genus(p.source);
  const std::string trace = "n = " + std::to_string(p.n) + ", n1 = " + std::to_string(p.n1) +
                            ", n2 = " + std::to_string(p.n2) + ", k = " + std::to_string(p.k) +
                            ", g = " + std::to_string(g);
  if (p.n1 == 2 || p.n2 == 2) {
    if (p.k == 4 * g) return "2a";
    if (p.k == 4 * g + 2) return "2b";
    throw verification_failure("UnhandledCase", "case 2 needs a 4g- or (4g+2)-gon: " + trace);
  }
  return p.n1 % 2 == 0 ? "1a" : "1b";
}

CanonicalTuple region_sequence_tuple(const Polygon& p) {
  const std::string c = arrangement_case(p);
  if (c[0] != '2') throw verification_failure("UnhandledCase", "no fixed block order for case " + c);
  const int g = genus(p.source);
  std::vector<int> order;
  if (c == "2a") {
    for (int t = 0; t < g; ++t) order.insert(order.end(), {g - t, g + 1 + t});
  } else {
    for (int t = 0; t < g; ++t) order.insert(order.end(), {g - t, g + 2 + t});
  }
  std::vector<int> label(p.k / 2 + 1, 0);
  int next = 0;
  CanonicalTuple f;
  for (int r : order) {
    const int partner = region_partner(p, r);
    if (!label[r]) label[r] = label[partner] = ++next;
    f.values.push_back(label[r]);
  }
  if (!is_canonical(f.values))
    throw verification_failure("UnhandledCase", "case " + c + " block order does not pair regions: " + to_string(f));
  return f;
}

std::vector<ChainEncoding> chain_encodings(const CurveSystem& cs, const PantsDecomposition& pd) {
  std::vector<Walk> walks;
  for (const auto& c : pd.curves) walks.push_back(c.walk);
  const auto a = cs.complex().analyze(walks);
  const int V = static_cast<int>(a.components.size());
  const int E = static_cast<int>(walks.size());

  std::vector<std::vector<std::pair<int, int>>> adj(V);  // (curve, other side)
  for (int c = 0; c < E; ++c) {
    auto [l, r] = a.side_components[c];
    if (l == r) continue;
    adj[l].push_back({c, r});
    adj[r].push_back({c, l});
  }

  std::vector<ChainEncoding> out;
  std::vector<int> path, links;
  std::vector<bool> on_path(V, false);

  auto emit = [&] {
    std::vector<bool> is_link(E, false);
    for (int c : links) is_link[c] = true;
    ChainEncoding enc;
    enc.chain = path;
    enc.links = links;
    std::vector<int> label(E, 0);
    for (int v : path) {
      std::vector<int> holes;
      for (int c = 0; c < E; ++c) {
        if (is_link[c]) continue;
        if (a.side_components[c][0] == v) holes.push_back(c);
        if (a.side_components[c][1] == v) holes.push_back(c);
      }
      for (int c : holes) {
        if (!label[c]) {
          enc.handles.push_back(c);
          label[c] = static_cast<int>(enc.handles.size());
        }
        enc.tuple.values.push_back(label[c]);
      }
    }
    out.push_back(std::move(enc));
  };

  std::function<void(int)> extend = [&](int v) {
    if (static_cast<int>(path.size()) == V) {
      if (V == 1 || path.front() < path.back()) emit();
      return;
    }
    for (auto [c, w] : adj[v]) {
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      links.push_back(c);
      extend(w);
      links.pop_back();
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (int s = 0; s < V; ++s) {
    on_path[s] = true;
    path = {s};
    extend(s);
    on_path[s] = false;
  }
  return out;
}

TupleEncoding from_pants(const CurveSystem& cs, const PantsDecomposition& pd) {
  if (!pd.verification.ok) throw verification_failure("NotPants", "cannot encode an unverified decomposition");
  TupleEncoding e;
  e.arrangement = arrangement_case(cs.polygon());
  auto chains = chain_encodings(cs, pd);
  if (chains.empty())
    throw verification_failure("UnhandledCase", "case " + e.arrangement + ": the dual graph of the " +
                                                    std::to_string(pd.curves.size()) +
                                                    " curves has no Hamiltonian path, so no linear arrangement exists");
  e.chains = chains.size();
  std::set<CanonicalTuple> keys;
  std::size_t best = 0;
  CanonicalTuple best_key;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    auto key = class_key(chains[i].tuple);
    if (i == 0 || key < best_key) {
      best = i;
      best_key = key;
    }
    keys.insert(std::move(key));
  }
  e.classes = keys.size();
  e.chosen = chains[best];
  if (e.arrangement[0] == '2') e.region_sequence = region_sequence_tuple(cs.polygon());
  return e;
}

nlohmann::json tuple_report(const CanonicalTuple& f, std::size_t class_size) {
  nlohmann::json j;
  j["values"] = f.values;
  auto fibers = nlohmann::json::array();
  for (const auto& fb : fiber_partition(f)) fibers.push_back({fb[0], fb[1]});
  j["fiber_partition"] = fibers;
  if (class_size) j["class_size"] = class_size;
  return j;
}

nlohmann::json encoding_report(const CurveSystem& cs, const PantsDecomposition& pd, const TupleEncoding& e) {
  auto j = tuple_report(e.chosen.tuple, class_members(e.chosen.tuple).size());
  j["data_set"] = to_string(cs.polygon().source);
  j["genus"] = cs.genus();
  j["arrangement_case"] = e.arrangement;
  j["class_key"] = class_key(e.chosen.tuple).values;
  j["chain"] = e.chosen.chain;
  auto names = [&](const std::vector<int>& ids) {
    auto arr = nlohmann::json::array();
    for (int c : ids) arr.push_back(pd.curves[c].name());
    return arr;
  };
  j["links"] = names(e.chosen.links);
  j["handles"] = names(e.chosen.handles);
  j["chains_examined"] = e.chains;
  j["classes_among_chains"] = e.classes;
  if (e.region_sequence) {
    j["region_sequence_tuple"] = e.region_sequence->values;
    j["region_sequence_equivalent"] = equivalent(e.chosen.tuple, *e.region_sequence);
  }
  return j;
}

}  // namespace hyppants
