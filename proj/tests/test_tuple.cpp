#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "hyppants/dataset.hpp"
#include "hyppants/error.hpp"
#include "hyppants/tuple.hpp"

using namespace hyppants;

namespace {

// Shortest word in adjacent transpositions, by BFS from the identity.
std::map<Permutation, int> word_lengths(int n) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::map<Permutation, int> dist{{id, 0}};
  std::deque<Permutation> q{id};
  while (!q.empty()) {
    auto p = q.front();
    q.pop_front();
    for (int i = 0; i + 1 < n; ++i) {
      auto r = p;
      std::swap(r[i], r[i + 1]);
      if (dist.emplace(r, dist[p] + 1).second) q.push_back(r);
    }
  }
  return dist;
}

std::vector<CanonicalTuple> all_tuples(int g) {
  std::vector<int> v;
  for (int i = 1; i <= g; ++i) v.insert(v.end(), {i, i});
  std::vector<CanonicalTuple> out;
  do out.push_back(CanonicalTuple{v});
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Generated equivalence, by BFS on raw tuples: the three position moves, and
// move (iv) read literally as "f2 repeats wherever f1 repeats".
std::set<CanonicalTuple> closure_oracle(const CanonicalTuple& f) {
  const int g = f.genus();
  const auto pool = all_tuples(g);
  auto repeats_preserved = [](const CanonicalTuple& a, const CanonicalTuple& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i)
      for (std::size_t j = 0; j < a.values.size(); ++j)
        if (i != j && a.values[i] == a.values[j] && b.values[i] != b.values[j]) return false;
    return true;
  };
  std::set<CanonicalTuple> seen{f};
  std::deque<CanonicalTuple> q{f};
  while (!q.empty()) {
    auto t = q.front();
    q.pop_front();
    std::vector<CanonicalTuple> next;
    auto r = t;
    std::reverse(r.values.begin(), r.values.end());
    next.push_back(r);
    auto a = t;
    std::swap(a.values[0], a.values[1]);
    next.push_back(a);
    auto b = t;
    std::swap(b.values[2 * g - 2], b.values[2 * g - 1]);
    next.push_back(b);
    for (const auto& u : pool)
      if (repeats_preserved(t, u) || repeats_preserved(u, t)) next.push_back(u);
    for (auto& u : next)
      if (seen.insert(u).second) q.push_back(u);
  }
  return seen;
}

}  // namespace

TEST_CASE("canonical tuple validation") {
  CHECK_NOTHROW(make_tuple({1, 2, 2, 1}));
  CHECK_THROWS_AS(make_tuple({1, 1, 1, 2}), Error);
  CHECK_THROWS_AS(make_tuple({1, 2, 3}), Error);
  CHECK_THROWS_AS(make_tuple({0, 0, 1, 1}), Error);
  CHECK_THROWS_AS(make_tuple({}), Error);
  CHECK(make_tuple({2, 1, 1, 2})(1) == 2);
}

TEST_CASE("moves keep tuples canonical") {
  for (int g = 1; g <= 3; ++g)
    for (const auto& f : all_tuples(g))
      for (auto m : {EquivalenceMove::Reversal, EquivalenceMove::SwapFirst, EquivalenceMove::SwapLast,
                     EquivalenceMove::PartitionRelabel})
        CHECK(is_canonical(apply(f, m).values));
  CHECK(apply(make_tuple({1, 1, 2, 2}), EquivalenceMove::Reversal).values == std::vector{2, 2, 1, 1});
  CHECK(apply(make_tuple({1, 2, 1, 2}), EquivalenceMove::SwapFirst).values == std::vector{2, 1, 1, 2});
  CHECK(apply(make_tuple({1, 2, 1, 2}), EquivalenceMove::SwapLast).values == std::vector{1, 2, 2, 1});
  CHECK(apply(make_tuple({2, 2, 1, 1}), EquivalenceMove::PartitionRelabel).values == std::vector{1, 1, 2, 2});
}

TEST_CASE("relabelling agrees with fiber partitions, g <= 3") {
  for (int g = 1; g <= 3; ++g) {
    const auto ts = all_tuples(g);
    for (const auto& a : ts)
      for (const auto& b : ts)
        CHECK((normalized(a) == normalized(b)) == (fiber_partition(a) == fiber_partition(b)));
  }
  auto fp = fiber_partition(make_tuple({2, 1, 2, 1}));
  REQUIRE(fp.size() == 2);
  CHECK(fp[0] == std::array{1, 3});
  CHECK(fp[1] == std::array{2, 4});
}

TEST_CASE("inversion count is the adjacent-transposition word length") {
  const auto w4 = word_lengths(4);
  CHECK(w4.size() == 24);
  for (const auto& [p, d] : w4) CHECK(inversion_length(p) == d);

  const auto w6 = word_lengths(6);
  std::mt19937 rng(20261016);
  Permutation p(6);
  std::iota(p.begin(), p.end(), 0);
  for (int t = 0; t < 200; ++t) {
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(inversion_length(p) == w6.at(p));
  }
  CHECK(inversion_length({3, 2, 1, 0}) == 6);
  CHECK(inversion_length({0, 1, 2, 3}) == 0);
  CHECK(inversion_length({1, 0, 2, 3}) == 1);
  CHECK_THROWS_AS(inversion_length({0, 0, 1}), Error);
}

TEST_CASE("tuple distance is the minimum over connecting permutations") {
  for (int g = 2; g <= 3; ++g) {
    const auto ts = all_tuples(g);
    for (const auto& a : ts)
      for (const auto& b : ts) {
        const auto sigmas = connecting_permutations(a, b);
        CHECK(sigmas.size() == (1u << g));
        long best = 1L << 30;
        for (const auto& s : sigmas) {
          CHECK(compose(a, s) == b);
          best = std::min(best, inversion_length(s));
        }
        CHECK(tuple_distance(a, b) == best);
        CHECK(tuple_distance(a, b) == tuple_distance(b, a));
        CHECK((tuple_distance(a, b) == 0) == (a == b));
      }
  }
  CHECK(tuple_distance(make_tuple({1, 1, 2, 2}), make_tuple({1, 2, 1, 2})) == 1);
  CHECK_THROWS_AS(tuple_distance(make_tuple({1, 1}), make_tuple({1, 1, 2, 2})), Error);
}

TEST_CASE("class closure matches the literal move oracle, g <= 3") {
  for (int g = 1; g <= 3; ++g)
    for (const auto& f : all_tuples(g)) {
      CAPTURE(to_string(f));
      const auto members = class_members(f);
      CHECK(members == closure_oracle(f));
      for (const auto& m : members) CHECK(class_key(m) == class_key(f));
    }
}

TEST_CASE("class distance against representatives, g <= 3") {
  for (int g = 2; g <= 3; ++g) {
    std::map<CanonicalTuple, std::set<CanonicalTuple>> classes;
    for (const auto& f : all_tuples(g)) classes.emplace(class_key(f), class_members(f));
    for (const auto& [ka, ma] : classes)
      for (const auto& [kb, mb] : classes) {
        long best = 1L << 30;
        for (const auto& a : ma)
          for (const auto& b : mb) best = std::min(best, tuple_distance(a, b));
        CHECK(class_distance(ka, kb) == best);
      }
  }
}

TEST_CASE("g = 2 class distance table") {
  const auto ts = all_tuples(2);
  REQUIRE(ts.size() == 6);
  std::set<CanonicalTuple> keys;
  for (const auto& f : ts) keys.insert(class_key(f));
  CHECK(keys.size() == 2);
  for (const auto& a : ts)
    for (const auto& b : ts) {
      const long dab = class_distance(a, b);
      CHECK(dab == class_distance(b, a));
      CHECK((dab == 0) == equivalent(a, b));
      for (const auto& c : ts) CHECK(class_distance(a, c) <= dab + class_distance(b, c));
    }
  CHECK(class_distance(make_tuple({1, 1, 2, 2}), make_tuple({1, 2, 1, 2})) == 1);
  CHECK(equivalent(make_tuple({1, 2, 1, 2}), make_tuple({1, 2, 2, 1})));
  CHECK(class_members(make_tuple({1, 1, 2, 2})).size() == 2);
  CHECK(class_members(make_tuple({1, 2, 1, 2})).size() == 4);
}

TEST_CASE("orbit cap") {
  const auto f = make_tuple({1, 2, 3, 1, 2, 3});
  CHECK_THROWS_AS(class_members(f, 5), Error);
  try {
    class_distance(f, make_tuple({1, 1, 2, 2, 3, 3}), 2);
    FAIL("expected OrbitBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == "OrbitBudgetExceeded");
  }
  CHECK_NOTHROW(class_members(f, 1000));
}

TEST_CASE("arrangement cases") {
  CHECK(arrangement_case(build_polygon({8, 0, 0, {{1, 2}, {1, 8}, {3, 8}}})) == "2a");
  CHECK(arrangement_case(build_polygon({10, 0, 0, {{1, 2}, {1, 5}, {3, 10}}})) == "2b");
  CHECK(arrangement_case(build_polygon({5, 0, 0, {{1, 5}, {1, 5}, {3, 5}}})) == "1b");
  CHECK(arrangement_case(build_polygon({12, 0, 0, {{1, 3}, {3, 4}, {11, 12}}})) == "1b");
  bool saw_1a = false;
  for (const auto& d : enumerate_irreducible_type1(3)) saw_1a |= arrangement_case(build_polygon(d)) == "1a";
  CHECK(saw_1a);
}

TEST_CASE("case 2 block order against the side pairing") {
  for (int g = 2; g <= 6; ++g)
    for (const auto& d : enumerate_irreducible_type1(g)) {
      auto p = build_polygon(d);
      if (arrangement_case(p)[0] != '2') {
        CHECK_THROWS_AS(region_sequence_tuple(p), Error);
        continue;
      }
      // Opposite pairing glues R_i to the region holding the partner of a_i.
      auto f = region_sequence_tuple(p);
      CHECK(static_cast<int>(f.values.size()) == 2 * g);
      for (int t = 0; t < g; ++t) {
        const int r = g - t;
        const int mate = p.pairing(r);
        const int region = std::min(mate, p.k + 1 - mate);
        CHECK(region == (p.k == 4 * g ? g + 1 + t : g + 2 + t));
        CHECK(f.values[2 * t] == f.values[2 * t + 1]);
      }
    }
}

TEST_CASE("octagon and decagon encodings") {
  CurveSystem oct(build_polygon({8, 0, 0, {{1, 2}, {1, 8}, {3, 8}}}));
  auto e = from_pants(oct, extract_pants(oct, bers_default(2)));
  CHECK(e.arrangement == "2a");
  CHECK(e.chosen.tuple.values.size() == 4);
  CHECK(e.chains == 3);
  CHECK(e.classes == 1);
  // The three curves are each non-separating, so the dual graph is a theta and
  // every linear chain reads as the class of (1,2,1,2). The fixed case 2a block
  // order gives the other g = 2 class.
  CHECK(equivalent(e.chosen.tuple, make_tuple({1, 2, 1, 2})));
  REQUIRE(e.region_sequence);
  CHECK(e.region_sequence->values == std::vector{1, 1, 2, 2});
  CHECK(class_distance(e.chosen.tuple, *e.region_sequence) == 1);

  CurveSystem dec(build_polygon({10, 0, 0, {{1, 2}, {1, 5}, {3, 10}}}));
  auto ed = from_pants(dec, extract_pants(dec, bers_default(2)));
  CHECK(ed.arrangement == "2b");
  CHECK(is_canonical(ed.chosen.tuple.values));
  CHECK(ed.chosen.tuple.values.size() == 4);
}

TEST_CASE("chain encodings cut to a sphere with 2g holes, g <= 3") {
  for (int g = 2; g <= 3; ++g)
    for (const auto& d : enumerate_irreducible_type1(g)) {
      CAPTURE(to_string(d));
      CurveSystem cs(build_polygon(d));
      auto pd = extract_pants(cs, bers_default(g));
      auto chains = chain_encodings(cs, pd);
      REQUIRE_FALSE(chains.empty());
      for (const auto& ch : chains) {
        CHECK(is_canonical(ch.tuple.values));
        CHECK(static_cast<int>(ch.handles.size()) == g);
        CHECK(static_cast<int>(ch.chain.size()) == 2 * g - 2);
        std::vector<Walk> handles;
        for (int c : ch.handles) handles.push_back(pd.curves[c].walk);
        auto a = cs.complex().analyze(handles);
        REQUIRE(a.components.size() == 1);
        CHECK(a.components[0].euler == 2 - 2 * g);
        CHECK(a.components[0].boundaries == 2 * g);
      }
      auto e = from_pants(cs, pd);
      for (const auto& ch : chains) CHECK_FALSE(class_key(ch.tuple) < class_key(e.chosen.tuple));
    }
}

TEST_CASE("encoding refuses unverified decompositions") {
  CurveSystem cs(build_polygon({8, 0, 0, {{1, 2}, {1, 8}, {3, 8}}}));
  auto pd = extract_pants(cs, bers_default(2));
  pd.verification.ok = false;
  CHECK_THROWS_AS(from_pants(cs, pd), Error);
}

TEST_CASE("tuple report") {
  auto j = tuple_report(make_tuple({1, 2, 1, 2}), 4);
  CHECK(j["values"] == nlohmann::json::array({1, 2, 1, 2}));
  CHECK(j["fiber_partition"][0] == nlohmann::json::array({1, 3}));
  CHECK(j["class_size"] == 4);
  CHECK_FALSE(tuple_report(make_tuple({1, 1})).contains("class_size"));
}
