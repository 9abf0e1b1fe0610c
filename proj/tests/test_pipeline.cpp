#include <doctest.h>

#include <algorithm>

#include "hyppants/error.hpp"
#include "hyppants/pipeline.hpp"

using namespace hyppants;

namespace {

const DataSet kD8{8, 0, 0, {{1, 2}, {1, 8}, {3, 8}}};
const DataSet kD10{10, 0, 0, {{1, 2}, {1, 5}, {3, 10}}};

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() + "|" + e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("upper bound arithmetic") {
  QuasiIsometryParams q;
  q.K = 3.0;
  q.eps = 0.25;
  CHECK(wp_upper_bound(0, q) == 0.25);
  CHECK(wp_upper_bound(1, {1.0, 0.0, true}) == 1.0);
  CHECK(wp_upper_bound(6, {2.5, 3.0, true}) == 18.0);
  CHECK_THROWS_AS(wp_upper_bound(-1, q), Error);
}

TEST_CASE("parameter checks") {
  CHECK_THROWS_AS(check(QuasiIsometryParams{0.5, 0.0, true}), Error);
  CHECK_THROWS_AS(check(QuasiIsometryParams{1.0, -1.0, true}), Error);
  CHECK_NOTHROW(check(QuasiIsometryParams{}));
  PipelineConfig c;
  c.tol = 0.0;
  CHECK_THROWS_AS(check(c), Error);
  c.tol = 1e-9;
  c.orbit_cap = 0;
  CHECK_THROWS_AS(check(c), Error);
  c.orbit_cap = 10;
  c.bers_override = -2.0;
  CHECK_THROWS_AS(check(c), Error);
}

TEST_CASE("order 8 against order 10") {
  auto r = compare(kD8, kD10, {}, {});
  CHECK(r.first.genus == 2);
  // Oracle: brute force over both classes.
  long best = 1L << 30;
  for (const auto& a : class_members(r.first.encoding.chosen.tuple))
    for (const auto& b : class_members(r.second.encoding.chosen.tuple)) best = std::min(best, tuple_distance(a, b));
  CHECK(r.D == best);
  CHECK(r.bound == static_cast<double>(r.D));
  auto j = to_json(r);
  CHECK(j["schema"] == "hyppants/report/1");
  CHECK(j["actions"].size() == 2);
  CHECK(j["constants"]["note"].get<std::string>().find("illustrative") == 0);
  CHECK(j["conventions"]["sign_policy"] == "auto");
  CHECK(j["conventions"]["bers"] == doctest::Approx(bers_default(2)));
  CHECK(j["actions"][0]["pants"]["verified"] == true);
  CHECK(j["actions"][0]["metric"]["closed_form_convention"].is_string());
}

TEST_CASE("reports are deterministic and symmetric") {
  QuasiIsometryParams q{2.0, 0.5, true};
  const auto a = to_json(compare(kD8, kD10, q, {})).dump();
  const auto b = to_json(compare(kD8, kD10, q, {})).dump();
  const auto c = to_json(compare(kD10, kD8, q, {})).dump();
  CHECK(a == b);
  CHECK(a == c);
  auto j = nlohmann::json::parse(a);
  CHECK_FALSE(j["constants"].contains("note"));
  CHECK(j["bound"].get<double>() == 2.0 * j["D"].get<long>() + 0.5);
}

TEST_CASE("an action against itself") {
  auto r = compare(kD10, kD10, {1.0, 0.75, true}, {});
  CHECK(r.D == 0);
  CHECK(r.bound == 0.75);
}

TEST_CASE("genus 3 pairs are symmetric") {
  const auto ds = enumerate_irreducible_type1(3);
  REQUIRE(ds.size() >= 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      auto r1 = compare(ds[a], ds[b], {}, {});
      auto r2 = compare(ds[b], ds[a], {}, {});
      CHECK(r1.D == r2.D);
      CHECK(r1.bound == r2.bound);
      CHECK(r1.D == class_distance(r1.first.encoding.chosen.tuple, r1.second.encoding.chosen.tuple));
    }
}

TEST_CASE("errors name their stage") {
  CHECK(code_of([] { compare(kD8, enumerate_irreducible_type1(3).front(), {}, {}); }).rfind("GenusMismatch|", 0) == 0);
  CHECK(code_of([] { analyze_action(DataSet{8, 0, 0, {{1, 2}, {1, 8}}}, {}); }).find("|validate: ") != std::string::npos);
  // Valid data set that is not an irreducible Type 1 action.
  const auto reducible = code_of([] { analyze_action(DataSet{2, 0, 0, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}}, {}); });
  CHECK(reducible.find("|polygon: ") != std::string::npos);

  PipelineConfig plus;
  plus.sign_policy = SignPolicy::Plus;
  try {
    analyze_action(kD8, plus);
    FAIL("expected ConventionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "ConventionMismatch");
    CHECK(e.kind() == ErrorKind::Verification);
    CHECK(std::string(e.what()).rfind("metric: ", 0) == 0);
  }

  PipelineConfig tight;
  tight.orbit_cap = 1;
  CHECK(code_of([&] { compare(kD8, kD10, {}, tight); }).rfind("OrbitBudgetExceeded|", 0) == 0);
}

TEST_CASE("report round trip") {
  auto j = nlohmann::json::parse(to_json(compare(kD8, kD10, {}, {})).dump());
  for (const auto& side : j["actions"]) {
    auto d = data_set_from_json(side["data_set"]);
    CHECK(validate(d).ok());
    CHECK(is_canonical(side["tuple"]["values"].get<std::vector<int>>()));
  }
}

TEST_CASE("Bers override reaches the admissibility test") {
  PipelineConfig c;
  c.bers_override = 0.5;
  auto a = analyze_action(kD8, c);
  CHECK(a.bers == 0.5);
  CHECK(std::none_of(a.pants.admissible.begin(), a.pants.admissible.end(), [](bool b) { return b; }));
}
