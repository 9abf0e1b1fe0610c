#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "hyppants/cli.hpp"
#include "hyppants/dataset.hpp"
#include "hyppants/svg.hpp"

using namespace hyppants;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args, std::optional<std::string> env_tol = std::nullopt) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, env_tol);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("hyppants_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string data_file(const DataSet& d) { return write(to_string(d) + ".json", to_json(d).dump()); }

const DataSet kD8{8, 0, 0, {{1, 2}, {1, 8}, {3, 8}}};
const DataSet kD10{10, 0, 0, {{1, 2}, {1, 5}, {3, 10}}};

std::string slurp(const std::string& path) {
  std::stringstream s;
  s << std::ifstream(path).rdbuf();
  return s.str();
}

// Tag balance check for the subset of XML the exporter writes.
bool well_formed(const std::string& xml) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool root_seen = false;
  while ((i = xml.find('<', i)) != std::string::npos) {
    const auto j = xml.find('>', i);
    if (j == std::string::npos) return false;
    std::string tag = xml.substr(i + 1, j - i - 1);
    i = j + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?') continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    if (stack.empty() && root_seen) return false;
    root_seen = true;
    if (tag.back() == '/') continue;
    stack.push_back(tag.substr(0, tag.find(' ')));
    if (std::count(tag.begin(), tag.end(), '"') % 2) return false;
  }
  return root_seen && stack.empty();
}

}  // namespace

TEST_CASE("validate") {
  auto r = call({"validate", data_file(kD8)});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["genus"] == 2);
  CHECK(j["class"] == "Type1Irreducible");
  CHECK_FALSE(r.err.empty());

  auto bad = call({"validate", write("bad.json", R"({"n":8,"g0":0,"cone":[[1,2],[1,8]]})")});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["valid"] == false);

  CHECK(call({"validate", (scratch() / "missing.json").string()}).code == 1);
  CHECK(call({"validate", write("junk.json", "{nope")}).code == 1);
  CHECK(call({"validate", write("extra.json", R"({"n":8,"g0":0,"cone":[],"x":1})")}).code == 1);
}

TEST_CASE("enumerate") {
  auto r = call({"enumerate", "--genus", "2"});
  REQUIRE(r.code == 0);
  auto arr = nlohmann::json::parse(r.out);
  const auto oracle = enumerate_irreducible_type1(2);
  REQUIRE(arr.size() == oracle.size());
  bool d8 = false, d10 = false;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto d = data_set_from_json(arr[i]);
    CHECK(validate(d).ok());
    CHECK(d == oracle[i]);
    d8 |= d == kD8;
    d10 |= d == kD10;
  }
  CHECK(d8);
  CHECK(d10);
  CHECK(call({"enumerate", "--genus", "1"}).code == 1);
  CHECK(call({"enumerate"}).code == 1);
}

TEST_CASE("polygon and figures") {
  for (int g = 2; g <= 3; ++g)
    for (const auto& d : enumerate_irreducible_type1(g)) {
      const auto svg = (scratch() / "fig.svg").string();
      auto r = call({"polygon", data_file(d), "--svg", svg});
      CHECK(r.code == 0);
      auto j = nlohmann::json::parse(r.out);
      CHECK(j["metric"]["certified"] == true);
      const auto text = slurp(svg);
      CHECK(well_formed(text));
      CHECK(text.find("version=\"1.1\"") != std::string::npos);
    }
  auto r = call({"pants", data_file(kD10), "--svg", (scratch() / "pants.svg").string()});
  CHECK(r.code == 0);
  const auto text = slurp((scratch() / "pants.svg").string());
  CHECK(well_formed(text));
  CHECK(text.find("gamma_1") != std::string::npos);
  CHECK_FALSE(well_formed("<svg><g></svg></g>"));
}

TEST_CASE("geodesic paths") {
  // Points on a diameter give a straight segment, others an arc.
  CHECK(geodesic_path({0.5, 0.0}, {-0.5, 0.0}, 100, 90).find(" L ") != std::string::npos);
  CHECK(geodesic_path({0.5, 0.0}, {0.0, 0.5}, 100, 90).find(" A ") != std::string::npos);
  // The arc through (r,0) and (0,r) lies on the circle centred (m,m), m = (r^2+1)/(2r).
  const double r = 0.5, m = (r * r + 1) / (2 * r);
  const double radius = std::sqrt(2 * m * m - 1) * 90;
  auto path = geodesic_path({r, 0.0}, {0.0, r}, 100, 90);
  std::istringstream in(path.substr(path.find('A') + 1));
  double rx = 0;
  in >> rx;
  CHECK(rx == doctest::Approx(radius).epsilon(1e-4));
}

TEST_CASE("pants and encode") {
  auto r = call({"pants", data_file(kD8)});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(j["curves"].size() == 3);

  auto low = call({"pants", data_file(kD8), "--bers", "0.5"});
  CHECK(low.code == 0);
  CHECK(nlohmann::json::parse(low.out)["admissible"] == false);

  auto e = call({"encode", data_file(kD10)});
  REQUIRE(e.code == 0);
  auto t = nlohmann::json::parse(e.out);
  CHECK(t["values"].size() == 4);
  CHECK(t["arrangement_case"] == "2b");
}

TEST_CASE("distance reports") {
  auto a = call({"distance", data_file(kD8), data_file(kD10)});
  auto b = call({"distance", data_file(kD10), data_file(kD8)});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == "hyppants/report/1");
  CHECK(j["constants"].contains("note"));

  auto s = call({"distance", data_file(kD8), data_file(kD10), "--K", "2", "--eps", "1.5"});
  REQUIRE(s.code == 0);
  auto js = nlohmann::json::parse(s.out);
  CHECK_FALSE(js["constants"].contains("note"));
  CHECK(js["bound"].get<double>() == 2.0 * js["D"].get<long>() + 1.5);

  const auto g3 = enumerate_irreducible_type1(3).front();
  CHECK(call({"distance", data_file(kD8), data_file(g3)}).code == 1);
  CHECK(call({"distance", data_file(kD8)}).code == 1);
  CHECK(call({"distance", data_file(kD8), data_file(kD10), "--K", "0.5"}).code == 1);
}

TEST_CASE("tolerance and sign policy") {
  const auto f = data_file(kD8);
  CHECK(call({"polygon", f}, "abc").code == 1);
  CHECK(call({"polygon", f, "--tol", "1e-8"}, "abc").code == 0);
  // A tolerance below rounding error makes certification fail.
  CHECK(call({"polygon", f}, "1e-30").code == 2);
  CHECK(call({"polygon", f, "--tol", "-1"}).code == 1);
  CHECK(call({"polygon", f, "--sign-policy", "plus"}).code == 2);
  CHECK(call({"polygon", f, "--sign-policy", "minus"}).code == 0);
  CHECK(call({"polygon", f, "--sign-policy", "sideways"}).code == 1);
  auto r = call({"encode", f, "--orbit-cap", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("OrbitBudgetExceeded") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}
