#include "hyppants/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyppants/error.hpp"
#include "hyppants/pipeline.hpp"
#include "hyppants/svg.hpp"

namespace hyppants::cli {

namespace {

nlohmann::json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw invalid_input("Io", "cannot read " + path);
    buf << in.rdbuf();
  }
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input("Json", path + ": " + e.what());
  }
}

DataSet read_data_set(const std::string& path) { return data_set_from_json(read_json(path)); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o || !(o << text)) throw invalid_input("Io", "cannot write " + path);
}

double parse_tol(const std::string& s, const char* source) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(v > 0.0))
    throw invalid_input("Config", std::string(source) + " must be a positive number, got '" + s + "'");
  return v;
}

PipelineConfig pipeline_config(const Config& c) {
  PipelineConfig p;
  p.bers_override = c.bers_override;
  p.tol = c.tol;
  p.sign_policy = c.sign_policy;
  p.orbit_cap = c.orbit_cap;
  check(p);
  return p;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

// Builds the polygon and certifies its metric; shared by polygon and pants.
struct Certified {
  std::shared_ptr<const CurveSystem> cs;
  EmbeddingCertificate cert;
  ConventionResolution conv;
};

Certified certified(const DataSet& raw, const PipelineConfig& pc) {
  Certified c;
  const DataSet d = validated(raw);
  c.cs = std::make_shared<const CurveSystem>(build_polygon(d));
  c.cert = certify(c.cs->polygon(), c.cs->embedding(), pc.tol);
  c.conv = resolve_convention(c.cs->polygon(), c.cs->embedding(), pc.sign_policy, pc.tol);
  return c;
}

nlohmann::json metric_json(const Certified& c) {
  auto rejected = nlohmann::json::array();
  for (const auto& [conv, error] : c.conv.rejected) rejected.push_back({{"convention", to_string(conv)}, {"error", error}});
  const auto& e = c.cs->embedding();
  return {
      {"L1", e.radial.L1},
      {"L2", e.radial.L2},
      {"edge_length", e.edge_length(1)},
      {"edge_spread", c.cert.edge_spread},
      {"corner_error", c.cert.corner_error},
      {"orbit_sum_error", c.cert.orbit_sum_error},
      {"certified", c.cert.ok},
      {"closed_form_convention", to_string(c.conv.chosen)},
      {"closed_form_matched", c.conv.matched},
      {"closed_form_max_error", c.conv.max_error},
      {"rejected_conventions", rejected},
  };
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const DataSet d = read_data_set(path);
  const auto v = validate(d);
  nlohmann::json j;
  j["valid"] = v.ok();
  j["data_set"] = to_json(d);
  j["violations"] = v.violations;
  if (v.ok()) {
    j["label"] = to_string(*v.data_set);
    j["genus"] = genus(*v.data_set);
    j["class"] = to_string(classify(*v.data_set));
  }
  emit(out, j);
  if (!v.ok()) {
    err << "invalid data set: violated";
    for (const auto& s : v.violations) err << " " << s;
    err << "\n";
    return kInvalidInput;
  }
  err << to_string(*v.data_set) << ": valid, genus " << genus(*v.data_set) << "\n";
  return kOk;
}

int cmd_enumerate(int g, std::ostream& out, std::ostream& err) {
  auto arr = nlohmann::json::array();
  const auto ds = enumerate_irreducible_type1(g);
  for (const auto& d : ds) arr.push_back(to_json(d));
  emit(out, arr);
  err << ds.size() << " irreducible Type 1 data sets of genus " << g << "\n";
  return kOk;
}

int cmd_polygon(const std::string& path, const Config& cfg, const std::string& svg, std::ostream& out,
                std::ostream& err) {
  const auto pc = pipeline_config(cfg);
  const auto c = certified(read_data_set(path), pc);
  auto j = polygon_report(c.cs->polygon());
  j["metric"] = metric_json(c);
  emit(out, j);
  if (!svg.empty()) write_file(svg, polygon_svg(*c.cs));
  if (!c.cert.ok || !c.conv.matched) {
    err << "metric verification failed: " << (c.cert.ok ? "no closed-form convention matches" : "embedding not certified")
        << "\n";
    return kVerificationFailure;
  }
  err << "polygon with " << c.cs->polygon().k << " edges certified within " << pc.tol << "\n";
  return kOk;
}

int cmd_pants(const std::string& path, const Config& cfg, const std::string& svg, std::ostream& out,
              std::ostream& err) {
  const auto pc = pipeline_config(cfg);
  const auto c = certified(read_data_set(path), pc);
  const int g = c.cs->genus();
  const auto pd = try_extract_pants(*c.cs, pc.bers(g), pc.extract);
  auto j = pants_report(*c.cs, pd);
  j["metric"] = metric_json(c);
  emit(out, j);
  if (!svg.empty()) write_file(svg, polygon_svg(*c.cs, pd.curves));
  if (!pd.verification.ok) {
    err << "NotPants:";
    for (const auto& v : pd.verification.violations) err << " " << v << ";";
    err << "\n";
    return kVerificationFailure;
  }
  err << pd.curves.size() << " curves verified as a pants decomposition (" << to_string(pd.tier) << ")\n";
  return kOk;
}

int cmd_encode(const std::string& path, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto pc = pipeline_config(cfg);
  const auto a = analyze_action(read_data_set(path), pc);
  auto j = action_report(a, pc)["tuple"];
  emit(out, j);
  err << "tuple " << to_string(a.encoding.chosen.tuple) << " (case " << a.encoding.arrangement << ")\n";
  return kOk;
}

int cmd_distance(const std::string& p1, const std::string& p2, const Config& cfg, bool supplied, std::ostream& out,
                 std::ostream& err) {
  const auto pc = pipeline_config(cfg);
  QuasiIsometryParams q{cfg.K, cfg.eps, supplied};
  const auto r = compare(read_data_set(p1), read_data_set(p2), q, pc);
  emit(out, to_json(r));
  err << "D = " << r.D << ", bound = " << r.bound << (supplied ? "" : " (illustrative constants)") << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_tol) {
  CLI::App app{"Pants decompositions and tuple distances for periodic surface actions", "hyppants"};
  app.require_subcommand(1);

  Config cfg;
  std::string tol_text, sign_text = "auto", svg;
  std::vector<std::string> files;
  int genus_arg = 0;
  double bers = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol_text, "Numerical tolerance (falls back to HYPPANTS_TOL, then 1e-9)");
    sub->add_option("--sign-policy", sign_text, "Closed-form sign: auto, plus or minus");
    sub->add_option("--orbit-cap", cfg.orbit_cap, "Largest tuple class to enumerate");
    sub->add_option("--bers", bers, "Bers constant override");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a data set");
  validate_cmd->add_option("file", files, "Data set JSON")->required()->expected(1);
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List irreducible Type 1 data sets of a genus");
  enumerate_cmd->add_option("--genus", genus_arg, "Genus, at least 2")->required();
  auto* polygon_cmd = app.add_subcommand("polygon", "Side-paired polygon and its certified metric");
  polygon_cmd->add_option("file", files, "Data set JSON")->required()->expected(1);
  polygon_cmd->add_option("--svg", svg, "Write a figure");
  common(polygon_cmd);
  auto* pants_cmd = app.add_subcommand("pants", "Verified pants decomposition");
  pants_cmd->add_option("file", files, "Data set JSON")->required()->expected(1);
  pants_cmd->add_option("--svg", svg, "Write a figure with the curves");
  common(pants_cmd);
  auto* encode_cmd = app.add_subcommand("encode", "Canonical tuple of the pants decomposition");
  encode_cmd->add_option("file", files, "Data set JSON")->required()->expected(1);
  common(encode_cmd);
  auto* distance_cmd = app.add_subcommand("distance", "Class distance and Weil-Petersson bound");
  distance_cmd->add_option("files", files, "Two data set JSON files")->required()->expected(2);
  auto* k_opt = distance_cmd->add_option("--K", cfg.K, "Quasi-isometry multiplicative constant");
  auto* eps_opt = distance_cmd->add_option("--eps", cfg.eps, "Quasi-isometry additive constant");
  common(distance_cmd);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (!tol_text.empty()) cfg.tol = parse_tol(tol_text, "--tol");
    else if (env_tol && !env_tol->empty()) cfg.tol = parse_tol(*env_tol, "HYPPANTS_TOL");
    cfg.sign_policy = parse_sign_policy(sign_text);
    for (auto* sub : {polygon_cmd, pants_cmd, encode_cmd, distance_cmd})
      if (sub->get_option("--bers")->count()) cfg.bers_override = bers;

    if (*validate_cmd) return cmd_validate(files[0], out, err);
    if (*enumerate_cmd) return cmd_enumerate(genus_arg, out, err);
    if (*polygon_cmd) return cmd_polygon(files[0], cfg, svg, out, err);
    if (*pants_cmd) return cmd_pants(files[0], cfg, svg, out, err);
    if (*encode_cmd) return cmd_encode(files[0], cfg, out, err);
    return cmd_distance(files[0], files[1], cfg, k_opt->count() + eps_opt->count() > 0, out, err);
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidInput ? kInvalidInput : kVerificationFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace hyppants::cli
