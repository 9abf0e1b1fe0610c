#include "hyppants/pipeline.hpp"

#include <utility>

#include "hyppants/error.hpp"
#include "hyppants/polygon.hpp"

namespace hyppants {

namespace {

const char* kIllustrative = "illustrative; supply constants from Brock's theorem for rigorous bounds";

template <class F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), e.code(), std::string(name) + ": " + e.what());
  }
}

}  // namespace

void check(const QuasiIsometryParams& q) {
  if (!(q.K >= 1.0)) throw invalid_input("Config", "K must be at least 1");
  if (!(q.eps >= 0.0)) throw invalid_input("Config", "eps must be non-negative");
}

double wp_upper_bound(long D, const QuasiIsometryParams& q) {
  if (D < 0) throw invalid_input("Config", "class distance must be non-negative");
  return q.K * static_cast<double>(D) + q.eps;
}

void check(const PipelineConfig& c) {
  if (!(c.tol > 0.0)) throw invalid_input("Config", "tol must be positive");
  if (c.orbit_cap == 0) throw invalid_input("Config", "orbit cap must be positive");
  if (c.bers_override && !(*c.bers_override > 0.0)) throw invalid_input("Config", "Bers constant must be positive");
}

ActionAnalysis analyze_action(const DataSet& d, const PipelineConfig& config) {
  check(config);
  ActionAnalysis a;
  a.data_set = stage("validate", [&] { return validated(d); });
  a.genus = genus(a.data_set);
  a.curves = stage("polygon", [&] { return std::make_shared<const CurveSystem>(build_polygon(a.data_set)); });
  const CurveSystem& cs = *a.curves;
  stage("metric", [&] {
    a.certificate = certify(cs.polygon(), cs.embedding(), config.tol);
    if (!a.certificate.ok)
      throw verification_failure("MetricCertification", "embedding deviates from the polygon beyond tol");
    a.convention = resolve_convention(cs.polygon(), cs.embedding(), config.sign_policy, config.tol);
    if (!a.convention.matched)
      throw verification_failure("ConventionMismatch", "no closed-form convention under sign policy " +
                                                           to_string(config.sign_policy) +
                                                           " matches the coordinate lengths");
    return 0;
  });
  a.bers = config.bers(a.genus);
  a.pants = stage("pants", [&] { return extract_pants(cs, a.bers, config.extract); });
  a.encoding = stage("encode", [&] { return from_pants(cs, a.pants); });
  return a;
}

nlohmann::json action_report(const ActionAnalysis& a, const PipelineConfig& config) {
  const CurveSystem& cs = *a.curves;
  nlohmann::json j;
  j["data_set"] = to_json(a.data_set);
  j["label"] = to_string(a.data_set);
  j["polygon"] = polygon_report(cs.polygon());
  j["metric"] = {
      {"L1", cs.embedding().radial.L1},
      {"L2", cs.embedding().radial.L2},
      {"edge_spread", a.certificate.edge_spread},
      {"corner_error", a.certificate.corner_error},
      {"orbit_sum_error", a.certificate.orbit_sum_error},
      {"closed_form_convention", to_string(a.convention.chosen)},
      {"closed_form_max_error", a.convention.max_error},
  };
  j["pants"] = pants_report(cs, a.pants);
  j["tuple"] = stage("encode", [&] {
    auto t = encoding_report(cs, a.pants, a.encoding);
    t["class_size"] = class_members(a.encoding.chosen.tuple, config.orbit_cap).size();
    return t;
  });
  return j;
}

DistanceReport compare(const DataSet& d1, const DataSet& d2, const QuasiIsometryParams& params,
                       const PipelineConfig& config) {
  check(params);
  check(config);
  DistanceReport r;
  r.params = params;
  r.config = config;
  r.first = analyze_action(d1, config);
  r.second = analyze_action(d2, config);
  if (r.first.genus != r.second.genus)
    throw invalid_input("GenusMismatch", "actions live on genus " + std::to_string(r.first.genus) + " and genus " +
                                             std::to_string(r.second.genus));
  if (to_string(r.second.data_set) < to_string(r.first.data_set)) std::swap(r.first, r.second);
  r.D = stage("distance", [&] {
    return class_distance(r.first.encoding.chosen.tuple, r.second.encoding.chosen.tuple, config.orbit_cap);
  });
  r.bound = wp_upper_bound(r.D, params);
  return r;
}

nlohmann::json to_json(const DistanceReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["genus"] = r.first.genus;
  j["actions"] = {action_report(r.first, r.config), action_report(r.second, r.config)};
  j["D"] = r.D;
  j["D_meaning"] = "class distance between canonical tuples; combinatorial surrogate for pants-graph distance";
  j["bound"] = r.bound;
  nlohmann::json constants = {{"K", r.params.K}, {"eps", r.params.eps}};
  if (!r.params.supplied) constants["note"] = kIllustrative;
  j["constants"] = constants;
  j["conventions"] = {
      {"sign_policy", to_string(r.config.sign_policy)},
      {"bers", r.first.bers},
      {"bers_source", r.config.bers_override ? "override" : "default"},
      {"tol", r.config.tol},
      {"orbit_cap", r.config.orbit_cap},
  };
  return j;
}

}  // namespace hyppants
