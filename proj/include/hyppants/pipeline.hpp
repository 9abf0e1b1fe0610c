#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "hyppants/curve_system.hpp"
#include "hyppants/dataset.hpp"
#include "hyppants/hyperbolic.hpp"
#include "hyppants/tuple.hpp"

namespace hyppants {

inline constexpr const char* kReportSchema = "hyppants/report/1";

struct QuasiIsometryParams {
  double K = 1.0;
  double eps = 0.0;
  bool supplied = false;  // false: defaults, labelled illustrative in reports
};

// Throws Error(InvalidInput, "Config") unless K >= 1 and eps >= 0.
void check(const QuasiIsometryParams& q);

// K * D + eps.
double wp_upper_bound(long D, const QuasiIsometryParams& q);

struct PipelineConfig {
  std::optional<double> bers_override;
  double tol = 1e-9;
  SignPolicy sign_policy = SignPolicy::Auto;
  std::size_t orbit_cap = 1000000;
  ExtractOptions extract;

  double bers(int g) const { return bers_override ? *bers_override : bers_default(g); }
};

// Throws Error(InvalidInput, "Config") unless tol > 0, orbit_cap > 0 and any
// Bers override is positive.
void check(const PipelineConfig& c);

// One action carried through polygon, metric, pants and encoding stages.
struct ActionAnalysis {
  DataSet data_set;
  int genus = 0;
  std::shared_ptr<const CurveSystem> curves;
  EmbeddingCertificate certificate;
  ConventionResolution convention;
  double bers = 0.0;
  PantsDecomposition pants;
  TupleEncoding encoding;
};

// Errors keep their kind and code; the message is prefixed with the stage
// name ("validate", "polygon", "metric", "pants", "encode").
ActionAnalysis analyze_action(const DataSet& d, const PipelineConfig& config);
nlohmann::json action_report(const ActionAnalysis& a, const PipelineConfig& config);

struct DistanceReport {
  ActionAnalysis first, second;  // in canonical order, independent of argument order
  long D = 0;
  double bound = 0.0;
  QuasiIsometryParams params;
  PipelineConfig config;
};

// Throws Error(InvalidInput, "GenusMismatch") for actions on different surfaces.
DistanceReport compare(const DataSet& d1, const DataSet& d2, const QuasiIsometryParams& params,
                       const PipelineConfig& config);
nlohmann::json to_json(const DistanceReport& r);

}  // namespace hyppants
