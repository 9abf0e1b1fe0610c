#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyppants/hyperbolic.hpp"

namespace hyppants::cli {

struct Config {
  std::optional<double> bers_override;
  double K = 1.0;
  double eps = 0.0;
  double tol = 1e-9;
  SignPolicy sign_policy = SignPolicy::Auto;
  std::size_t orbit_cap = 1000000;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kVerificationFailure = 2;

// Runs one command line (without the program name). JSON goes to `out`,
// diagnostics to `err`. `env_tol` is the HYPPANTS_TOL value, used when --tol
// is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_tol = std::nullopt);

}  // namespace hyppants::cli
