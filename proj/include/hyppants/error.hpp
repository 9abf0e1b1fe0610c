#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hyppants {

// Failure categories. The CLI maps InvalidInput to exit 1 and Verification
// to exit 2.
enum class ErrorKind {
  InvalidInput,
  Verification,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  // Short machine tag, e.g. "NotType1Irreducible" or "NotPants".
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error invalid_input(std::string code, const std::string& what) {
  return Error(ErrorKind::InvalidInput, std::move(code), what);
}

inline Error verification_failure(std::string code, const std::string& what) {
  return Error(ErrorKind::Verification, std::move(code), what);
}

}  // namespace hyppants
