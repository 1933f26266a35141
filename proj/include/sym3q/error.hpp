#pragma once

#include <stdexcept>
#include <string>

namespace sym3q {

enum class ErrorCode {
  InvalidArgument = 1,
  NotSymmetric,
  EigenFailure,
  NonRealResult,
  AsymmetricState,
  ZeroPolynomial,
  DegenerateRoot,
  ProductState,
  OutOfRegion,
  EmptySlice,
  ParseError,
  IoError,
  NonConvergence,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sym3q
