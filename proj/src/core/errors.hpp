#ifndef OPO_CORE_ERRORS_HPP
#define OPO_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opo {

enum class ErrorCode {
  InvalidArgument,
  NonPositiveRate,
  TruncationTooSmall,
  NegativePump,
  DimensionMismatch,
  IndexOutOfRange,
  NoZeroEigenvalue,
  DegenerateSteadyState,
  UnstableStep,
  UnphysicalCovariance,
  RootFindingFailed,
  Io,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace opo

#endif
