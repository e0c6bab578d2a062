#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace posetlab {

enum class ErrorKind {
  PromiseViolation,
  UnknownLabel,
  UnknownPoint,
  ColorMixing,
  BadParams,
  BudgetExceeded,
  ColoredInput,
  UncoloredPoint,
  NotTwoLevel,
  NotParityUniform,
  OracleInconsistent,
  NotNFree,
  EmptyPoset,
  NotNumeric,
  NotInvolution,
  NotOrderPreserving,
  BadFormula,
  UnknownVertex,
  BadVertices,
  BadDocument,
  BindFailure,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure in the library is reported as an Error carrying a
// machine-readable kind. The CLI maps these to exit code 1, the service to a
// 4xx status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t positions, std::size_t millis)
      : Error(ErrorKind::BudgetExceeded,
              "solve budget exceeded after " + std::to_string(positions) +
                  " positions (" + std::to_string(millis) + " ms)"),
        positions_(positions),
        millis_(millis) {}
  std::size_t positions_explored() const { return positions_; }
  std::size_t elapsed_millis() const { return millis_; }

 private:
  std::size_t positions_;
  std::size_t millis_;
};

}  // namespace posetlab
