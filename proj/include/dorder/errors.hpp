#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace dorder {

enum class ErrorKind {
  InvalidArgument,
  NonConvergent,
  Overflow,
  BranchCut,
  DegenerateLattice,
  DegenerateMode,
  NonDegeneracyViolated,
  IndexOutOfRange,
  GridTooCoarse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `index()` carries the offending mode
/// number for DegenerateMode and NonDegeneracyViolated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<int> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<int> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<int> index_;
};

[[noreturn]] void throw_invalid(const std::string& what);

/// Short %g rendering for error messages.
std::string describe(double v);

}  // namespace dorder
