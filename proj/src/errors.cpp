#include "dorder/errors.hpp"

#include <cstdio>

namespace dorder {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BranchCut: return "BranchCut";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::DegenerateMode: return "DegenerateMode";
    case ErrorKind::NonDegeneracyViolated: return "NonDegeneracyViolated";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what, std::optional<int> index)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), index_(index) {}

void throw_invalid(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

std::string describe(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace dorder
