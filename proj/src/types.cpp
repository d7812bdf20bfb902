#include "dorder/types.hpp"

#include <cmath>

#include "dorder/errors.hpp"

namespace dorder {

Eigenvalue Eigenvalue::from_value(Complex value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) || value == Complex{}) {
    throw_invalid("lambda must be finite and nonzero");
  }
  if (value.imag() == 0.0 && value.real() < 0.0) {
    throw Error(ErrorKind::BranchCut, "lambda lies on the negative real axis");
  }
  return Eigenvalue(std::log(value));
}

Eigenvalue Eigenvalue::from_log(Complex log) {
  if (!std::isfinite(log.real()) || !std::isfinite(log.imag())) {
    throw_invalid("log lambda must be finite");
  }
  return Eigenvalue(log);
}

}  // namespace dorder
