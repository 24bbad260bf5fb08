#pragma once

#include "hoops/lie.hpp"

#include <vector>

namespace hoops::gauge {

/// Logarithm of a group element as a product of exponentials:
/// exp(factors[0]) * exp(factors[1]) * ... = g.  One factor except for
/// SL(2,R) elements with trace <= -2 (outside or at the edge of the
/// exponential image), which get the pair (pi J, log(-g)).
struct LogResult
{
  std::vector<Matrix> factors;
  double residual = 0.0; ///< operator-norm error of the reassembled product
};

/// Throws PreconditionError when g is not in the group to within 1e-10
/// (1e-8 for SL(2,R), whose residual scales with the entries).
LogResult log_map(const Matrix& g, const LieGroupSpec& spec);

} // namespace hoops::gauge
