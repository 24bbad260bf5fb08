#pragma once

// Fixed smooth profiles for the differentiable-case constructions.
//
//   beta(u) = (4 u (1 - u))^9 on [0, 1]       flat bump, sup 1, C^8 at the ends
//   step(u) = int_0^u beta / int_0^1 beta      0 -> 1 transition, C^9 at the ends
//   cutoff(x) = step(2|x| - 1)                 0 on |x| <= 1/2, 1 on |x| >= 1
//
// Derivatives are exact polynomial derivatives (to rounding).

#include <vector>

namespace hoops::pathology {

/// Highest derivative order at which the profiles are still flat at their
/// ends, hence the order up to which every graph curve is smooth.
constexpr int kMaxOrder = 8;

/// k-th derivative of beta at u; zero outside [0, 1].
double beta(double u, int k = 0);
/// k-th derivative of step at u; 0 for u <= 0, 1 for u >= 1.
double step(double u, int k = 0);
/// k-th derivative of the cutoff at x.
double cutoff(double x, int k = 0);

/// sup over [0, 1] of |beta^(k)|, by dense sampling plus golden-section refinement.
double beta_sup(int k);
/// sup over [0, 1] of |step^(k)|.
double step_sup(int k);
/// sup over R of |cutoff^(k)| = 2^k step_sup(k).
double cutoff_sup(int k);

/// Level constant of the counterexample: max over 1 <= k <= n of beta_sup(k).
double counterexample_constant(int n);
/// Homotopy constant: max over 0 <= k <= n of step_sup(k).
double homotopy_constant(int n);

} // namespace hoops::pathology
