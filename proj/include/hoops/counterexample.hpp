#pragma once

// Four graph curves from (0,0) to (1,0) whose loop c = c1 c2^-1 c3 c4^-1 has
// trivial holonomy for every abelian connection, yet is a nontrivial loop.
//
//   f1 = sum_n s_n beta(2^n x - 1),   f2 = sum_n (-1)^n s_n beta(2^n x - 1),
//   f3 = -f1,   f4 = -f2,   s_n = 1 / (2^n counterexample_constant(n)),
//
// truncated at level n_max.

#include "hoops/graph_curve.hpp"

#include <array>

namespace hoops::pathology {

constexpr int kMaxCounterexampleLevels = 24;

struct CounterexampleFamily
{
  int levels = 0;
  std::array<GraphCurve, 4> curves;
};

/// Scale of the level-n atom.
double level_scale(int n);

/// Throws PreconditionError unless 1 <= n_max <= kMaxCounterexampleLevels.
CounterexampleFamily counterexample_family(int n_max);

/// Holonomy of c for a two-dimensional connection (InputError otherwise).
gauge::Holonomy transport_loop(const gauge::Connection& a, const CounterexampleFamily& family,
                               int steps = gauge::kDefaultSteps);

/// c assembled from the four flattened curves on a common grid.
geom::PolyLoop flatten_loop(const CounterexampleFamily& family, int resolution);

} // namespace hoops::pathology
