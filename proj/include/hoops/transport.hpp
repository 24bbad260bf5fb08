#pragma once

// Path-ordered transport U' = U * A(x(t))[x'(t)], U(0) = I, integrated with
// classical RK4.  The convention is right-accumulating, so the holonomy of a
// composed loop is the product of the holonomies in traversal order.

#include "hoops/connection.hpp"
#include "hoops/decompose.hpp"

#include <functional>

namespace hoops::gauge {

constexpr int kDefaultSteps = 64;

struct Holonomy
{
  Matrix matrix;
  LieGroupSpec spec;
  double error = 0.0;    ///< step-halving estimate (plus propagated errors)
  double residual = 0.0; ///< group-membership residual after re-projection

  static Holonomy identity(const LieGroupSpec& spec) { return {spec.identity(), spec, 0.0, 0.0}; }
};

Holonomy operator*(const Holonomy& a, const Holonomy& b);
Holonomy inverse(const Holonomy& h);

/// Operator-norm distance; throws PreconditionError on a group mismatch.
double group_distance(const Holonomy& a, const Holonomy& b);
double group_distance(const Holonomy& a, const Matrix& b);

/// A smooth parametrised piece x(t), t in [t0, t1], with its velocity.
struct CurvePiece
{
  double t0 = 0.0;
  double t1 = 1.0;
  /// Writes x(t) and x'(t) (each of the connection's dimension).
  std::function<void(double t, double* x, double* dx)> eval;
};

/// Transport along a chain of pieces with `steps` uniform RK4 steps each.
Holonomy transport_pieces(const Connection& a, const std::vector<CurvePiece>& pieces, int steps);

/// Transport along a PL path.  Every edge is additionally cut where it enters
/// or leaves a bump support, and the pieces outside every support are skipped
/// (the integrand vanishes there); each remaining piece gets `steps` steps.
Holonomy transport(const Connection& a, const geom::PolyPath& path, int steps = kDefaultSteps);
Holonomy transport(const Connection& a, const geom::PolyLoop& loop, int steps = kDefaultSteps);

/// Generator holonomies g_i = transport(gamma_i), multiplied as the word says.
Holonomy holonomy_of_word(const Connection& a, const geom::Decomposition& dec, int steps = kDefaultSteps);
/// Word evaluated on given generator holonomies.
Holonomy evaluate_word(const words::Word& word, const std::vector<Holonomy>& generators, const LieGroupSpec& spec);

} // namespace hoops::gauge
