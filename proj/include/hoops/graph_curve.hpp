#pragma once

// Graph curves t -> (t, f(t)) on [0, t_end] with exact derivative oracles.
// f is a sum of dyadic bump atoms times a product of mollifier cutoffs.

#include "hoops/poly_loop.hpp"
#include "hoops/profile.hpp"
#include "hoops/transport.hpp"

#include <vector>

namespace hoops::pathology {

/// sign * scale * beta(2^level x - 1), supported on (2^-level, 2^(1-level)).
struct BumpAtom
{
  int level = 1;
  int sign = 1;
  double scale = 1.0;

  double coefficient() const { return sign * scale; }
  friend bool operator==(const BumpAtom&, const BumpAtom&) = default;
};

/// Multiplies f by cutoff((x - point) / width): zero within width/2 of the
/// point, untouched beyond width.
struct MollifierFactor
{
  double point = 0.0;
  double width = 1.0;

  friend bool operator==(const MollifierFactor&, const MollifierFactor&) = default;
};

class GraphCurve
{
public:
  /// Throws InputError on atoms outside [0, t_end], bad signs or scales, or
  /// non-positive widths.
  explicit GraphCurve(double t_end = 1.0, std::vector<BumpAtom> atoms = {}, std::vector<MollifierFactor> factors = {});

  double t_end() const { return t_end_; }
  const std::vector<BumpAtom>& atoms() const { return atoms_; }
  const std::vector<MollifierFactor>& factors() const { return factors_; }
  int max_level() const;

  /// f(x), f'(x), ..., f^(order)(x); order <= kMaxOrder.
  std::vector<double> jet(double x, int order) const;
  double value(double x) const { return jet(x, 0)[0]; }
  double derivative(double x, int order) const { return jet(x, order)[order]; }

  GraphCurve negated() const;
  GraphCurve with_atom(const BumpAtom& atom) const;
  GraphCurve with_factors(const std::vector<MollifierFactor>& extra) const;

  /// Points where the representation changes: 0, t_end, atom interval ends,
  /// and mollifier core and support ends inside the domain.  Sorted, unique.
  std::vector<double> breakpoints() const;

private:
  double t_end_;
  std::vector<BumpAtom> atoms_;
  std::vector<MollifierFactor> factors_;
};

/// a - b as a curve, with opposite identical atoms cancelled symbolically.
/// Needs equal domains and factor lists (PreconditionError otherwise).
GraphCurve difference(const GraphCurve& a, const GraphCurve& b);

/// Pieces of t -> (t, f(t)) split at the breakpoints; reversed runs t_end -> 0.
std::vector<gauge::CurvePiece> graph_pieces(const GraphCurve& curve, bool reversed = false);

/// Chord approximation on a dyadic grid: x = 0, then for each level n from
/// `levels` down to 1 the points 2^-n (1 + j / resolution), then t_end.
/// Values are snapped exactly (every double is a rational), so equal or
/// opposite function values give equal or mirrored vertices.  levels = 0 uses
/// the curve's deepest atom level.
geom::PolyPath flatten_to_pl(const GraphCurve& curve, int resolution, int levels = 0);

/// Sampled sup-distance in C^N.
struct CnDistance
{
  double value = 0.0;              ///< max over orders at the fine sampling
  std::vector<double> per_order;   ///< fine-sampling max per order 0..N
  double coarse_value = 0.0;       ///< same at half the samples
  int samples = 0;                 ///< interior samples per breakpoint interval (fine)
  double refinement_change() const { return value - coarse_value; }
};

/// max over n <= N and sampled x of |f^(n)(x) - g^(n)(x)|: a lower bound on
/// the true sup.  Samples cover every breakpoint interval of both curves.
CnDistance cn_distance(const GraphCurve& f, const GraphCurve& g, int order, int samples = 200);

} // namespace hoops::pathology
