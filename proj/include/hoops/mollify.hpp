#pragma once

// Deformation of graph curves by smooth cutoffs around contact points.

#include "hoops/graph_curve.hpp"

#include <optional>

namespace hoops::pathology {

struct MollifierSpec
{
  std::vector<MollifierFactor> factors;
};

/// f_i -> f_i * prod_k cutoff((x - p_k) / delta_k) for every curve.  Throws
/// PreconditionError if a point lies outside a curve's domain or two cores
/// [p - delta/2, p + delta/2] (including factors the curves already carry) meet.
std::vector<GraphCurve> mollify(const std::vector<GraphCurve>& curves, const MollifierSpec& spec);

/// True if f^(n)(p) = 0 for every n <= order.
bool has_contact(const GraphCurve& curve, double p, int order);

/// Sampled sup over 0 < |x - p| < delta (within the domain) of
/// |f^(n)(x)| / |x - p|^(order - n), for n = 0..order.
std::vector<double> contact_ratios(const GraphCurve& curve, double p, double delta, int order, int samples = 400);

struct WidthChoice
{
  double point = 0.0;
  double width = 0.0;
  int exponent = 0;           ///< width = 2^-exponent
  bool degenerate = false;    ///< every contact ratio vanished: the curves are zero near p
  std::vector<int> curves;    ///< indices of the curves with contact at p
  std::vector<std::vector<double>> bounds; ///< per curve, the r_n used for n = 0..order
};

/// Largest width 2^-j (j = 1..max_exponent) such that, for every curve with
/// contact of the given order at p, there are bounds r_n >= the sampled ratios
/// with r_n < eps and sum_{k=1..n} C(n,k) cutoff_sup(k) r_(n-k) < r_n.  All
/// bounds may be zero when the curves vanish near p.  Also requires the
/// width interval to avoid the domain ends (unless p is one) and curves
/// without contact not to meet curves with contact there.
std::optional<WidthChoice> choose_width(const std::vector<GraphCurve>& curves, double p, int order, double eps,
                                        int max_exponent = 60);

/// 2^(2^(c+1)) * eps.
double deformation_bound(int c, double eps);

} // namespace hoops::pathology
