#pragma once

// phi(s, t) = gamma(t)                                      for s <= 0
//           = alpha_n(t) + step(2^n s - 1) (alpha_(n-1) - alpha_n)(t)
//                                                           for 2^-n < s <= 2^(1-n)
// with alpha_n = gamma beyond the supplied sequence and phi = alpha_0 for s > 1.

#include "hoops/graph_curve.hpp"

namespace hoops::pathology {

/// 2^(-N^2 - N - 1) / homotopy_constant(N).
double closeness_tolerance(int n);

struct HomotopyCheck
{
  int n = 0;              ///< s-interval (2^-n, 2^(1-n)]
  int k = 0;              ///< s-derivative order
  int l = 0;              ///< t-derivative order
  double sampled_max = 0; ///< max |d_s^k d_t^l phi| (k >= 1) or |d_t^l (phi - gamma)| (k = 0)
  double chain = 0;       ///< 2^(nk) a_k (|alpha_(n-1) - gamma|_l + |alpha_n - gamma|_l), sampled
  double bound = 0;       ///< 2^-n
  bool ok() const { return sampled_max <= bound && chain <= bound; }
};

class InterpolatingHomotopy
{
public:
  /// alphas[n] must satisfy cn_distance(alpha_n, gamma, min(n + 1, kMaxOrder))
  /// < closeness_tolerance(n + 1): the bound on interval n needs alpha_(n-1)
  /// within the level-n tolerance.  Throws PreconditionError naming the first
  /// offending n.
  InterpolatingHomotopy(GraphCurve gamma, std::vector<GraphCurve> alphas, int samples = 64);

  const GraphCurve& gamma() const { return gamma_; }
  const GraphCurve& alpha(int n) const;
  int length() const { return static_cast<int>(alphas_.size()); }

  double value(double s, double t) const;
  /// d_s^k d_t^l phi with k >= 1, l <= kMaxOrder.
  double partial(double s, double t, int k, int l) const;
  /// d_t^l (phi - gamma).
  double deviation(double s, double t, int l) const;

  /// Samples every interval n = 1..max_n (s_samples per interval, t on the
  /// curves' breakpoint grid refined t_samples times) for k + l <= max_order
  /// with k + l < n.
  std::vector<HomotopyCheck> verify_bounds(int max_n, int max_order, int s_samples = 16, int t_samples = 32) const;

private:
  int interval(double s) const; // n with 2^-n < s <= 2^(1-n); 0 for s > 1; -1 for s <= 0
  GraphCurve gamma_;
  std::vector<GraphCurve> alphas_;
  std::vector<GraphCurve> gaps_;    // alpha_(n-1) - alpha_n, n = 1..length (last against gamma)
  std::vector<GraphCurve> offsets_; // alpha_n - gamma
};

/// alpha_n = gamma + 2^-m_n * direction for n = 0..count-1, with m_n the
/// smallest exponent (tried upward from the previous one) whose sampled
/// distance is below half the required tolerance.
std::vector<GraphCurve> select_subsequence(const GraphCurve& gamma, const BumpAtom& direction, int count,
                                           int samples = 64);

} // namespace hoops::pathology
