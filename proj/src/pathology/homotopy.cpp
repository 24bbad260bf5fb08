#include "hoops/homotopy.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hoops::pathology {

double closeness_tolerance(int n)
{
  if (n < 0)
    throw PreconditionError("closeness tolerance needs n >= 0");
  return std::exp2(-(static_cast<double>(n) * n + n + 1)) / homotopy_constant(n);
}

InterpolatingHomotopy::InterpolatingHomotopy(GraphCurve gamma, std::vector<GraphCurve> alphas, int samples)
  : gamma_(std::move(gamma)), alphas_(std::move(alphas))
{
  for (int n = 0; n < length(); ++n) {
    const int order = std::min(n + 1, kMaxOrder);
    const double d = cn_distance(alphas_[n], gamma_, order, samples).value;
    const double tol = closeness_tolerance(n + 1);
    if (!(d < tol))
      throw PreconditionError("alpha_" + std::to_string(n) + " is not close enough to gamma: C^" +
                              std::to_string(order) + " distance " + std::to_string(d) + " >= " +
                              std::to_string(tol));
  }
  for (int n = 0; n < length(); ++n) {
    offsets_.push_back(difference(alphas_[n], gamma_));
    gaps_.push_back(difference(alpha(n), alpha(n + 1)));
  }
}

const GraphCurve& InterpolatingHomotopy::alpha(int n) const
{
  return n < length() ? alphas_[n] : gamma_;
}

int InterpolatingHomotopy::interval(double s) const
{
  if (s <= 0.0)
    return -1;
  if (s > 1.0)
    return 0;
  int e = 0;
  const double m = std::frexp(s, &e);
  return m == 0.5 ? 2 - e : 1 - e;
}

double InterpolatingHomotopy::value(double s, double t) const
{
  const int n = interval(s);
  if (n < 0)
    return gamma_.value(t);
  if (n == 0)
    return alpha(0).value(t);
  const double u = std::ldexp(s, n) - 1.0;
  if (u >= 1.0)
    return alpha(n - 1).value(t);
  const double gap = n <= length() ? gaps_[n - 1].value(t) : 0.0;
  return alpha(n).value(t) + step(u) * gap;
}

double InterpolatingHomotopy::partial(double s, double t, int k, int l) const
{
  if (k < 1)
    throw PreconditionError("partial needs k >= 1; use deviation for k = 0");
  const int n = interval(s);
  if (n <= 0 || n > length())
    return 0.0;
  const double u = std::ldexp(s, n) - 1.0;
  return std::ldexp(step(u, k), n * k) * gaps_[n - 1].derivative(t, l);
}

double InterpolatingHomotopy::deviation(double s, double t, int l) const
{
  const int n = interval(s);
  if (n < 0)
    return 0.0;
  const double off = n < length() ? offsets_[n].derivative(t, l) : 0.0;
  if (n == 0 || n > length())
    return off;
  return off + step(std::ldexp(s, n) - 1.0) * gaps_[n - 1].derivative(t, l);
}

std::vector<HomotopyCheck> InterpolatingHomotopy::verify_bounds(int max_n, int max_order, int s_samples,
                                                                int t_samples) const
{
  if (max_order > kMaxOrder)
    throw PreconditionError("verify_bounds order exceeds the oracle range");
  std::vector<double> grid = gamma_.breakpoints();
  for (const auto& a : alphas_) {
    const auto b = a.breakpoints();
    grid.insert(grid.end(), b.begin(), b.end());
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<double> ts;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ts.push_back(grid[i]);
    if (i + 1 < grid.size())
      for (int j = 1; j <= t_samples; ++j)
        ts.push_back(grid[i] + (grid[i + 1] - grid[i]) * j / (t_samples + 1));
  }

  const GraphCurve zero(gamma_.t_end(), {}, gamma_.factors());
  auto offset = [&](int n) -> const GraphCurve& { return n < length() ? offsets_[n] : zero; };
  auto sup_jet = [&](const GraphCurve& c) {
    std::vector<double> best(max_order + 1, 0.0);
    for (double t : ts) {
      const auto j = c.jet(t, max_order);
      for (int l = 0; l <= max_order; ++l)
        best[l] = std::max(best[l], std::abs(j[l]));
    }
    return best;
  };

  std::vector<HomotopyCheck> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto prev = sup_jet(offset(n - 1));
    const auto cur = sup_jet(offset(n));
    const GraphCurve& gap = n <= length() ? gaps_[n - 1] : zero;
    std::vector<std::vector<double>> gap_jets, off_jets;
    for (double t : ts) {
      gap_jets.push_back(gap.jet(t, max_order));
      off_jets.push_back(offset(n).jet(t, max_order));
    }
    for (int k = 0; k <= max_order; ++k)
      for (int l = 0; k + l <= max_order; ++l) {
        if (k + l >= n)
          continue;
        HomotopyCheck c{n, k, l};
        c.bound = std::exp2(-n);
        c.chain = std::ldexp(homotopy_constant(k), n * k) * (prev[l] + cur[l]);
        for (int i = 1; i <= s_samples; ++i) {
          const double u = static_cast<double>(i) / s_samples; // s = 2^-n (1 + u)
          const double w = step(u, k) * std::ldexp(1.0, n * k);
          for (std::size_t j = 0; j < ts.size(); ++j) {
            const double v = k == 0 ? off_jets[j][l] + w * gap_jets[j][l] : w * gap_jets[j][l];
            c.sampled_max = std::max(c.sampled_max, std::abs(v));
          }
        }
        out.push_back(c);
      }
  }
  return out;
}

std::vector<GraphCurve> select_subsequence(const GraphCurve& gamma, const BumpAtom& direction, int count, int samples)
{
  if (direction.scale <= 0.0)
    throw PreconditionError("subsequence direction needs a positive scale");
  std::vector<GraphCurve> out;
  int m = 0;
  for (int n = 0; n < count; ++n) {
    const int order = std::min(n + 1, kMaxOrder);
    const double target = 0.5 * closeness_tolerance(n + 1);
    const double unit = cn_distance(gamma.with_atom(direction), gamma, order, samples).value;
    if (unit > 0.0)
      m = std::max(m, static_cast<int>(std::ceil(std::log2(unit / target))));
    for (;; ++m) {
      if (m > 1000)
        throw PreconditionError("no admissible perturbation for alpha_" + std::to_string(n));
      GraphCurve a = gamma.with_atom({direction.level, direction.sign, std::ldexp(direction.scale, -m)});
      if (cn_distance(a, gamma, order, samples).value < target) {
        out.push_back(std::move(a));
        break;
      }
    }
  }
  return out;
}

} // namespace hoops::pathology
