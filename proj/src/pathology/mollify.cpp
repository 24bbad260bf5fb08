#include "hoops/mollify.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hoops::pathology {

namespace {

double binomial(int n, int k)
{
  double r = 1.0;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

bool cores_meet(const MollifierFactor& a, const MollifierFactor& b)
{
  return std::abs(a.point - b.point) <= 0.5 * (a.width + b.width);
}

// Points in (p - delta, p + delta) minus p, clipped to [0, t_end]: a uniform
// grid plus a geometric one accumulating at p.
std::vector<double> window_samples(double p, double delta, double t_end, int samples)
{
  std::vector<double> xs;
  for (int side : {-1, 1}) {
    for (int i = 1; i < samples; ++i)
      xs.push_back(p + side * delta * i / samples);
    for (int i = 1; i <= 8 * 40; ++i)
      xs.push_back(p + side * delta * std::exp2(-i / 8.0));
  }
  xs.erase(std::remove_if(xs.begin(), xs.end(), [&](double x) { return x < 0.0 || x > t_end || x == p; }),
           xs.end());
  return xs;
}

} // namespace

std::vector<GraphCurve> mollify(const std::vector<GraphCurve>& curves, const MollifierSpec& spec)
{
  const auto& fs = spec.factors;
  for (const auto& m : fs)
    if (!std::isfinite(m.width) || m.width <= 0.0)
      throw PreconditionError("mollifier width must be positive");
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (cores_meet(fs[i], fs[j]))
        throw PreconditionError("mollifier cores at " + std::to_string(fs[i].point) + " and " +
                                std::to_string(fs[j].point) + " overlap");
  std::vector<GraphCurve> out;
  for (const GraphCurve& c : curves) {
    for (const auto& m : fs) {
      if (m.point < 0.0 || m.point > c.t_end())
        throw PreconditionError("mollifier point " + std::to_string(m.point) + " outside the curve domain");
      for (const auto& old : c.factors())
        if (cores_meet(m, old))
          throw PreconditionError("mollifier core at " + std::to_string(m.point) + " overlaps an existing one");
    }
    out.push_back(c.with_factors(fs));
  }
  return out;
}

bool has_contact(const GraphCurve& curve, double p, int order)
{
  const auto j = curve.jet(p, order);
  return std::all_of(j.begin(), j.end(), [](double v) { return v == 0.0; });
}

std::vector<double> contact_ratios(const GraphCurve& curve, double p, double delta, int order, int samples)
{
  std::vector<double> r(order + 1, 0.0);
  for (double x : window_samples(p, delta, curve.t_end(), samples)) {
    const auto j = curve.jet(x, order);
    const double dist = std::abs(x - p);
    for (int n = 0; n <= order; ++n)
      r[n] = std::max(r[n], std::abs(j[n]) / std::pow(dist, order - n));
  }
  return r;
}

std::optional<WidthChoice> choose_width(const std::vector<GraphCurve>& curves, double p, int order, double eps,
                                        int max_exponent)
{
  if (curves.empty())
    throw PreconditionError("choose_width needs at least one curve");
  if (!(eps > 0.0))
    throw PreconditionError("choose_width needs eps > 0");
  const double t_end = curves.front().t_end();

  WidthChoice choice;
  choice.point = p;
  std::vector<int> others;
  for (std::size_t i = 0; i < curves.size(); ++i)
    (has_contact(curves[i], p, order) ? choice.curves : others).push_back(static_cast<int>(i));
  if (choice.curves.empty())
    return std::nullopt;

  for (int j = 1; j <= max_exponent; ++j) {
    const double delta = std::exp2(-j);
    if ((p != 0.0 && p - delta <= 0.0) || (p != t_end && p + delta >= t_end))
      continue;

    bool ok = true;
    // Contact curves must not meet the others inside the window.
    for (double x : window_samples(p, delta, t_end, 400)) {
      for (int a : choice.curves)
        for (int b : others)
          if (curves[a].value(x) == curves[b].value(x))
            ok = false;
      if (!ok)
        break;
    }

    bool all_zero = true;
    choice.bounds.clear();
    for (int idx = 0; ok && idx < static_cast<int>(choice.curves.size()); ++idx) {
      const auto ratio = contact_ratios(curves[choice.curves[idx]], p, delta, order);
      std::vector<double> r(order + 1, 0.0);
      for (int n = 0; n <= order; ++n) {
        double sum = 0.0;
        for (int k = 1; k <= n; ++k)
          sum += binomial(n, k) * cutoff_sup(k) * r[n - k];
        // Strict inequalities need a little room above the sampled values.
        r[n] = std::max(ratio[n], sum) * (1.0 + 1e-9);
        if (ratio[n] > 0.0)
          all_zero = false;
        if (!(r[n] < eps))
          ok = false;
      }
      choice.bounds.push_back(std::move(r));
    }
    if (ok) {
      choice.width = delta;
      choice.exponent = j;
      choice.degenerate = all_zero;
      return choice;
    }
  }
  return std::nullopt;
}

double deformation_bound(int c, double eps)
{
  return std::exp2(std::exp2(c + 1)) * eps;
}

} // namespace hoops::pathology
