#include "hoops/profile.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>

namespace hoops::pathology {

namespace {

constexpr int kDegree = 18; // degree of beta

struct Tables
{
  std::array<double, kDegree + 1> beta_sup{};
  double inv_mass = 0.0; // 1 / int_0^1 beta
};

double horner(const std::vector<double>& c, double v)
{
  double r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    r = r * v + *it;
  return r;
}

std::vector<double> derivative(const std::vector<double>& c)
{
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i)
    d.push_back(c[i] * static_cast<double>(i));
  return d;
}

double sup_abs(const std::vector<double>& c)
{
  if (c.empty())
    return 0.0;
  constexpr int samples = 4000;
  auto f = [&](double v) { return std::abs(horner(c, v)); };
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i <= samples; ++i) {
    const double val = f(-0.5 + static_cast<double>(i) / samples);
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }
  // Golden-section search on the bracketing cell pair.
  double a = -0.5 + std::max(best - 1, 0) / static_cast<double>(samples);
  double b = -0.5 + std::min(best + 1, samples) / static_cast<double>(samples);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    }
  }
  return std::max({best_val, f1, f2, f(a), f(b)});
}

const Tables& tables()
{
  static const Tables t = [] {
    Tables out;
    // Expanded in v = u - 1/2: (1 - 4 v^2)^9 = sum_j C(9, j) (-4)^j v^(2j).
    // Fine for interior maxima; point values use the factored form below.
    std::vector<double> poly(kDegree + 1, 0.0);
    double binom = 1.0, mass = 0.0;
    for (int j = 0; j <= 9; ++j) {
      poly[2 * j] = binom * std::pow(-4.0, j);
      mass += 2.0 * poly[2 * j] * std::pow(0.5, 2 * j + 1) / (2 * j + 1);
      binom = binom * (9 - j) / (j + 1);
    }
    out.inv_mass = 1.0 / mass;
    out.beta_sup[0] = 1.0;
    for (int k = 1; k <= kDegree; ++k) {
      poly = derivative(poly);
      out.beta_sup[k] = sup_abs(poly);
    }
    return out;
  }();
  return t;
}

void check_order(int k)
{
  if (k < 0)
    throw PreconditionError("negative derivative order");
}

} // namespace

double beta(double u, int k)
{
  check_order(k);
  if (u <= 0.0 || u >= 1.0 || k > kDegree)
    return 0.0;
  // 4^9 u^9 (1 - u)^9 differentiated factor by factor: no cancellation of the
  // leading terms near the ends, where the flat contact matters.
  static const std::array<double, 10> falling = [] {
    std::array<double, 10> f{}; // 9! / (9 - j)!
    f[0] = 1.0;
    for (int j = 1; j <= 9; ++j)
      f[j] = f[j - 1] * (10 - j);
    return f;
  }();
  const double w = 1.0 - u;
  double sum = 0.0, binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    const int i = k - j;
    if (j <= 9 && i <= 9) {
      const double term = falling[j] * std::pow(u, 9 - j) * falling[i] * std::pow(w, 9 - i);
      sum += (i % 2 == 0 ? binom : -binom) * term;
    }
    binom = binom * (k - j) / (j + 1);
  }
  return std::ldexp(sum, 18);
}

double step(double u, int k)
{
  check_order(k);
  if (u <= 0.0)
    return 0.0;
  if (u >= 1.0)
    return k == 0 ? 1.0 : 0.0;
  if (k >= 1)
    return beta(u, k - 1) * tables().inv_mass;
  if (u > 0.75)
    return 1.0 - step(1.0 - u);
  double sum = 0.0, binom = 1.0;
  if (u >= 0.25) {
    // 1/2 + sum_j C(9, j) (-4)^j v^(2j + 1) / (2j + 1) / mass, v = u - 1/2
    const double v = u - 0.5;
    for (int j = 0; j <= 9; ++j) {
      sum += binom * std::pow(-4.0, j) * std::pow(v, 2 * j + 1) / (2 * j + 1);
      binom = binom * (9 - j) / (j + 1);
    }
    return 0.5 + sum * tables().inv_mass;
  }
  // 4^9 / mass * sum_i C(9, i) (-1)^i u^(10 + i) / (10 + i)
  for (int i = 0; i <= 9; ++i) {
    sum += (i % 2 == 0 ? binom : -binom) * std::pow(u, 10 + i) / (10 + i);
    binom = binom * (9 - i) / (i + 1);
  }
  return std::ldexp(sum, 18) * tables().inv_mass;
}

double cutoff(double x, int k)
{
  check_order(k);
  const double ax = std::abs(x);
  if (ax <= 0.5)
    return 0.0;
  if (ax >= 1.0)
    return k == 0 ? 1.0 : 0.0;
  const double d = std::ldexp(step(2.0 * ax - 1.0, k), k); // 2^k step^(k)
  return (x < 0 && k % 2 == 1) ? -d : d;
}

double beta_sup(int k)
{
  check_order(k);
  return k > kDegree ? 0.0 : tables().beta_sup[k];
}

double step_sup(int k)
{
  check_order(k);
  return k == 0 ? 1.0 : beta_sup(k - 1) * tables().inv_mass;
}

double cutoff_sup(int k)
{
  return std::ldexp(step_sup(k), k);
}

double counterexample_constant(int n)
{
  if (n < 1)
    throw PreconditionError("counterexample level must be >= 1");
  double a = 0.0;
  for (int k = 1; k <= std::min(n, kDegree + 1); ++k)
    a = std::max(a, beta_sup(k));
  return a;
}

double homotopy_constant(int n)
{
  check_order(n);
  double a = 0.0;
  for (int k = 0; k <= std::min(n, kDegree + 1); ++k)
    a = std::max(a, step_sup(k));
  return a;
}

} // namespace hoops::pathology
