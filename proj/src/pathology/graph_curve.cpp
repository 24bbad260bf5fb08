#include "hoops/graph_curve.hpp"

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

// Leibniz rule: jet of a * b.
std::vector<double> multiply_jets(const std::vector<double>& a, const std::vector<double>& b)
{
  std::vector<double> out(a.size(), 0.0);
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      out[n] += binomial(static_cast<int>(n), static_cast<int>(k)) * a[k] * b[n - k];
  return out;
}

void check_order(int order)
{
  if (order < 0 || order > kMaxOrder)
    throw PreconditionError("derivative order " + std::to_string(order) + " outside the oracle range 0.." +
                            std::to_string(kMaxOrder));
}

} // namespace

GraphCurve::GraphCurve(double t_end, std::vector<BumpAtom> atoms, std::vector<MollifierFactor> factors)
  : t_end_(t_end), atoms_(std::move(atoms)), factors_(std::move(factors))
{
  if (!std::isfinite(t_end_) || t_end_ <= 0.0)
    throw InputError("graph curve needs a positive finite t_end");
  for (const BumpAtom& a : atoms_) {
    if (a.sign != 1 && a.sign != -1)
      throw InputError("atom sign must be +1 or -1");
    if (!std::isfinite(a.scale) || a.scale < 0.0)
      throw InputError("atom scale must be finite and non-negative");
    if (a.level < -60 || a.level > 900 || std::ldexp(1.0, 1 - a.level) > t_end_)
      throw InputError("atom at level " + std::to_string(a.level) + " does not fit in [0, t_end]");
  }
  for (const MollifierFactor& m : factors_)
    if (!std::isfinite(m.point) || !std::isfinite(m.width) || m.width <= 0.0)
      throw InputError("mollifier needs a finite point and a positive width");
  std::stable_sort(atoms_.begin(), atoms_.end(), [](const BumpAtom& a, const BumpAtom& b) { return a.level < b.level; });
}

int GraphCurve::max_level() const
{
  return atoms_.empty() ? 0 : atoms_.back().level;
}

std::vector<double> GraphCurve::jet(double x, int order) const
{
  check_order(order);
  std::vector<double> out(order + 1, 0.0);
  if (x > 0.0 && x <= t_end_ && !atoms_.empty()) {
    int e = 0;
    std::frexp(x, &e); // x in [2^(e-1), 2^e)
    const int level = 1 - e;
    const double u = std::ldexp(x, level) - 1.0;
    auto lo = std::lower_bound(atoms_.begin(), atoms_.end(), level,
                               [](const BumpAtom& a, int l) { return a.level < l; });
    for (auto it = lo; it != atoms_.end() && it->level == level; ++it)
      for (int k = 0; k <= order; ++k)
        out[k] += it->coefficient() * std::ldexp(beta(u, k), level * k);
  }
  for (const MollifierFactor& m : factors_) {
    const double y = (x - m.point) / m.width;
    if (std::abs(y) >= 1.0)
      continue;
    std::vector<double> r(order + 1);
    for (int k = 0; k <= order; ++k)
      r[k] = cutoff(y, k) / std::pow(m.width, k);
    out = multiply_jets(out, r);
  }
  return out;
}

GraphCurve GraphCurve::negated() const
{
  std::vector<BumpAtom> atoms = atoms_;
  for (BumpAtom& a : atoms)
    a.sign = -a.sign;
  return GraphCurve(t_end_, std::move(atoms), factors_);
}

GraphCurve GraphCurve::with_atom(const BumpAtom& atom) const
{
  std::vector<BumpAtom> atoms = atoms_;
  atoms.push_back(atom);
  return GraphCurve(t_end_, std::move(atoms), factors_);
}

GraphCurve GraphCurve::with_factors(const std::vector<MollifierFactor>& extra) const
{
  std::vector<MollifierFactor> factors = factors_;
  factors.insert(factors.end(), extra.begin(), extra.end());
  return GraphCurve(t_end_, atoms_, std::move(factors));
}

std::vector<double> GraphCurve::breakpoints() const
{
  std::vector<double> pts{0.0, t_end_};
  auto add = [&](double x) {
    if (x > 0.0 && x < t_end_)
      pts.push_back(x);
  };
  for (const BumpAtom& a : atoms_) {
    add(std::ldexp(1.0, -a.level));
    add(std::ldexp(1.0, 1 - a.level));
  }
  for (const MollifierFactor& m : factors_)
    for (double f : {-1.0, -0.5, 0.5, 1.0})
      add(m.point + f * m.width);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

GraphCurve difference(const GraphCurve& a, const GraphCurve& b)
{
  if (a.t_end() != b.t_end() || a.factors() != b.factors())
    throw PreconditionError("symbolic difference needs equal domains and mollifier factors");
  std::vector<BumpAtom> atoms = a.atoms();
  for (const BumpAtom& x : b.atoms()) {
    const auto same = std::find(atoms.begin(), atoms.end(), x);
    if (same != atoms.end())
      atoms.erase(same);
    else
      atoms.push_back({x.level, -x.sign, x.scale});
  }
  return GraphCurve(a.t_end(), std::move(atoms), a.factors());
}

std::vector<gauge::CurvePiece> graph_pieces(const GraphCurve& curve, bool reversed)
{
  const auto pts = curve.breakpoints();
  std::vector<gauge::CurvePiece> pieces;
  auto eval = [&curve](double t, double* x, double* dx) {
    const auto j = curve.jet(t, 1);
    x[0] = t;
    x[1] = j[0];
    dx[0] = 1.0;
    dx[1] = j[1];
  };
  for (std::size_t i = 1; i < pts.size(); ++i)
    pieces.push_back({pts[i - 1], pts[i], eval});
  if (reversed) {
    std::reverse(pieces.begin(), pieces.end());
    for (auto& p : pieces)
      std::swap(p.t0, p.t1);
  }
  return pieces;
}

geom::PolyPath flatten_to_pl(const GraphCurve& curve, int resolution, int levels)
{
  if (resolution < 2)
    throw PreconditionError("flatten_to_pl needs at least 2 samples per level");
  if (levels <= 0)
    levels = std::max(curve.max_level(), 1);
  auto vertex = [&](double x) { return geom::Point::from_doubles({x, curve.value(x)}); };
  std::vector<geom::Point> v{vertex(0.0)};
  for (int n = levels; std::ldexp(1.0, -n) < curve.t_end(); --n)
    for (int j = 0; j < resolution; ++j) {
      const double x = std::ldexp(1.0 + static_cast<double>(j) / resolution, -n);
      if (x < curve.t_end())
        v.push_back(vertex(x));
    }
  v.push_back(vertex(curve.t_end()));
  return geom::PolyPath(std::move(v));
}

CnDistance cn_distance(const GraphCurve& f, const GraphCurve& g, int order, int samples)
{
  check_order(order);
  if (f.t_end() != g.t_end())
    throw PreconditionError("cn_distance needs a common domain");
  if (samples < 2)
    throw PreconditionError("cn_distance needs at least 2 samples per interval");

  const bool symbolic = f.factors() == g.factors();
  const GraphCurve d = symbolic ? difference(f, g) : GraphCurve(f.t_end());
  auto diff_jet = [&](double x) {
    if (symbolic)
      return d.jet(x, order);
    auto a = f.jet(x, order);
    const auto b = g.jet(x, order);
    for (int k = 0; k <= order; ++k)
      a[k] -= b[k];
    return a;
  };

  std::vector<double> pts = f.breakpoints();
  const auto more = g.breakpoints();
  pts.insert(pts.end(), more.begin(), more.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto sweep = [&](int per_interval) {
    std::vector<double> best(order + 1, 0.0);
    auto visit = [&](double x) {
      const auto j = diff_jet(x);
      for (int k = 0; k <= order; ++k)
        best[k] = std::max(best[k], std::abs(j[k]));
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
      visit(pts[i]);
      if (i + 1 < pts.size())
        for (int s = 1; s <= per_interval; ++s)
          visit(pts[i] + (pts[i + 1] - pts[i]) * s / (per_interval + 1));
    }
    return best;
  };

  CnDistance out;
  out.samples = samples;
  out.per_order = sweep(samples);
  out.value = *std::max_element(out.per_order.begin(), out.per_order.end());
  const auto coarse = sweep(samples / 2);
  out.coarse_value = *std::max_element(coarse.begin(), coarse.end());
  return out;
}

} // namespace hoops::pathology
