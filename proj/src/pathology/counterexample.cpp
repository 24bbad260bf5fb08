#include "hoops/counterexample.hpp"

#include "hoops/error.hpp"

#include <cmath>

namespace hoops::pathology {

double level_scale(int n)
{
  return std::ldexp(1.0 / counterexample_constant(n), -n);
}

CounterexampleFamily counterexample_family(int n_max)
{
  if (n_max < 1 || n_max > kMaxCounterexampleLevels)
    throw PreconditionError("counterexample levels must be in 1.." + std::to_string(kMaxCounterexampleLevels));
  std::vector<BumpAtom> a1, a2;
  for (int n = 1; n <= n_max; ++n) {
    a1.push_back({n, 1, level_scale(n)});
    a2.push_back({n, n % 2 == 0 ? 1 : -1, level_scale(n)});
  }
  const GraphCurve f1(1.0, a1), f2(1.0, a2);
  return {n_max, {f1, f2, f1.negated(), f2.negated()}};
}

gauge::Holonomy transport_loop(const gauge::Connection& a, const CounterexampleFamily& family, int steps)
{
  if (a.dim() != 2)
    throw InputError("graph curves live in the plane; connection has dimension " + std::to_string(a.dim()));
  std::vector<gauge::CurvePiece> pieces;
  for (int i = 0; i < 4; ++i) {
    const auto p = graph_pieces(family.curves[i], i % 2 == 1);
    pieces.insert(pieces.end(), p.begin(), p.end());
  }
  return gauge::transport_pieces(a, pieces, steps);
}

geom::PolyLoop flatten_loop(const CounterexampleFamily& family, int resolution)
{
  std::vector<geom::Point> v;
  for (int i = 0; i < 4; ++i) {
    auto path = flatten_to_pl(family.curves[i], resolution, family.levels);
    if (i % 2 == 1)
      path = path.reversed();
    const auto& pv = path.vertices();
    v.insert(v.end(), pv.begin() + (v.empty() ? 0 : 1), pv.end());
  }
  const geom::Point base = v.front();
  return geom::PolyLoop(base, std::move(v));
}

} // namespace hoops::pathology
