#pragma once

#include "hoops/poly_loop.hpp"

#include <random>

namespace hoops::testing {

/// Random closed lattice walk from the origin: a small grid makes crossings,
/// overlaps and retracings frequent.
inline geom::PolyLoop random_lattice_loop(std::mt19937_64& rng, int segments, int grid = 4, int dim = 2)
{
  std::uniform_int_distribution<long> coord(0, grid);
  const geom::Point o = geom::Point::zero(dim);
  std::vector<geom::Point> v{o};
  while (static_cast<int>(v.size()) < segments) {
    std::vector<long> c(dim);
    for (auto& x : c)
      x = coord(rng);
    geom::Point p = geom::Point::from_ints(c);
    if (p != v.back())
      v.push_back(std::move(p));
  }
  if (v.back() == o)
    v.pop_back();
  v.push_back(o);
  return geom::PolyLoop(o, std::move(v));
}

} // namespace hoops::testing
