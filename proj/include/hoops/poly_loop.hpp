#pragma once

#include "hoops/rational.hpp"

#include <vector>

namespace hoops::geom {

/// Piecewise-linear path through exact rational vertices.
/// Invariants: dim >= 2, at least two vertices, consecutive vertices distinct.
class PolyPath
{
public:
  explicit PolyPath(std::vector<Point> vertices);

  int dim() const { return vertices_.front().dim(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t num_segments() const { return vertices_.size() - 1; }
  PolyPath reversed() const;

private:
  std::vector<Point> vertices_;
};

/// Based closed PL curve.  The constant loop is a dedicated state holding only
/// the basepoint; every other loop starts and ends at the basepoint and has at
/// least three vertices.
class PolyLoop
{
public:
  /// Placeholder constant loop at the zero-dimensional origin.
  PolyLoop() : vertices_{Point()} {}
  static PolyLoop constant(Point basepoint);
  /// vertices.front() and vertices.back() must both equal the basepoint; a
  /// vertex list that collapses to the basepoint alone gives the constant loop.
  PolyLoop(Point basepoint, std::vector<Point> vertices);
  /// Basepoint taken from the first vertex.
  explicit PolyLoop(std::vector<Point> vertices);

  const Point& basepoint() const { return basepoint_; }
  int dim() const { return basepoint_.dim(); }
  bool is_constant() const { return vertices_.size() == 1; }
  /// For the constant loop this is just {basepoint}.
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t num_segments() const { return vertices_.size() - 1; }
  /// Throws PreconditionError for the constant loop.
  PolyPath path() const;

  friend bool operator==(const PolyLoop& a, const PolyLoop& b)
  {
    return a.basepoint_ == b.basepoint_ && a.vertices_ == b.vertices_;
  }

private:
  Point basepoint_;
  std::vector<Point> vertices_;
};

/// Curve composition: traverse a, then b.  Throws InputError on basepoint or
/// dimension mismatch.
PolyLoop compose(const PolyLoop& a, const PolyLoop& b);
PolyLoop invert_loop(const PolyLoop& a);
/// Removes immediately retraced sub-segments, including partial backtracks
/// along a segment, until none remain.
PolyLoop spur_reduce(const PolyLoop& a);

} // namespace hoops::geom
