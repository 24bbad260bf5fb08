#include "hoops/poly_loop.hpp"

#include "hoops/error.hpp"

#include <algorithm>

namespace hoops::geom {

namespace {

void check_dims(const std::vector<Point>& vertices, int dim)
{
  if (dim < 2)
    throw InputError("dimension must be >= 2, got " + std::to_string(dim));
  for (const auto& v : vertices)
    if (v.dim() != dim)
      throw InputError("vertex " + v.to_string() + " has dimension " + std::to_string(v.dim()) + ", expected " +
                       std::to_string(dim));
}

void check_distinct(const std::vector<Point>& vertices)
{
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      throw InputError("consecutive vertices coincide at " + vertices[i].to_string());
}

// True when the step top->next starts by running back along prev->top.
bool backtracks(const Point& prev, const Point& top, const Point& next)
{
  const Point in = top - prev;
  const Point out = next - top;
  return parallel(in, out) && in.dot(out) < 0;
}

} // namespace

PolyPath::PolyPath(std::vector<Point> vertices) : vertices_(std::move(vertices))
{
  if (vertices_.size() < 2)
    throw InputError("a path needs at least two vertices");
  check_dims(vertices_, vertices_.front().dim());
  check_distinct(vertices_);
}

PolyPath PolyPath::reversed() const
{
  return PolyPath(std::vector<Point>(vertices_.rbegin(), vertices_.rend()));
}

PolyLoop PolyLoop::constant(Point basepoint)
{
  return PolyLoop(basepoint, {basepoint});
}

PolyLoop::PolyLoop(Point basepoint, std::vector<Point> vertices)
  : basepoint_(std::move(basepoint)), vertices_(std::move(vertices))
{
  if (vertices_.empty())
    throw InputError("a loop needs at least its basepoint");
  check_dims(vertices_, basepoint_.dim());
  if (vertices_.front() != basepoint_ || vertices_.back() != basepoint_)
    throw InputError("loop must start and end at the basepoint " + basepoint_.to_string());
  // Collapse [o, o, ..., o] to the constant loop.
  if (std::all_of(vertices_.begin(), vertices_.end(), [&](const Point& p) { return p == basepoint_; })) {
    vertices_.resize(1);
    return;
  }
  check_distinct(vertices_);
}

PolyLoop::PolyLoop(std::vector<Point> vertices)
  : PolyLoop(vertices.empty() ? throw InputError("empty loop") : vertices.front(), vertices)
{}

PolyPath PolyLoop::path() const
{
  if (is_constant())
    throw PreconditionError("the constant loop has no path");
  return PolyPath(vertices_);
}

PolyLoop compose(const PolyLoop& a, const PolyLoop& b)
{
  if (a.dim() != b.dim())
    throw InputError("cannot compose loops of different dimension");
  if (a.basepoint() != b.basepoint())
    throw InputError("cannot compose loops with different basepoints " + a.basepoint().to_string() + " and " +
                     b.basepoint().to_string());
  if (a.is_constant())
    return b;
  if (b.is_constant())
    return a;
  std::vector<Point> v = a.vertices();
  v.insert(v.end(), b.vertices().begin() + 1, b.vertices().end());
  return PolyLoop(a.basepoint(), std::move(v));
}

PolyLoop invert_loop(const PolyLoop& a)
{
  return PolyLoop(a.basepoint(), std::vector<Point>(a.vertices().rbegin(), a.vertices().rend()));
}

PolyLoop spur_reduce(const PolyLoop& a)
{
  if (a.is_constant())
    return a;
  std::vector<Point> stack;
  stack.reserve(a.vertices().size());
  stack.push_back(a.vertices().front());
  for (std::size_t i = 1; i < a.vertices().size(); ++i) {
    const Point& next = a.vertices()[i];
    for (;;) {
      if (stack.back() == next)
        break; // retraced exactly back to the current end
      if (stack.size() >= 2 && backtracks(stack[stack.size() - 2], stack.back(), next)) {
        // prev -> top -> next retraces part of prev->top: shortcut to prev -> next
        stack.pop_back();
        continue;
      }
      stack.push_back(next);
      break;
    }
  }
  return PolyLoop(a.basepoint(), std::move(stack));
}

} // namespace hoops::geom
