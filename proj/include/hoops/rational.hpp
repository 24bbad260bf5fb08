#pragma once

// Exact rational points and segment predicates.  No tolerances anywhere.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hoops::geom {

using Rational = mpq_class;

/// A point of Q^d.
class Point
{
public:
  Point() = default;
  explicit Point(std::vector<Rational> coords);
  static Point zero(int dim);
  static Point from_ints(const std::vector<long>& coords);
  /// Exact conversion of binary floating point values.
  static Point from_doubles(const std::vector<double>& coords);

  int dim() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }
  std::vector<double> to_doubles() const;

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;
  Point operator*(const Rational& s) const;
  Rational dot(const Point& o) const;
  Rational norm2() const { return dot(*this); }

  friend bool operator==(const Point& a, const Point& b) { return a.c_ == b.c_; }
  friend bool operator<(const Point& a, const Point& b) { return a.c_ < b.c_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  /// "(1/2, 3)" style.
  std::string to_string() const;

private:
  std::vector<Rational> c_;
};

/// Parses "p/q", "p" or a decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

/// True iff u and v are parallel (possibly zero).
bool parallel(const Point& u, const Point& v);

/// Intersection of two closed segments [a0,a1] and [b0,b1] (non-degenerate).
struct SegmentIntersection
{
  enum class Kind { None, Point, Overlap } kind = Kind::None;
  /// For Point: one entry; for Overlap: the two ends of the shared sub-segment.
  std::vector<Point> points;
};

SegmentIntersection intersect(const Point& a0, const Point& a1, const Point& b0, const Point& b1);

/// Parameter t with p = a0 + t (a1 - a0) when p lies on the line; nullopt otherwise.
std::optional<Rational> line_parameter(const Point& a0, const Point& a1, const Point& p);

/// Squared Euclidean distance from p to the closed segment [a0,a1].
Rational distance2_point_segment(const Point& p, const Point& a0, const Point& a1);

/// Largest double r (to within one ulp) with r*r <= value, value >= 0.
double sqrt_lower(const Rational& value);

} // namespace hoops::geom
