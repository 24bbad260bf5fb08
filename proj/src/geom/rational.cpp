#include "hoops/rational.hpp"

#include "hoops/error.hpp"

#include <cmath>
#include <sstream>

namespace hoops::geom {

Point::Point(std::vector<Rational> coords) : c_(std::move(coords)) {}

Point Point::zero(int dim)
{
  return Point(std::vector<Rational>(dim, Rational(0)));
}

Point Point::from_ints(const std::vector<long>& coords)
{
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (long v : coords)
    c.emplace_back(v);
  return Point(std::move(c));
}

Point Point::from_doubles(const std::vector<double>& coords)
{
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (double v : coords) {
    if (!std::isfinite(v))
      throw NumericalError("non-finite coordinate");
    c.emplace_back(v); // exact: every finite double is a dyadic rational
  }
  return Point(std::move(c));
}

std::vector<double> Point::to_doubles() const
{
  std::vector<double> out;
  out.reserve(c_.size());
  for (const auto& v : c_)
    out.push_back(v.get_d());
  return out;
}

Point Point::operator+(const Point& o) const
{
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    r[i] = c_[i] + o.c_[i];
  return Point(std::move(r));
}

Point Point::operator-(const Point& o) const
{
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    r[i] = c_[i] - o.c_[i];
  return Point(std::move(r));
}

Point Point::operator*(const Rational& s) const
{
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    r[i] = c_[i] * s;
  return Point(std::move(r));
}

Rational Point::dot(const Point& o) const
{
  Rational s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    s += c_[i] * o.c_[i];
  return s;
}

std::string Point::to_string() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i)
    os << (i ? ", " : "") << format_rational(c_[i]);
  os << ')';
  return os.str();
}

Rational parse_rational(const std::string& text)
{
  std::string t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
    t.pop_back();
  std::size_t start = 0;
  while (start < t.size() && std::isspace(static_cast<unsigned char>(t[start])))
    ++start;
  t = t.substr(start);
  if (t.empty())
    throw InputError("empty rational");

  const auto dot = t.find('.');
  if (dot != std::string::npos) {
    // Plain decimal: sign, digits, '.', digits.
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    const std::size_t frac = t.size() - dot - 1;
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      neg = digits[0] == '-';
      digits.erase(0, 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad rational '" + text + "'");
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  const auto slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("bad rational '" + text + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0)
    throw InputError("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r)
{
  Rational c = r;
  c.canonicalize();
  return c.get_str(10);
}

bool parallel(const Point& u, const Point& v)
{
  for (int i = 0; i < u.dim(); ++i)
    for (int j = i + 1; j < u.dim(); ++j)
      if (u[i] * v[j] != u[j] * v[i])
        return false;
  return true;
}

std::optional<Rational> line_parameter(const Point& a0, const Point& a1, const Point& p)
{
  const Point d = a1 - a0;
  const Point r = p - a0;
  if (!parallel(d, r))
    return std::nullopt;
  return Rational(r.dot(d) / d.norm2());
}

SegmentIntersection intersect(const Point& a0, const Point& a1, const Point& b0, const Point& b1)
{
  using Kind = SegmentIntersection::Kind;
  const Point da = a1 - a0;
  const Point db = b1 - b0;
  const Point r = b0 - a0;
  SegmentIntersection out;

  if (parallel(da, db)) {
    if (!parallel(da, r))
      return out;
    const Rational n2 = da.norm2();
    Rational t0 = r.dot(da) / n2;
    Rational t1 = (b1 - a0).dot(da) / n2;
    if (t1 < t0)
      std::swap(t0, t1);
    const Rational lo = t0 > 0 ? t0 : Rational(0);
    const Rational hi = t1 < 1 ? t1 : Rational(1);
    if (lo > hi)
      return out;
    if (lo == hi) {
      out.kind = Kind::Point;
      out.points.push_back(a0 + da * lo);
    } else {
      out.kind = Kind::Overlap;
      out.points.push_back(a0 + da * lo);
      out.points.push_back(a0 + da * hi);
    }
    return out;
  }

  // Non-parallel: pick a coordinate pair with a nonzero 2x2 determinant.
  const int d = a0.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Rational det = db[i] * da[j] - da[i] * db[j];
      if (det == 0)
        continue;
      const Rational t = (db[i] * r[j] - r[i] * db[j]) / det;
      const Rational s = (da[i] * r[j] - da[j] * r[i]) / det;
      if (t < 0 || t > 1 || s < 0 || s > 1)
        return out;
      const Point p = a0 + da * t;
      if (p != b0 + db * s) // skew lines in d > 2
        return out;
      out.kind = Kind::Point;
      out.points.push_back(p);
      return out;
    }
  return out;
}

Rational distance2_point_segment(const Point& p, const Point& a0, const Point& a1)
{
  const Point d = a1 - a0;
  const Point w = p - a0;
  const Rational num = w.dot(d);
  if (num <= 0)
    return w.norm2();
  const Rational den = d.norm2();
  if (num >= den)
    return (p - a1).norm2();
  return w.norm2() - num * num / den;
}

double sqrt_lower(const Rational& value)
{
  if (value < 0)
    throw PreconditionError("sqrt_lower of a negative value");
  double r = std::sqrt(value.get_d());
  while (r > 0 && Rational(r) * Rational(r) > value)
    r = std::nextafter(r, 0.0);
  for (;;) {
    const double up = std::nextafter(r, INFINITY);
    if (Rational(up) * Rational(up) <= value)
      r = up;
    else
      break;
  }
  return r;
}

} // namespace hoops::geom
