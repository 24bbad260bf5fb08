#include "hoops/transport.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <cmath>

namespace hoops::gauge {

namespace {

void require_same_group(const LieGroupSpec& a, const LieGroupSpec& b)
{
  if (!(a == b))
    throw PreconditionError("holonomies in different groups: " + to_string(a.name()) + " vs " + to_string(b.name()));
}

Holonomy finish(const LieGroupSpec& spec, const Matrix& u, double error)
{
  if (!u.allFinite() || !std::isfinite(error))
    throw NumericalError("transport produced non-finite values");
  Holonomy h{spec.project(u), spec, error, 0.0};
  h.residual = spec.residual(h.matrix);
  return h;
}

// Unprojected RK4 transport.
Matrix integrate(const Connection& a, const std::vector<CurvePiece>& pieces, int steps)
{
  const int d = a.dim();
  std::vector<double> x(d), dx(d);
  Matrix u = a.spec().identity();
  auto rate = [&](const CurvePiece& p, double t) {
    p.eval(t, x.data(), dx.data());
    return a.evaluate(x.data(), dx.data());
  };
  for (const auto& p : pieces) {
    const double h = (p.t1 - p.t0) / steps;
    Matrix m0 = rate(p, p.t0);
    for (int s = 0; s < steps; ++s) {
      const double t = p.t0 + s * h;
      const double t_end = s + 1 == steps ? p.t1 : t + h;
      const Matrix mh = rate(p, t + 0.5 * h);
      const Matrix m1 = rate(p, t_end);
      const Matrix k1 = u * m0;
      const Matrix k2 = (u + (0.5 * h) * k1) * mh;
      const Matrix k3 = (u + (0.5 * h) * k2) * mh;
      const Matrix k4 = (u + h * k3) * m1;
      u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      m0 = m1;
    }
  }
  return u;
}

// Parameters in (0, 1) where the segment p + t d crosses a bump sphere.
void support_cuts(const Connection& a, const std::vector<double>& p, const std::vector<double>& d,
                  std::vector<double>& cuts)
{
  const int dim = a.dim();
  double dd = 0.0;
  for (int i = 0; i < dim; ++i)
    dd += d[i] * d[i];
  for (const auto& term : a.terms()) {
    double pc = 0.0, cc = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double w = p[i] - term.center[i];
      pc += w * d[i];
      cc += w * w;
    }
    const double disc = pc * pc - dd * (cc - term.radius * term.radius);
    if (disc <= 0.0)
      continue;
    const double root = std::sqrt(disc);
    for (double t : {(-pc - root) / dd, (-pc + root) / dd})
      if (t > 0.0 && t < 1.0)
        cuts.push_back(t);
  }
}

// Whether the open segment (t0, t1) of p + t d meets some support.
bool touches_support(const Connection& a, const std::vector<double>& p, const std::vector<double>& d, double t0,
                     double t1)
{
  const double tm = 0.5 * (t0 + t1);
  const int dim = a.dim();
  for (const auto& term : a.terms()) {
    double d2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double w = p[i] + tm * d[i] - term.center[i];
      d2 += w * w;
    }
    if (d2 < term.radius * term.radius)
      return true;
  }
  return false;
}

std::vector<CurvePiece> pl_pieces(const Connection& a, const geom::PolyPath& path)
{
  if (path.dim() != a.dim())
    throw InputError("path dimension " + std::to_string(path.dim()) + " does not match connection dimension " +
                     std::to_string(a.dim()));
  std::vector<CurvePiece> pieces;
  const auto& v = path.vertices();
  for (std::size_t i = 1; i < v.size(); ++i) {
    const std::vector<double> p = v[i - 1].to_doubles();
    const std::vector<double> q = v[i].to_doubles();
    std::vector<double> d(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
      d[k] = q[k] - p[k];
    std::vector<double> cuts{0.0, 1.0};
    support_cuts(a, p, d, cuts);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t k = 1; k < cuts.size(); ++k) {
      if (!touches_support(a, p, d, cuts[k - 1], cuts[k]))
        continue;
      pieces.push_back({cuts[k - 1], cuts[k], [p, d](double t, double* x, double* dx) {
                          for (std::size_t j = 0; j < p.size(); ++j) {
                            x[j] = p[j] + t * d[j];
                            dx[j] = d[j];
                          }
                        }});
    }
  }
  return pieces;
}

} // namespace

Holonomy operator*(const Holonomy& a, const Holonomy& b)
{
  require_same_group(a.spec, b.spec);
  Holonomy h{a.spec.project(a.matrix * b.matrix), a.spec, a.error + b.error, 0.0};
  h.residual = h.spec.residual(h.matrix);
  return h;
}

Holonomy inverse(const Holonomy& h)
{
  Holonomy out{h.spec.project(h.matrix.inverse()), h.spec, h.error, 0.0};
  out.residual = out.spec.residual(out.matrix);
  return out;
}

double group_distance(const Holonomy& a, const Holonomy& b)
{
  require_same_group(a.spec, b.spec);
  return distance(a.matrix, b.matrix);
}

double group_distance(const Holonomy& a, const Matrix& b)
{
  if (b.rows() != a.matrix.rows() || b.cols() != a.matrix.cols())
    throw PreconditionError("matrix shape does not match " + to_string(a.spec.name()));
  return distance(a.matrix, b);
}

Holonomy transport_pieces(const Connection& a, const std::vector<CurvePiece>& pieces, int steps)
{
  if (steps < 1)
    throw PreconditionError("transport needs steps >= 1");
  if (a.is_zero() || pieces.empty())
    return Holonomy::identity(a.spec());
  const Matrix coarse = integrate(a, pieces, steps);
  const Matrix fine = integrate(a, pieces, 2 * steps);
  if (!coarse.allFinite() || !fine.allFinite())
    throw NumericalError("transport produced non-finite values");
  return finish(a.spec(), coarse, distance(coarse, fine));
}

Holonomy transport(const Connection& a, const geom::PolyPath& path, int steps)
{
  if (steps < 1)
    throw PreconditionError("transport needs steps >= 1");
  return transport_pieces(a, pl_pieces(a, path), steps);
}

Holonomy transport(const Connection& a, const geom::PolyLoop& loop, int steps)
{
  if (loop.is_constant()) {
    if (loop.dim() != a.dim())
      throw InputError("loop dimension does not match connection dimension");
    return Holonomy::identity(a.spec());
  }
  return transport(a, loop.path(), steps);
}

Holonomy evaluate_word(const words::Word& word, const std::vector<Holonomy>& generators, const LieGroupSpec& spec)
{
  Holonomy out = Holonomy::identity(spec);
  for (const auto& s : word.symbols()) {
    if (s.index > static_cast<int>(generators.size()))
      throw PreconditionError("word uses e" + std::to_string(s.index) + " but only " +
                              std::to_string(generators.size()) + " generator holonomies are given");
    const Holonomy& g = generators[s.index - 1];
    out = out * (s.sign > 0 ? g : inverse(g));
  }
  return out;
}

Holonomy holonomy_of_word(const Connection& a, const geom::Decomposition& dec, int steps)
{
  if (dec.basepoint.dim() != a.dim())
    throw InputError("decomposition dimension does not match connection dimension");
  std::vector<Holonomy> gens;
  gens.reserve(dec.generators.size());
  for (const auto& g : dec.generators)
    gens.push_back(transport(a, g.loop, steps));
  return evaluate_word(dec.word, gens, a.spec());
}

} // namespace hoops::gauge
