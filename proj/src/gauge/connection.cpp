#include "hoops/connection.hpp"

#include "hoops/error.hpp"

#include <cmath>
#include <random>

namespace hoops::gauge {

double bump(double s)
{
  const double u = 1.0 - s * s;
  if (u <= 0.0)
    return 0.0;
  const double u2 = u * u;
  return u2 * u2 * u2 * u;
}

double bump_integral()
{
  // int_{-1}^{1} (1 - s^2)^n ds = 2^(2n+1) (n!)^2 / (2n+1)!
  constexpr int n = 7;
  double value = 2.0;
  for (int k = 1; k <= n; ++k)
    value *= (2.0 * k) / (2.0 * k + 1.0);
  return value;
}

Connection::Connection(LieGroupSpec spec, int dim, std::vector<BumpTerm> terms)
  : spec_(std::move(spec)), dim_(dim)
{
  if (dim < 1)
    throw InputError("connection dimension must be positive");
  for (auto& t : terms)
    add_term(std::move(t));
}

void Connection::validate(const BumpTerm& term) const
{
  if (static_cast<int>(term.center.size()) != dim_)
    throw InputError("bump center has dimension " + std::to_string(term.center.size()) + ", expected " +
                     std::to_string(dim_));
  for (double c : term.center)
    if (!std::isfinite(c))
      throw InputError("bump center is not finite");
  if (!(term.radius > 0.0) || !std::isfinite(term.radius))
    throw InputError("bump radius must be positive and finite");
  if (term.axis < 1 || term.axis > dim_)
    throw InputError("bump axis " + std::to_string(term.axis) + " outside [1, " + std::to_string(dim_) + "]");
  if (term.coefficient.rows() != spec_.dim() || term.coefficient.cols() != spec_.dim())
    throw InputError("bump coefficient has the wrong shape for " + to_string(spec_.name()));
  if (!spec_.in_algebra(term.coefficient, 1e-9))
    throw InputError("bump coefficient is not in the Lie algebra of " + to_string(spec_.name()));
}

void Connection::add_term(BumpTerm term)
{
  validate(term);
  terms_.push_back(std::move(term));
}

Matrix Connection::evaluate(const double* x, const double* v) const
{
  Matrix out = spec_.zero_algebra();
  for (const auto& t : terms_) {
    const double vm = v[t.axis - 1];
    if (vm == 0.0)
      continue;
    double d2 = 0.0;
    for (int i = 0; i < dim_; ++i) {
      const double d = x[i] - t.center[i];
      d2 += d * d;
    }
    const double r2 = t.radius * t.radius;
    if (d2 >= r2)
      continue;
    out += t.coefficient * (bump(std::sqrt(d2 / r2)) * vm);
  }
  return out;
}

Connection random_connection(const LieGroupSpec& spec, const RandomConnectionOptions& options, int n_terms,
                             std::uint64_t seed)
{
  const int dim = static_cast<int>(options.region_lo.size());
  if (dim < 1 || options.region_hi.size() != options.region_lo.size())
    throw InputError("random_connection needs a region box with matching corners");
  if (n_terms < 0)
    throw PreconditionError("random_connection needs n_terms >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> axis(1, dim);
  Connection out(spec, dim);
  for (int k = 0; k < n_terms; ++k) {
    BumpTerm t;
    t.center.resize(dim);
    for (int i = 0; i < dim; ++i)
      t.center[i] = options.region_lo[i] + unit(rng) * (options.region_hi[i] - options.region_lo[i]);
    t.radius = options.radius_min + unit(rng) * (options.radius_max - options.radius_min);
    t.axis = axis(rng);
    std::vector<double> c(spec.basis().size());
    for (auto& x : c)
      x = (2.0 * unit(rng) - 1.0) * options.coefficient_max;
    t.coefficient = spec.algebra_element(c);
    out.add_term(std::move(t));
  }
  return out;
}

} // namespace hoops::gauge
