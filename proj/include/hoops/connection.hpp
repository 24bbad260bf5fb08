#pragma once

#include "hoops/lie.hpp"

#include <cstdint>
#include <vector>

namespace hoops::gauge {

/// Radial profile b(s) = (1 - s^2)^7 for |s| <= 1, zero outside (C^6).
double bump(double s);
/// Integral of b over [-1, 1].
double bump_integral();

/// One term X * b(|x - c| / r) dx^axis of a connection 1-form.
struct BumpTerm
{
  std::vector<double> center;
  double radius = 1.0;
  int axis = 1; ///< 1-based coordinate index
  Matrix coefficient;
};

/// Lie-algebra valued 1-form on R^d given by a finite sum of bump terms.
class Connection
{
public:
  Connection(LieGroupSpec spec, int dim, std::vector<BumpTerm> terms = {});

  const LieGroupSpec& spec() const { return spec_; }
  int dim() const { return dim_; }
  const std::vector<BumpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(BumpTerm term);

  /// A(x)[v] as an algebra element.
  Matrix evaluate(const double* x, const double* v) const;

private:
  void validate(const BumpTerm& term) const;

  LieGroupSpec spec_;
  int dim_;
  std::vector<BumpTerm> terms_;
};

struct RandomConnectionOptions
{
  std::vector<double> region_lo; ///< centers are drawn uniformly from the box
  std::vector<double> region_hi;
  double radius_min = 0.5;
  double radius_max = 1.5;
  double coefficient_max = 1.0; ///< algebra coordinates drawn from [-max, max]
};

/// Seed-deterministic random connection.
Connection random_connection(const LieGroupSpec& spec, const RandomConnectionOptions& options, int n_terms,
                             std::uint64_t seed);

} // namespace hoops::gauge
