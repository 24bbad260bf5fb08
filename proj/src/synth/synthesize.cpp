#include "hoops/synthesize.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <cmath>

namespace hoops::synth {

namespace {

constexpr double kWitnessAngle = 1.0; // radians; no nonzero multiple is in 2 pi Z
// Largest algebra norm carried by one bump; RK4 error grows like |X|^5.
constexpr double kMaxBumpNorm = 0.5;

std::string segment_name(const geom::Generator& g)
{
  return "e" + std::to_string(g.index) + " [" + g.marked_start.to_string() + " -> " + g.marked_end.to_string() + "]";
}

bool is_zero(const Matrix& x)
{
  return x.cwiseAbs().maxCoeff() == 0.0;
}

} // namespace

std::string to_string(Verdict v)
{
  switch (v) {
    case Verdict::Trivial: return "TRIVIAL";
    case Verdict::Nontrivial: return "NONTRIVIAL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

words::GroupClass group_class(const LieGroupSpec& spec)
{
  if (spec.is_abelian())
    return words::AbelianConnectedLie{};
  return words::NonsolvableConnectedLie{};
}

Synthesis synthesize(const geom::Decomposition& dec, const std::vector<Matrix>& targets, const LieGroupSpec& spec,
                     const SynthesisOptions& options)
{
  if (targets.size() != dec.generators.size())
    throw PreconditionError("synthesize needs one target per generator: got " + std::to_string(targets.size()) +
                            " for " + std::to_string(dec.generators.size()));
  if (!geom::is_independent(dec))
    throw PreconditionError("synthesize needs an independent decomposition");

  const int dim = dec.basepoint.dim();
  Synthesis out{Connection(spec, dim), {}};
  for (std::size_t i = 0; i < dec.generators.size(); ++i) {
    const geom::Generator& g = dec.generators[i];
    Provenance prov;
    prov.generator = g.index;
    prov.target = targets[i];
    const gauge::LogResult log = gauge::log_map(targets[i], spec);
    for (const auto& f : log.factors) {
      if (is_zero(f))
        continue;
      const int pieces = std::max(1, static_cast<int>(std::ceil(gauge::operator_norm(f) / kMaxBumpNorm)));
      for (int p = 0; p < pieces; ++p)
        prov.factors.push_back(f / static_cast<double>(pieces));
    }
    if (!prov.factors.empty() && g.clearance < options.min_clearance)
      throw PreconditionError("clearance radius " + std::to_string(g.clearance) + " below the minimum " +
                              std::to_string(options.min_clearance) + " at marked segment " + segment_name(g));

    // Unit direction of the marked segment, positive orientation.
    const std::vector<double> m = g.midpoint.to_doubles();
    const std::vector<double> a = g.marked_start.to_doubles();
    std::vector<double> u(dim);
    double len = 0.0;
    for (int k = 0; k < dim; ++k) {
      u[k] = m[k] - a[k];
      len += u[k] * u[k];
    }
    len = std::sqrt(len);
    int axis = 0;
    for (int k = 0; k < dim; ++k) {
      u[k] /= len;
      if (std::abs(u[k]) > std::abs(u[axis]))
        axis = k;
    }

    // k bumps in traversal order inside the clearance ball, one per factor.
    const int nf = static_cast<int>(prov.factors.size());
    const double big_r = g.clearance;
    const double rho = 0.9 * big_r / std::max(nf, 1);
    for (int j = 0; j < nf; ++j) {
      const double offset = -big_r + (2.0 * j + 1.0) * big_r / nf;
      gauge::BumpTerm t;
      t.center.resize(dim);
      for (int k = 0; k < dim; ++k)
        t.center[k] = m[k] + offset * u[k];
      t.radius = rho;
      t.axis = axis + 1;
      // Along the chord, int A = X * rho * I_b * u_axis.
      t.coefficient = prov.factors[j] / (rho * gauge::bump_integral() * u[axis]);
      prov.terms.push_back(static_cast<int>(out.connection.terms().size()));
      out.connection.add_term(std::move(t));
    }
    out.provenance.push_back(std::move(prov));
  }

  if (options.verify) {
    for (std::size_t i = 0; i < dec.generators.size(); ++i) {
      const Holonomy h = gauge::transport(out.connection, dec.generators[i].loop, options.steps);
      const double d = gauge::group_distance(h, targets[i]);
      out.provenance[i].achieved_distance = d;
      if (!(d <= options.tolerance))
        throw NumericalError("synthesized holonomy of " + segment_name(dec.generators[i]) + " misses its target by " +
                             std::to_string(d));
    }
  }
  return out;
}

FalsifyResult falsify_hoop_triviality(const geom::PolyLoop& loop, const LieGroupSpec& spec,
                                      const FalsifyOptions& options)
{
  FalsifyResult out;
  out.decomposition = geom::decompose(loop);
  const geom::Decomposition& dec = out.decomposition;
  out.word_value = spec.identity();
  if (words::is_identity(dec.word, group_class(spec))) {
    out.verdict = Verdict::Trivial;
    return out;
  }

  out.targets.assign(dec.generators.size(), spec.identity());
  if (spec.is_abelian()) {
    const auto ev = words::exponent_vector(dec.word);
    for (const auto& [index, count] : ev.entries())
      if (count != 0) {
        out.targets[index - 1] = Matrix::Constant(1, 1, std::exp(std::complex<double>(0.0, kWitnessAngle)));
        break;
      }
  } else {
    const auto witness = words::witness_search(
      dec.word, spec.sampler(), spec.dim(),
      {options.witness_trials, options.witness_tolerance, options.seed});
    if (!witness) {
      out.verdict = Verdict::Inconclusive;
      return out;
    }
    for (const auto& [index, value] : witness->assignment)
      out.targets[index - 1] = value;
  }

  std::map<int, Matrix> assignment;
  for (std::size_t i = 0; i < out.targets.size(); ++i)
    assignment[static_cast<int>(i) + 1] = out.targets[i];
  out.word_value = words::evaluate(dec.word, assignment, spec.dim());

  out.synthesis = synthesize(dec, out.targets, spec, options.synthesis);
  out.holonomy = gauge::transport(out.synthesis->connection, loop, options.synthesis.steps);
  out.distance_from_identity = gauge::group_distance(*out.holonomy, spec.identity());
  out.verdict = out.distance_from_identity > options.holonomy_tolerance ? Verdict::Nontrivial : Verdict::Inconclusive;
  return out;
}

} // namespace hoops::synth
