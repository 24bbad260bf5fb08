#pragma once

// Connections with prescribed holonomies on independent generator loops, and
// the resulting decision procedure for hoop triviality.

#include "hoops/identity.hpp"
#include "hoops/log_map.hpp"
#include "hoops/transport.hpp"

#include <optional>

namespace hoops::synth {

using gauge::Connection;
using gauge::Holonomy;
using gauge::LieGroupSpec;
using gauge::Matrix;

struct SynthesisOptions
{
  double min_clearance = 1e-6; ///< smallest accepted clearance radius
  int steps = gauge::kDefaultSteps;
  bool verify = true;       ///< transport every generator and check the target
  double tolerance = 1e-6;  ///< accepted distance in the verification
};

/// Audit trail for one generator.
struct Provenance
{
  int generator = 1;             ///< index i of e_i
  Matrix target;
  std::vector<int> terms;        ///< indices into the connection's term list
  /// Algebra element of each term, in traversal order: the log_map factors,
  /// each split into equal commuting parts of bounded norm.
  std::vector<Matrix> factors;
  double achieved_distance = -1; ///< transport vs target, -1 when not verified
};

struct Synthesis
{
  Connection connection;
  std::vector<Provenance> provenance;
};

/// Places bump terms inside each generator's clearance ball so that
/// transport(result, gamma_i) = targets[i].  Throws PreconditionError for
/// dependent decompositions, wrong target counts, targets off the group or
/// clearances below the minimum; NumericalError when verification fails.
Synthesis synthesize(const geom::Decomposition& dec, const std::vector<Matrix>& targets, const LieGroupSpec& spec,
                     const SynthesisOptions& options = {});

/// Decision class of a structure group: U(1) is abelian, the others are
/// connected and non-solvable.
words::GroupClass group_class(const LieGroupSpec& spec);

enum class Verdict { Trivial, Nontrivial, Inconclusive };

struct FalsifyOptions
{
  std::uint64_t seed = 0;
  int witness_trials = 200;
  double witness_tolerance = 1e-3; ///< word-value distance a witness must exceed
  double holonomy_tolerance = 1e-6; ///< verified distance of H(loop) from the identity
  SynthesisOptions synthesis;
};

struct FalsifyResult
{
  Verdict verdict = Verdict::Trivial;
  geom::Decomposition decomposition;
  std::optional<Synthesis> synthesis;
  std::vector<Matrix> targets;  ///< generator holonomies of the witness
  std::optional<Holonomy> holonomy; ///< transport of the whole loop
  Matrix word_value;            ///< word evaluated on the targets
  double distance_from_identity = 0.0;
};

/// Trivial iff the loop's word is an identity of the group class; otherwise
/// a witnessing connection with verified non-identity holonomy.
FalsifyResult falsify_hoop_triviality(const geom::PolyLoop& loop, const LieGroupSpec& spec,
                                      const FalsifyOptions& options = {});

std::string to_string(Verdict v);

} // namespace hoops::synth
