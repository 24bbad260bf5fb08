#pragma once

// Deciding whether a word is an identity (a law) of a structure group, and
// searching for numerical witnesses that it is not.

#include "hoops/cayley.hpp"
#include "hoops/lie.hpp"
#include "hoops/words.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <variant>

namespace hoops::words {

struct AbelianConnectedLie
{};
struct NonsolvableConnectedLie
{};
struct Finite
{
  CayleyTable table;
};

using GroupClass = std::variant<AbelianConnectedLie, NonsolvableConnectedLie, Finite>;

/// Largest n^k accepted by the exhaustive finite-group check.
inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

/// True iff w evaluates to the identity under every assignment of group elements.
///
/// Connected abelian Lie groups: the exponent vector vanishes over the integers.
/// Connected non-solvable Lie groups: w reduces to the empty word.
/// Finite groups: exhaustive evaluation over all n^k assignments; throws
/// BudgetError when n^k exceeds `budget`.
bool is_identity(const Word& w, const GroupClass& g, std::uint64_t budget = default_enumeration_budget);

/// Value of w in a finite group under an assignment (index -> element).
int evaluate(const Word& w, const CayleyTable& g, const std::map<int, int>& assignment);

/// Value of w in a matrix group under an assignment (index -> matrix).
gauge::Matrix evaluate(const Word& w, const std::map<int, gauge::Matrix>& assignment, int dim);

struct Witness
{
  std::map<int, gauge::Matrix> assignment;
  gauge::Matrix value;
  double distance_from_identity = 0.0;
  int trial = 0; ///< zero-based index of the successful draw
};

struct WitnessOptions
{
  int trials = 200;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

/// Draws random assignments until w evaluates at operator-norm distance > tol
/// from the identity.  Returns std::nullopt when every draw failed; that is an
/// inconclusive outcome and never evidence that w is an identity.
///
/// Throws PreconditionError when w reduces to the empty word.
std::optional<Witness> witness_search(const Word& w, const gauge::MatrixSampler& sampler, int dim,
                                      const WitnessOptions& options = {});

} // namespace hoops::words
