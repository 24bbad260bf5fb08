#include "hoops/identity.hpp"

#include "hoops/error.hpp"

#include <limits>

namespace hoops::words {

namespace {

bool finite_identity(const Word& w, const CayleyTable& g, std::uint64_t budget)
{
  const Word r = reduce(w);
  if (r.empty())
    return true;
  const std::vector<int> gens = r.generators();
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (total > budget / n)
      throw BudgetError("finite identity check needs " + std::to_string(n) + "^" + std::to_string(gens.size()) +
                        " assignments, over the budget of " + std::to_string(budget));
    total *= n;
  }
  if (total > budget)
    throw BudgetError("finite identity check needs " + std::to_string(total) +
                      " assignments, over the budget of " + std::to_string(budget));

  // Positions into the assignment vector, one per symbol, so the inner loop
  // avoids map lookups.
  std::vector<std::size_t> slot(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    slot[i] = static_cast<std::size_t>(std::lower_bound(gens.begin(), gens.end(), r[i].index) - gens.begin());

  std::vector<int> value(gens.size(), 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    int acc = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const int x = value[slot[i]];
      acc = g.mul(acc, r[i].sign > 0 ? x : g.inverse(x));
    }
    if (acc != 0)
      return false;
    // odometer increment
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (++value[k] < g.order())
        break;
      value[k] = 0;
    }
  }
  return true;
}

} // namespace

bool is_identity(const Word& w, const GroupClass& g, std::uint64_t budget)
{
  return std::visit(
    [&](const auto& cls) -> bool {
      using T = std::decay_t<decltype(cls)>;
      if constexpr (std::is_same_v<T, AbelianConnectedLie>)
        return exponent_vector(w).is_zero();
      else if constexpr (std::is_same_v<T, NonsolvableConnectedLie>)
        return reduce(w).empty();
      else
        return finite_identity(w, cls.table, budget);
    },
    g);
}

int evaluate(const Word& w, const CayleyTable& g, const std::map<int, int>& assignment)
{
  int acc = 0;
  for (const auto& s : w.symbols()) {
    auto it = assignment.find(s.index);
    if (it == assignment.end())
      throw PreconditionError("no element assigned to e" + std::to_string(s.index));
    acc = g.mul(acc, s.sign > 0 ? it->second : g.inverse(it->second));
  }
  return acc;
}

gauge::Matrix evaluate(const Word& w, const std::map<int, gauge::Matrix>& assignment, int dim)
{
  gauge::Matrix acc = gauge::Matrix::Identity(dim, dim);
  std::map<int, gauge::Matrix> inverses;
  for (const auto& s : w.symbols()) {
    auto it = assignment.find(s.index);
    if (it == assignment.end())
      throw PreconditionError("no matrix assigned to e" + std::to_string(s.index));
    if (s.sign > 0) {
      acc = acc * it->second;
    } else {
      auto inv = inverses.find(s.index);
      if (inv == inverses.end())
        inv = inverses.emplace(s.index, it->second.inverse()).first;
      acc = acc * inv->second;
    }
  }
  return acc;
}

std::optional<Witness> witness_search(const Word& w, const gauge::MatrixSampler& sampler, int dim,
                                      const WitnessOptions& options)
{
  const Word r = reduce(w);
  if (r.empty())
    throw PreconditionError("witness search needs a word that does not reduce to the empty word");
  std::mt19937_64 rng(options.seed);
  const gauge::Matrix id = gauge::Matrix::Identity(dim, dim);
  for (int trial = 0; trial < options.trials; ++trial) {
    std::map<int, gauge::Matrix> assignment;
    for (int idx : r.generators())
      assignment.emplace(idx, sampler(rng));
    gauge::Matrix value = evaluate(r, assignment, dim);
    const double d = gauge::distance(value, id);
    if (d > options.tol)
      return Witness{std::move(assignment), std::move(value), d, trial};
  }
  return std::nullopt;
}

} // namespace hoops::words
