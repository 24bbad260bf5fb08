#include "hoops/cayley.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hoops::words {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q)
{
  // (p*q)(i) = p(q(i))
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = p[q[i]];
  return r;
}

int parity(const Perm& p)
{
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        ++inversions;
  return inversions % 2;
}

CayleyTable from_permutations(std::vector<Perm> perms)
{
  std::sort(perms.begin(), perms.end()); // identity permutation sorts first
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b)
      t[a][b] = index.at(compose(perms[a], perms[b]));
  return CayleyTable(std::move(t));
}

std::vector<Perm> all_permutations(int n)
{
  std::vector<Perm> perms;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

} // namespace

CayleyTable::CayleyTable(std::vector<std::vector<int>> table) : table_(std::move(table))
{
  const int n = order();
  if (n < 1)
    throw InputError("Cayley table must have order >= 1");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw InputError("Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw InputError("Cayley table entry out of range: " + std::to_string(v));
  }
  for (int a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw InputError("row 0 and column 0 of a Cayley table must be the identity");
  for (int a = 0; a < n; ++a) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row_seen[table_[a][b]]++ || col_seen[table_[b][a]]++)
        throw InputError("Cayley table row/column " + std::to_string(a) + " is not a permutation");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("Cayley table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0)
        inverse_[a] = b;
}

CayleyTable CayleyTable::parse(std::istream& in)
{
  std::vector<long> numbers;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size())
          throw InputError("bad integer in Cayley table: " + tok);
        numbers.push_back(v);
      } catch (const std::logic_error&) {
        throw InputError("bad integer in Cayley table: " + tok);
      }
    }
  }
  if (numbers.empty())
    throw InputError("empty Cayley table");
  const long n = numbers[0];
  if (n < 1 || n > 4096)
    throw InputError("Cayley table order out of range: " + std::to_string(n));
  if (static_cast<long>(numbers.size()) != 1 + n * n)
    throw InputError("Cayley table of order " + std::to_string(n) + " needs " + std::to_string(n * n) +
                     " entries, got " + std::to_string(numbers.size() - 1));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      t[a][b] = static_cast<int>(numbers[1 + a * n + b]);
  return CayleyTable(std::move(t));
}

CayleyTable CayleyTable::parse(const std::string& text)
{
  std::istringstream in(text);
  return parse(in);
}

std::string CayleyTable::to_text() const
{
  std::ostringstream os;
  os << order() << '\n';
  for (const auto& row : table_) {
    for (std::size_t b = 0; b < row.size(); ++b)
      os << (b ? " " : "") << row[b];
    os << '\n';
  }
  return os.str();
}

CayleyTable CayleyTable::cyclic(int n)
{
  if (n < 1)
    throw PreconditionError("cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a][b] = (a + b) % n;
  return CayleyTable(std::move(t));
}

CayleyTable CayleyTable::symmetric(int n)
{
  if (n < 1 || n > 6)
    throw PreconditionError("symmetric group degree must be in [1,6]");
  return from_permutations(all_permutations(n));
}

CayleyTable CayleyTable::alternating(int n)
{
  if (n < 1 || n > 6)
    throw PreconditionError("alternating group degree must be in [1,6]");
  std::vector<Perm> even;
  for (auto& p : all_permutations(n))
    if (parity(p) == 0)
      even.push_back(std::move(p));
  return from_permutations(std::move(even));
}

CayleyTable CayleyTable::direct_product(const CayleyTable& a, const CayleyTable& b)
{
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return CayleyTable(std::move(t));
}

ElementSet subgroup_closure(const CayleyTable& g, const ElementSet& generators)
{
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  // Breadth-first closure under right multiplication by generators; finite
  // groups need no inverses for this.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int s : generators) {
      const int p = g.mul(members[i], s);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

ElementSet derived_subgroup(const CayleyTable& g, const ElementSet& h)
{
  std::vector<char> seen(g.order(), 0);
  ElementSet commutators;
  for (int x : h)
    for (int y : h) {
      const int c = g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)));
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  return subgroup_closure(g, commutators);
}

std::vector<ElementSet> derived_series(const CayleyTable& g)
{
  ElementSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<ElementSet> series{all};
  while (series.back().size() > 1) {
    ElementSet next = derived_subgroup(g, series.back());
    const bool stable = next == series.back();
    series.push_back(std::move(next));
    if (stable)
      break;
  }
  return series;
}

bool is_solvable(const CayleyTable& g)
{
  return derived_series(g).back().size() == 1;
}

} // namespace hoops::words
