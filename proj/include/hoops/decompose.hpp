#pragma once

// Decomposition of a PL loop into a word in independent generator loops.
//
// The loop's segments are cut into an arrangement; a spanning tree rooted at
// the basepoint is chosen, and every non-tree edge gives one generator
//
//     gamma_i = (tree path o -> start) . edge . (tree path end -> o).
//
// Tree paths never use non-tree edges, so the middle third of each non-tree
// edge is traced exactly once by its generator and by no other generator.

#include "hoops/arrangement.hpp"
#include "hoops/words.hpp"

#include <cstdint>
#include <vector>

namespace hoops::geom {

enum class TreeStrategy {
  BreadthFirst,        ///< neighbours in lexicographic node order (default)
  DepthFirst,          ///< lexicographic order, depth first
  ReverseBreadthFirst, ///< neighbours in reverse lexicographic order
  RandomBreadthFirst,  ///< neighbours shuffled by a seeded generator
};

struct TreeOptions
{
  TreeStrategy strategy = TreeStrategy::BreadthFirst;
  std::uint64_t seed = 0;
};

struct Generator
{
  int index = 1;       ///< the i of e_i
  int edge = 0;        ///< arrangement edge id of the once-traced edge
  int orientation = 1; ///< +1 when the positive direction is arrangement a -> b
  PolyLoop loop;       ///< tree path, edge, tree path back
  /// Marked once-traced segment: middle third of the edge, positive direction.
  Point marked_start;
  Point marked_end;
  Point midpoint;
  /// Squared distance from the midpoint to the rest of the arrangement, capped
  /// at (edge length / 6)^2 so the clearance ball stays inside the marked segment.
  Rational clearance2;
  /// Double radius with clearance * clearance < clearance2 (exact comparison).
  double clearance = 0.0;
};

struct Decomposition
{
  Point basepoint;
  Arrangement arrangement;
  std::vector<bool> tree_edge;  ///< per arrangement edge
  std::vector<int> parent_edge; ///< per node, -1 for the root / unreached nodes
  std::vector<Generator> generators;
  words::Word word;
};

Decomposition decompose(const PolyLoop& loop, const TreeOptions& options = {});

/// Word of a loop that lies on the decomposition's arrangement (reduced).
words::Word transcribe(const Decomposition& dec, const PolyLoop& loop);

/// Loop obtained by composing generator loops as the word prescribes.
PolyLoop evaluate_word(const Decomposition& dec, const words::Word& word);

/// Reduced edge chain of a loop over an arrangement.
std::vector<SignedEdge> reduced_edge_sequence(const Arrangement& arr, const PolyLoop& loop);

/// Every generator traces its marked segment exactly once (the rest of the
/// generator meets it at most in its endpoints), and marked segments are
/// pairwise disjoint.  Exact.
bool is_independent(const Decomposition& dec);

/// Exact check of the clearance certificates: each clearance ball around a
/// marked midpoint meets the arrangement only inside that generator's edge.
bool verify_clearance(const Decomposition& dec);

/// Equality in the group of loops: a b^-1 reduces to the empty word over the
/// joint arrangement.  Throws InputError on basepoint mismatch.
bool loop_equal(const PolyLoop& a, const PolyLoop& b);

} // namespace hoops::geom
