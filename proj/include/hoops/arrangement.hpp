#pragma once

#include "hoops/poly_loop.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hoops::geom {

/// Traversal of an arrangement edge: dir = +1 runs from node a to node b.
struct SignedEdge
{
  int edge = 0;
  int dir = 1;

  SignedEdge inverse() const { return {edge, -dir}; }
  friend bool operator==(SignedEdge, SignedEdge) = default;
};

/// Straight edge between two arrangement nodes, a < b.
struct ArrangementEdge
{
  int a = 0;
  int b = 0;
};

/// Planar-graph-like subdivision of a set of PL paths: nodes are all segment
/// endpoints, all crossing points, and the ends of every shared sub-segment;
/// edges are the pieces between consecutive nodes.  Edge interiors are
/// pairwise disjoint and every input path is a chain of whole edges.
class Arrangement
{
public:
  const std::vector<Point>& nodes() const { return nodes_; }
  const std::vector<ArrangementEdge>& edges() const { return edges_; }
  /// Edge ids incident to a node.
  const std::vector<int>& incident(int node) const { return incidence_[node]; }
  /// Edge chain of the i-th input path.
  const std::vector<SignedEdge>& path_edges(std::size_t i) const { return path_edges_[i]; }
  std::size_t num_paths() const { return path_edges_.size(); }
  int dim() const { return dim_; }

  /// -1 when p is not a node.
  int node_id(const Point& p) const;
  /// -1 when the two nodes are not joined by an edge.
  int edge_between(int u, int v) const;
  int other_end(int edge, int node) const;
  const Point& start(SignedEdge e) const { return nodes_[e.dir > 0 ? edges_[e.edge].a : edges_[e.edge].b]; }
  const Point& end(SignedEdge e) const { return nodes_[e.dir > 0 ? edges_[e.edge].b : edges_[e.edge].a]; }

  /// Edge chain of a path whose segments lie on the arrangement and whose
  /// vertices are nodes.  Throws InputError otherwise.
  std::vector<SignedEdge> transcribe(const std::vector<Point>& vertices) const;

  friend Arrangement build_arrangement(const std::vector<PolyPath>& paths);

private:
  int dim_ = 2;
  std::vector<Point> nodes_;
  std::map<Point, int> node_index_;
  std::vector<ArrangementEdge> edges_;
  std::map<std::pair<int, int>, int> edge_index_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::vector<SignedEdge>> path_edges_;
};

Arrangement build_arrangement(const std::vector<PolyPath>& paths);

/// Cancels adjacent e e^-1 pairs in an edge chain.
std::vector<SignedEdge> reduce_edges(const std::vector<SignedEdge>& chain);

} // namespace hoops::geom
