#include "hoops/arrangement.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <set>

namespace hoops::geom {

namespace {

struct Segment
{
  const Point* a;
  const Point* b;
};

// Sorted node ids along a segment, by parameter from its start.
std::vector<int> order_along(const Point& a, const Point& b, const std::set<Point>& on_segment,
                             const std::map<Point, int>& index)
{
  const Point d = b - a;
  std::vector<std::pair<Rational, int>> keyed;
  keyed.reserve(on_segment.size());
  for (const auto& p : on_segment)
    keyed.emplace_back((p - a).dot(d), index.at(p));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<int> ids;
  ids.reserve(keyed.size());
  for (const auto& k : keyed)
    ids.push_back(k.second);
  return ids;
}

} // namespace

int Arrangement::node_id(const Point& p) const
{
  auto it = node_index_.find(p);
  return it == node_index_.end() ? -1 : it->second;
}

int Arrangement::edge_between(int u, int v) const
{
  auto it = edge_index_.find({std::min(u, v), std::max(u, v)});
  return it == edge_index_.end() ? -1 : it->second;
}

int Arrangement::other_end(int edge, int node) const
{
  return edges_[edge].a == node ? edges_[edge].b : edges_[edge].a;
}

std::vector<SignedEdge> Arrangement::transcribe(const std::vector<Point>& vertices) const
{
  std::vector<SignedEdge> chain;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const Point& p = vertices[i - 1];
    const Point& q = vertices[i];
    const int u = node_id(p), v = node_id(q);
    if (u < 0 || v < 0)
      throw InputError("path vertex is not an arrangement node: " + (u < 0 ? p : q).to_string());
    if (u == v)
      continue;
    if (int e = edge_between(u, v); e >= 0) {
      chain.push_back({e, edges_[e].a == u ? 1 : -1});
      continue;
    }
    // Segment spans several edges: walk the nodes on it in order.
    const Point d = q - p;
    const Rational len2 = d.norm2();
    std::vector<std::pair<Rational, int>> on;
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
      const Point r = nodes_[n] - p;
      if (!parallel(d, r))
        continue;
      const Rational t = r.dot(d);
      if (t >= 0 && t <= len2)
        on.emplace_back(t, static_cast<int>(n));
    }
    std::sort(on.begin(), on.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t k = 1; k < on.size(); ++k) {
      const int a = on[k - 1].second, b = on[k].second;
      const int e = edge_between(a, b);
      if (e < 0)
        throw InputError("segment " + p.to_string() + " -> " + q.to_string() + " leaves the arrangement");
      chain.push_back({e, edges_[e].a == a ? 1 : -1});
    }
  }
  return chain;
}

Arrangement build_arrangement(const std::vector<PolyPath>& paths)
{
  Arrangement arr;
  if (paths.empty())
    return arr;
  arr.dim_ = paths.front().dim();
  std::vector<Segment> segs;
  for (const auto& path : paths) {
    if (path.dim() != arr.dim_)
      throw InputError("arrangement inputs must share one dimension");
    for (std::size_t i = 1; i < path.vertices().size(); ++i)
      segs.push_back({&path.vertices()[i - 1], &path.vertices()[i]});
  }

  // Points lying on each segment: own endpoints plus every intersection.
  std::vector<std::set<Point>> on(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    on[i].insert(*segs[i].a);
    on[i].insert(*segs[i].b);
  }
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto x = intersect(*segs[i].a, *segs[i].b, *segs[j].a, *segs[j].b);
      for (const auto& p : x.points) {
        on[i].insert(p);
        on[j].insert(p);
      }
    }

  std::set<Point> all;
  for (const auto& s : on)
    all.insert(s.begin(), s.end());
  arr.nodes_.assign(all.begin(), all.end()); // lexicographic order
  for (std::size_t n = 0; n < arr.nodes_.size(); ++n)
    arr.node_index_.emplace(arr.nodes_[n], static_cast<int>(n));
  arr.incidence_.resize(arr.nodes_.size());

  std::vector<std::vector<int>> seg_nodes(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    seg_nodes[i] = order_along(*segs[i].a, *segs[i].b, on[i], arr.node_index_);
    for (std::size_t k = 1; k < seg_nodes[i].size(); ++k) {
      const int u = std::min(seg_nodes[i][k - 1], seg_nodes[i][k]);
      const int v = std::max(seg_nodes[i][k - 1], seg_nodes[i][k]);
      if (arr.edge_index_.emplace(std::make_pair(u, v), static_cast<int>(arr.edges_.size())).second) {
        arr.incidence_[u].push_back(static_cast<int>(arr.edges_.size()));
        arr.incidence_[v].push_back(static_cast<int>(arr.edges_.size()));
        arr.edges_.push_back({u, v});
      }
    }
  }

  std::size_t seg = 0;
  for (const auto& path : paths) {
    std::vector<SignedEdge> chain;
    for (std::size_t i = 1; i < path.vertices().size(); ++i, ++seg) {
      const auto& ids = seg_nodes[seg];
      for (std::size_t k = 1; k < ids.size(); ++k) {
        const int e = arr.edge_between(ids[k - 1], ids[k]);
        chain.push_back({e, arr.edges_[e].a == ids[k - 1] ? 1 : -1});
      }
    }
    arr.path_edges_.push_back(std::move(chain));
  }
  return arr;
}

std::vector<SignedEdge> reduce_edges(const std::vector<SignedEdge>& chain)
{
  std::vector<SignedEdge> out;
  out.reserve(chain.size());
  for (const auto& e : chain) {
    if (!out.empty() && out.back() == e.inverse())
      out.pop_back();
    else
      out.push_back(e);
  }
  return out;
}

} // namespace hoops::geom
