#include "hoops/decompose.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

namespace hoops::geom {

namespace {

void build_tree(Decomposition& dec, int root, const TreeOptions& options)
{
  const Arrangement& arr = dec.arrangement;
  const std::size_t n = arr.nodes().size();
  dec.parent_edge.assign(n, -1);
  dec.tree_edge.assign(arr.edges().size(), false);
  std::vector<char> seen(n, 0);
  std::mt19937_64 rng(options.seed);

  auto neighbours = [&](int u) {
    std::vector<std::pair<int, int>> nb; // (node, edge)
    for (int e : arr.incident(u))
      nb.emplace_back(arr.other_end(e, u), e);
    std::sort(nb.begin(), nb.end());
    switch (options.strategy) {
      case TreeStrategy::ReverseBreadthFirst: std::reverse(nb.begin(), nb.end()); break;
      case TreeStrategy::RandomBreadthFirst: std::shuffle(nb.begin(), nb.end(), rng); break;
      default: break;
    }
    return nb;
  };

  auto attach = [&](int v, int e) {
    seen[v] = 1;
    dec.parent_edge[v] = e;
    dec.tree_edge[e] = true;
  };

  seen[root] = 1;
  if (options.strategy == TreeStrategy::DepthFirst) {
    // Explicit stack of (node, remaining neighbours) to keep true DFS order.
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> stack;
    stack.emplace_back(root, neighbours(root));
    std::vector<std::size_t> cursor{0};
    while (!stack.empty()) {
      auto& nb = stack.back().second;
      std::size_t& c = cursor.back();
      if (c == nb.size()) {
        stack.pop_back();
        cursor.pop_back();
        continue;
      }
      const auto [v, e] = nb[c++];
      if (seen[v])
        continue;
      attach(v, e);
      stack.emplace_back(v, neighbours(v));
      cursor.push_back(0);
    }
  } else {
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [v, e] : neighbours(u))
        if (!seen[v]) {
          attach(v, e);
          queue.push_back(v);
        }
    }
  }
}

// Nodes on the tree path root -> u.
std::vector<int> tree_path(const Decomposition& dec, int u)
{
  std::vector<int> path{u};
  while (dec.parent_edge[path.back()] >= 0)
    path.push_back(dec.arrangement.other_end(dec.parent_edge[path.back()], path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

void certify_clearance(const Arrangement& arr, Generator& g)
{
  const auto& edge = arr.edges()[g.edge];
  const Point& a = arr.nodes()[edge.a];
  const Point& b = arr.nodes()[edge.b];
  Rational best = (b - a).norm2() / 36; // (length / 6)^2
  for (std::size_t e = 0; e < arr.edges().size(); ++e) {
    if (static_cast<int>(e) == g.edge)
      continue;
    const Rational d2 =
      distance2_point_segment(g.midpoint, arr.nodes()[arr.edges()[e].a], arr.nodes()[arr.edges()[e].b]);
    if (d2 < best)
      best = d2;
  }
  g.clearance2 = best;
  double r = sqrt_lower(best);
  while (r > 0 && Rational(r) * Rational(r) >= best)
    r = std::nextafter(r, 0.0);
  g.clearance = r;
}

} // namespace

Decomposition decompose(const PolyLoop& loop, const TreeOptions& options)
{
  Decomposition dec;
  dec.basepoint = loop.basepoint();
  if (loop.is_constant())
    return dec;

  dec.arrangement = build_arrangement({loop.path()});
  const Arrangement& arr = dec.arrangement;
  const int root = arr.node_id(loop.basepoint());
  build_tree(dec, root, options);

  // Generators in order of first traversal; positive direction = first traversal.
  std::vector<int> gen_of_edge(arr.edges().size(), -1);
  std::vector<words::GenSymbol> symbols;
  for (const SignedEdge& se : arr.path_edges(0)) {
    if (dec.tree_edge[se.edge])
      continue;
    if (gen_of_edge[se.edge] < 0) {
      Generator g;
      g.index = static_cast<int>(dec.generators.size()) + 1;
      g.edge = se.edge;
      g.orientation = se.dir;
      gen_of_edge[se.edge] = static_cast<int>(dec.generators.size());
      dec.generators.push_back(std::move(g));
    }
    const Generator& g = dec.generators[gen_of_edge[se.edge]];
    symbols.push_back({g.index, se.dir * g.orientation});
  }
  dec.word = words::reduce(words::Word(std::move(symbols)));

  for (Generator& g : dec.generators) {
    const SignedEdge pos{g.edge, g.orientation};
    const Point& s = arr.start(pos);
    const Point& t = arr.end(pos);
    const int u = arr.node_id(s), v = arr.node_id(t);

    std::vector<Point> vertices;
    for (int n : tree_path(dec, u))
      vertices.push_back(arr.nodes()[n]);
    const auto back = tree_path(dec, v);
    for (auto it = back.rbegin(); it != back.rend(); ++it)
      vertices.push_back(arr.nodes()[*it]);
    g.loop = PolyLoop(dec.basepoint, std::move(vertices));

    const Point d = t - s;
    g.marked_start = s + d * Rational(1, 3);
    g.marked_end = s + d * Rational(2, 3);
    g.midpoint = s + d * Rational(1, 2);
    certify_clearance(arr, g);
  }
  return dec;
}

words::Word transcribe(const Decomposition& dec, const PolyLoop& loop)
{
  if (loop.basepoint() != dec.basepoint)
    throw InputError("loop basepoint differs from the decomposition basepoint");
  if (loop.is_constant())
    return {};
  std::vector<int> gen_of_edge(dec.arrangement.edges().size(), -1);
  for (std::size_t i = 0; i < dec.generators.size(); ++i)
    gen_of_edge[dec.generators[i].edge] = static_cast<int>(i);
  std::vector<words::GenSymbol> symbols;
  for (const SignedEdge& se : dec.arrangement.transcribe(loop.vertices())) {
    if (dec.tree_edge[se.edge])
      continue;
    const Generator& g = dec.generators.at(gen_of_edge[se.edge]);
    symbols.push_back({g.index, se.dir * g.orientation});
  }
  return words::reduce(words::Word(std::move(symbols)));
}

PolyLoop evaluate_word(const Decomposition& dec, const words::Word& word)
{
  PolyLoop out = PolyLoop::constant(dec.basepoint);
  for (const auto& s : word.symbols()) {
    if (s.index > static_cast<int>(dec.generators.size()))
      throw PreconditionError("word uses e" + std::to_string(s.index) + " but the decomposition has only " +
                              std::to_string(dec.generators.size()) + " generators");
    const PolyLoop& g = dec.generators[s.index - 1].loop;
    out = compose(out, s.sign > 0 ? g : invert_loop(g));
  }
  return out;
}

std::vector<SignedEdge> reduced_edge_sequence(const Arrangement& arr, const PolyLoop& loop)
{
  if (loop.is_constant())
    return {};
  return reduce_edges(arr.transcribe(loop.vertices()));
}

bool is_independent(const Decomposition& dec)
{
  using Kind = SegmentIntersection::Kind;
  const auto& gens = dec.generators;
  for (const Generator& g : gens) {
    if (g.marked_start == g.marked_end)
      return false;
    int covering = 0;
    const auto& v = g.loop.vertices();
    for (std::size_t i = 1; i < v.size(); ++i) {
      const auto x = intersect(v[i - 1], v[i], g.marked_start, g.marked_end);
      if (x.kind == Kind::None)
        continue;
      if (x.kind == Kind::Point) {
        if (x.points[0] != g.marked_start && x.points[0] != g.marked_end)
          return false;
        continue;
      }
      // Overlap: allowed once, and only as a full traversal of the marked segment.
      const bool full = (x.points[0] == g.marked_start && x.points[1] == g.marked_end) ||
                        (x.points[0] == g.marked_end && x.points[1] == g.marked_start);
      if (!full || ++covering > 1)
        return false;
    }
    if (covering != 1)
      return false;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (intersect(gens[i].marked_start, gens[i].marked_end, gens[j].marked_start, gens[j].marked_end).kind !=
          Kind::None)
        return false;
  return true;
}

bool verify_clearance(const Decomposition& dec)
{
  const Arrangement& arr = dec.arrangement;
  for (const Generator& g : dec.generators) {
    if (!(g.clearance > 0))
      return false;
    const Rational r2 = Rational(g.clearance) * Rational(g.clearance);
    // The ball must stay within the marked segment along the edge...
    if (!(r2 < (g.midpoint - g.marked_start).norm2()))
      return false;
    // ...and away from every other edge.
    for (std::size_t e = 0; e < arr.edges().size(); ++e) {
      if (static_cast<int>(e) == g.edge)
        continue;
      if (!(r2 < distance2_point_segment(g.midpoint, arr.nodes()[arr.edges()[e].a], arr.nodes()[arr.edges()[e].b])))
        return false;
    }
  }
  return true;
}

bool loop_equal(const PolyLoop& a, const PolyLoop& b)
{
  if (a.basepoint() != b.basepoint())
    throw InputError("loop_equal needs a common basepoint");
  return decompose(compose(a, invert_loop(b))).word.empty();
}

} // namespace hoops::geom
