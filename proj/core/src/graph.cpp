#include "comax/graph.hpp"

#include "comax/sl2.hpp"
#include "parallel.hpp"

#include <algorithm>

namespace comax {

Graph::Graph(int order) : rows_(static_cast<std::size_t>(order), Bitset(static_cast<std::size_t>(order))) {}

Graph Graph::complete(int order) {
  Graph g(order);
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b) g.add_edge(a, b);
  return g;
}

void Graph::add_edge(int a, int b) {
  if (a == b) throw Error("self-loops are not allowed");
  rows_[a].set(b);
  rows_[b].set(a);
}

long long Graph::size() const {
  long long twice = 0;
  for (const auto& r : rows_) twice += static_cast<long long>(r.count());
  return twice / 2;
}

Graph Graph::complement() const {
  Graph g(order());
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (!adjacent(a, b)) g.add_edge(a, b);
  return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::line: return "line";
    case VertexKind::nilpotent_line: return "line-nilpotent";
    case VertexKind::split_line: return "line-split";
    case VertexKind::nonsplit_line: return "line-nonsplit";
    case VertexKind::plane: return "plane";
    case VertexKind::borel: return "borel";
    case VertexKind::other: return "other-dim";
  }
  return "unknown";
}

int ComaximalGraph::index_of(const Subspace& s) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
  if (it == vertices.end() || !(*it == s)) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::vector<int> ComaximalGraph::isolated() const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v)
    if (graph.degree(v) == 0) out.push_back(v);
  return out;
}

std::vector<int> ComaximalGraph::non_isolated() const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v)
    if (graph.degree(v) > 0) out.push_back(v);
  return out;
}

ComaximalGraph build_graph(const SubalgebraInventory& inventory) {
  ComaximalGraph g;
  g.algebra = inventory.algebra;
  g.vertices = inventory.all();
  const int n = g.algebra->dim();
  const int order = static_cast<int>(g.vertices.size());

  const bool sl2 = g.algebra->field().is_odd() && is_standard_sl2(*g.algebra);
  g.kinds.reserve(order);
  for (const auto& v : g.vertices) {
    if (v.dim() == 1) {
      if (!sl2) {
        g.kinds.push_back(VertexKind::line);
      } else {
        switch (classify_line_sl2(v)) {
          case LineKind::nilpotent: g.kinds.push_back(VertexKind::nilpotent_line); break;
          case LineKind::split: g.kinds.push_back(VertexKind::split_line); break;
          default: g.kinds.push_back(VertexKind::nonsplit_line); break;
        }
      }
    } else if (v.dim() == 2) {
      g.kinds.push_back(sl2 ? VertexKind::borel : VertexKind::plane);
    } else {
      g.kinds.push_back(VertexKind::other);
    }
  }

  std::vector<std::vector<int>> partners(order);
  detail::parallel_for(static_cast<std::size_t>(order), worker_threads(), [&](std::size_t i) {
    for (int j = static_cast<int>(i) + 1; j < order; ++j) {
      const Subspace& a = g.vertices[i];
      const Subspace& b = g.vertices[j];
      if (contains(b, a)) continue; // <A,B> = B is proper
      if (generated_by(a, b).dim() == n) partners[i].push_back(j);
    }
  });
  g.graph = Graph(order);
  for (int i = 0; i < order; ++i)
    for (int j : partners[i]) g.graph.add_edge(i, j);
  return g;
}

} // namespace comax
