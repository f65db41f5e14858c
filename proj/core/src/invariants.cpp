#include "comax/invariants.hpp"

#include "comax/sl2.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <deque>
#include <numeric>

namespace comax {

namespace {

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).indices();
  return adj;
}

class CliqueSearch {
public:
  CliqueSearch(const Graph& g, SolverBudget budget) : budget_(budget) {
    const int n = g.order();
    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), 0);
    std::stable_sort(perm_.begin(), perm_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm_[i]] = i;
    adj_.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i)
      for (int u : g.neighbors(perm_[i]).indices()) adj_[i].set(pos[u]);
  }

  CliqueResult run() {
    const auto n = adj_.size();
    CliqueResult result;
    if (n > 0) {
      Bitset all(n);
      all.set_all();
      expand(all);
    }
    result.decided = !aborted_;
    result.size = static_cast<int>(best_.size());
    for (int v : best_) result.witness.push_back(perm_[v]);
    std::sort(result.witness.begin(), result.witness.end());
    result.nodes = nodes_;
    return result;
  }

private:
  void expand(Bitset p) {
    if (++nodes_ > budget_.node_limit) {
      aborted_ = true;
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    Bitset uncolored = p;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      while (q.any()) {
        const auto v = q.find_first();
        q.reset(v);
        q.subtract(adj_[v]);
        uncolored.reset(v);
        order.push_back(static_cast<int>(v));
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const int v = order[i];
      current_.push_back(v);
      Bitset next = p & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
      if (aborted_) return;
    }
  }

  SolverBudget budget_;
  std::vector<int> perm_;
  std::vector<Bitset> adj_;
  std::vector<int> current_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

class DsaturSearch {
public:
  DsaturSearch(const Graph& g, SolverBudget budget) : budget_(budget), adj_(adjacency_lists(g)) {
    n_ = g.order();
    degree_.resize(n_);
    for (int v = 0; v < n_; ++v) degree_[v] = static_cast<int>(adj_[v].size());
  }

  std::vector<int> greedy() {
    reset(n_ + 1);
    for (int step = 0; step < n_; ++step) {
      const int v = select();
      int c = 0;
      while (count_[v][c] > 0) ++c;
      assign(v, c);
    }
    return color_;
  }

  // Exact search below `upper` colors, with `clique` pre-colored.
  void search(const std::vector<int>& clique, std::vector<int> upper_coloring) {
    best_coloring_ = std::move(upper_coloring);
    best_ = count_colors(best_coloring_);
    lower_ = static_cast<int>(clique.size());
    reset(best_);
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i));
    recurse(static_cast<int>(clique.size()), static_cast<int>(clique.size()));
  }

  bool aborted() const { return aborted_; }
  int best() const { return best_; }
  const std::vector<int>& best_coloring() const { return best_coloring_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  void reset(int width) {
    color_.assign(n_, -1);
    sat_.assign(n_, 0);
    count_.assign(n_, std::vector<int>(std::max(width, 1), 0));
  }

  void assign(int v, int c) {
    color_[v] = c;
    for (int u : adj_[v])
      if (count_[u][c]++ == 0) ++sat_[u];
  }

  void unassign(int v) {
    const int c = color_[v];
    color_[v] = -1;
    for (int u : adj_[v])
      if (--count_[u][c] == 0) --sat_[u];
  }

  int select() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && degree_[v] > degree_[best])) best = v;
    }
    return best;
  }

  void recurse(int colored, int used) {
    if (aborted_) return;
    if (++nodes_ > budget_.node_limit) {
      aborted_ = true;
      return;
    }
    if (used >= best_) return;
    if (colored == n_) {
      best_ = used;
      best_coloring_ = color_;
      return;
    }
    const int v = select();
    if (sat_[v] >= best_) return; // would need a color >= best
    for (int c = 0; c < used; ++c) {
      if (count_[v][c] > 0) continue;
      assign(v, c);
      recurse(colored + 1, used);
      unassign(v);
      if (aborted_ || best_ == lower_) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      recurse(colored + 1, used + 1);
      unassign(v);
    }
  }

  SolverBudget budget_;
  std::vector<std::vector<int>> adj_;
  int n_ = 0;
  std::vector<int> degree_;
  std::vector<int> color_;
  std::vector<int> sat_;
  std::vector<std::vector<int>> count_;
  std::vector<int> best_coloring_;
  int best_ = 0;
  int lower_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

class DominationSearch {
public:
  DominationSearch(const Graph& g, SolverBudget budget) : budget_(budget), n_(g.order()) {
    closed_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
      Bitset b = g.neighbors(v);
      b.set(v);
      closed_.push_back(std::move(b));
    }
  }

  std::vector<int> greedy() const {
    Bitset undominated(n_);
    undominated.set_all();
    std::vector<int> chosen;
    while (undominated.any()) {
      int best = -1;
      std::size_t gain = 0;
      for (int v = 0; v < n_; ++v) {
        const auto c = (closed_[v] & undominated).count();
        if (c > gain) {
          gain = c;
          best = v;
        }
      }
      chosen.push_back(best);
      undominated.subtract(closed_[best]);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  // True if a dominating set of size <= k exists; fills `found`.
  bool search(int k, std::vector<int>& found) {
    Bitset undominated(n_);
    undominated.set_all();
    chosen_.clear();
    if (recurse(k, undominated)) {
      found = chosen_;
      std::sort(found.begin(), found.end());
      return true;
    }
    return false;
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  bool recurse(int k, const Bitset& undominated) {
    if (undominated.none()) return true;
    if (k == 0 || aborted_) return false;
    if (++nodes_ > budget_.node_limit) {
      aborted_ = true;
      return false;
    }
    std::size_t max_cover = 0;
    for (int v = 0; v < n_; ++v) max_cover = std::max(max_cover, (closed_[v] & undominated).count());
    const auto remaining = undominated.count();
    if (remaining > max_cover * static_cast<std::size_t>(k)) return false;

    // Branch on the undominated vertex with the fewest possible dominators.
    int pick = -1;
    std::size_t fewest = 0;
    for (int u : undominated.indices()) {
      const auto c = closed_[u].count();
      if (pick < 0 || c < fewest) {
        pick = u;
        fewest = c;
      }
    }
    for (int w : closed_[pick].indices()) {
      chosen_.push_back(w);
      Bitset next = undominated;
      next.subtract(closed_[w]);
      if (recurse(k - 1, next)) return true;
      chosen_.pop_back();
      if (aborted_) return false;
    }
    return false;
  }

  SolverBudget budget_;
  int n_;
  std::vector<Bitset> closed_;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

} // namespace

CliqueResult max_clique(const Graph& g, SolverBudget budget) { return CliqueSearch(g, budget).run(); }

std::optional<std::pair<int, int>> coloring_conflict(const Graph& g, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != g.order()) throw Error("coloring has the wrong number of vertices");
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u).indices())
      if (u < v && coloring[u] == coloring[v]) return std::make_pair(u, v);
  return std::nullopt;
}

int count_colors(const std::vector<int>& coloring) {
  std::vector<int> c = coloring;
  std::sort(c.begin(), c.end());
  return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

ColoringResult chromatic_number(const Graph& g, SolverBudget budget, const std::vector<int>* hint) {
  ColoringResult result;
  if (g.order() == 0) return result;
  const CliqueResult clique = max_clique(g, budget);
  result.lower_bound = clique.size;
  result.nodes = clique.nodes;

  if (hint) {
    if (const auto bad = coloring_conflict(g, *hint)) throw ImproperColoringError(bad->first, bad->second);
    if (count_colors(*hint) == clique.size) {
      result.colors = clique.size;
      result.coloring = *hint;
      result.certified_by_hint = true;
      return result;
    }
  }

  DsaturSearch dsatur(g, budget);
  std::vector<int> upper = dsatur.greedy();
  if (hint && count_colors(*hint) < count_colors(upper)) upper = *hint;
  if (count_colors(upper) == clique.size) {
    result.colors = clique.size;
    result.coloring = std::move(upper);
    return result;
  }
  dsatur.search(clique.witness, std::move(upper));
  result.colors = dsatur.best();
  result.coloring = dsatur.best_coloring();
  result.nodes += dsatur.nodes();
  result.decided = !dsatur.aborted(); // a finished search rules out fewer colors
  return result;
}

bool is_dominating(const Graph& g, const std::vector<int>& set) {
  Bitset covered(g.order());
  for (int v : set) {
    covered.set(v);
    covered |= g.neighbors(v);
  }
  return static_cast<int>(covered.count()) == g.order();
}

DominationResult domination_number(const Graph& g, SolverBudget budget) {
  DominationResult result;
  if (g.order() == 0) return result;
  DominationSearch search(g, budget);
  std::vector<int> best = search.greedy();
  for (int k = 1; k < static_cast<int>(best.size()); ++k) {
    std::vector<int> found;
    if (search.search(k, found)) {
      best = std::move(found);
      break;
    }
    if (search.aborted()) break;
  }
  result.decided = !search.aborted();
  result.size = static_cast<int>(best.size());
  result.witness = std::move(best);
  result.nodes = search.nodes();
  return result;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_lists(g);
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto& d = dist[s];
    std::deque<int> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_lists(g);
  std::optional<int> best;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] + 1 >= *best) break;
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

Metrics metric_invariants(const Graph& g) {
  Metrics m;
  const int n = g.order();
  m.girth = girth(g);
  if (n == 0) return m;
  const auto dist = all_pairs_distances(g);
  m.eccentricity.resize(n);
  m.connected = true;
  for (int v = 0; v < n; ++v) {
    int ecc = 0;
    bool finite = true;
    for (int u = 0; u < n; ++u) {
      if (dist[v][u] < 0) finite = false;
      else ecc = std::max(ecc, dist[v][u]);
    }
    if (finite) m.eccentricity[v] = ecc;
    else m.connected = false;
  }
  if (m.connected) {
    int diam = 0, rad = n;
    for (const auto& e : m.eccentricity) {
      diam = std::max(diam, *e);
      rad = std::min(rad, *e);
    }
    m.diameter = diam;
    m.radius = rad;
    for (int v = 0; v < n; ++v)
      if (*m.eccentricity[v] == rad) m.center.push_back(v);
  }
  // Disconnected: every eccentricity is infinite, so diameter and radius are
  // infinite and every vertex is central.
  if (!m.connected) {
    m.center.resize(n);
    std::iota(m.center.begin(), m.center.end(), 0);
  }
  return m;
}

bool every_vertex_on_triangle(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    bool found = false;
    for (int u : g.neighbors(v).indices()) {
      if ((g.neighbors(v) & g.neighbors(u)).any()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

PlanarityResult is_planar(const Graph& g, int clique_lower_bound) {
  if (clique_lower_bound >= 5) return {false, "k5-clique"};
  const long long n = g.order();
  if (n >= 3 && g.size() > 3 * n - 6) return {false, "edge-bound"};
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u).indices())
      if (u < v) boost::add_edge(u, v, bg);
  return {boost::boyer_myrvold_planarity_test(bg), "boyer-myrvold"};
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> seq(g.order());
  for (int v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

InvariantBundle compute_invariants(const Graph& g, const BundleOptions& options) {
  InvariantBundle b;
  b.order = g.order();
  b.size = g.size();
  b.degree_sequence = degree_sequence(g);
  b.metrics = metric_invariants(g);
  b.clique = max_clique(g, options.budget);
  b.coloring = chromatic_number(g, options.budget, options.coloring_hint);
  b.independence = max_clique(g.complement(), options.budget);
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) b.isolated.push_back(v);

  if (b.isolated.empty()) {
    b.domination = domination_number(g, options.budget);
  } else {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) > 0) keep.push_back(v);
    b.domination = domination_number(g.induced(keep), options.budget);
    for (int& v : b.domination.witness) v = keep[v];
    b.domination_on_star = true;
  }
  b.planarity = is_planar(g, b.clique.size);
  b.is_regular = std::adjacent_find(b.degree_sequence.begin(), b.degree_sequence.end(), std::not_equal_to<>()) ==
                 b.degree_sequence.end();
  const long long n = g.order();
  b.is_complete = b.size == n * (n - 1) / 2;
  return b;
}

DegreeProfile degree_profile(const ComaximalGraph& g) {
  DegreeProfile p;
  p.sequence = degree_sequence(g.graph);
  for (int v = 0; v < g.order(); ++v) p.by_kind[to_string(g.kinds[v])].push_back(g.graph.degree(v));
  for (auto& [kind, degrees] : p.by_kind) {
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  }
  return p;
}

std::vector<int> borel_coloring_sl2(const ComaximalGraph& g) {
  if (!g.algebra->field().is_odd() || !is_standard_sl2(*g.algebra)) {
    throw Error("Borel coloring applies only to Gamma(sl2(F_q)) with q odd");
  }
  std::vector<int> borels;
  for (int v = 0; v < g.order(); ++v)
    if (g.kinds[v] == VertexKind::borel) borels.push_back(v);
  std::vector<int> color(g.order(), -1);
  for (std::size_t i = 0; i < borels.size(); ++i) color[borels[i]] = static_cast<int>(i);
  int next = static_cast<int>(borels.size());
  for (int v = 0; v < g.order(); ++v)
    if (g.kinds[v] == VertexKind::nonsplit_line) color[v] = next++;
  for (int v = 0; v < g.order(); ++v) {
    if (color[v] >= 0) continue;
    for (int b : borels) {
      if (contains(g.vertices[b], g.vertices[v])) {
        color[v] = color[b];
        break;
      }
    }
    if (color[v] < 0) throw Error("line " + g.vertices[v].to_string() + " lies in no Borel");
  }
  return color;
}

} // namespace comax
