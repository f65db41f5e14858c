#include "comax/verify.hpp"

#include "comax/algebra_io.hpp"
#include "comax/sl2.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace comax {

std::string to_string(Status status) {
  switch (status) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::unpredicted: return "unpredicted";
    case Status::undecided: return "undecided";
    case Status::conflict: return "conflict";
  }
  return "unknown";
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

// Citation strings name the result a prediction encodes.
namespace cite {
const char* dim1 = "dim 1: Gamma is the empty graph";
const char* dim2 = "dim 2: Gamma is the complete graph K_{q+1}";
const char* abelian = "abelian dim 3: planes, lines and their degrees";
const char* heis = "Heisenberg: planes through the center, degrees, multipartite lines";
const char* heis_reg = "Heisenberg: Gamma* is (q^2+q)-regular of order (q+1)^2";
const char* s2b = "solvable 2B: 2q+1 planes, X_{a,b} law, degrees";
const char* c3_planes = "derived dim 2: plane count by canonical form of ad x";
const char* c3_deg = "derived dim 2: degree corollary";
const char* isolated_none = "isolated vertices are those inside F(L); F(L) = 0 here";
const char* sl2_sub = "sl2: line kinds by discriminant, q+1 Borels";
const char* sl2_borel = "sl2: Borel parametrization B(alpha) and membership counts";
const char* sl2_lines = "sl2: each Borel has one nilpotent and q split lines";
const char* sl2_deg = "sl2: degree sequence, order (q+1)^2+1, size q(q+1)^3/2";
const char* sl2_inv = "sl2: clique, domination, diameter, radius, center, girth, planarity";
const char* sl2_chi = "sl2: chromatic number equals clique number via the Borel coloring";
const char* su2 = "su2 claim: every proper subalgebra is a line, so Gamma is complete";
const char* perfect = "perfect algebras: derived algebra is L";
const char* diam3 = "diameter-3 example: F(L) = 0 and d(Fa, B) = 3";
const char* law_simple = "Gamma is a simple undirected graph";
const char* law_witness = "solver certificates: witnesses verify against adjacency";
const char* law_frattini = "isolated vertices are exactly the subalgebras inside F(L)";
const char* law_complete = "Gamma is complete iff every proper subalgebra is a line";
const char* law_diam = "Gamma minus F(L) is connected with diameter at most 3";
const char* law_g1 = "dim 3 adjacency: distinct planes are adjacent";
const char* law_g2 = "dim 3 adjacency: line ~ plane iff the line is not in the plane";
const char* law_g3 = "dim 3 adjacency: lines non-adjacent iff their span is a subalgebra";
} // namespace cite

std::string count_key(int d) {
  if (d == 1) return "count.lines";
  if (d == 2) return "count.planes";
  return "count.dim" + std::to_string(d);
}

Json inf_or(const std::optional<int>& v) { return v ? Json(*v) : Json("inf"); }

Json degree_set(const ComaximalGraph& g, const std::function<bool(int)>& pick) {
  std::set<int> s;
  for (int v = 0; v < g.order(); ++v)
    if (pick(v)) s.insert(g.graph.degree(v));
  return Json(std::vector<int>(s.begin(), s.end()));
}

Json distinct_degrees(const Graph& g) {
  std::set<int> s;
  for (int v = 0; v < g.order(); ++v) s.insert(g.degree(v));
  return Json(std::vector<int>(s.begin(), s.end()));
}

Subspace span_of(const AlgebraPtr& L, std::initializer_list<std::vector<int>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    Vector v;
    for (int x : r) v.push_back(L->field().from_int(x));
    vs.push_back(std::move(v));
  }
  return Subspace::span(L, vs);
}

int bfs_distance(const Graph& g, int from, int to) {
  std::vector<int> d(g.order(), -1);
  d[from] = 0;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == to) return d[u];
    for (int w : g.neighbors(u).indices()) {
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return -1;
}

// Part sizes if g is complete multipartite, else nullopt.
std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
  const int n = g.order();
  std::vector<Bitset> closed_non(n, Bitset(n));
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u)
      if (u == v || !g.adjacent(u, v)) closed_non[v].set(u);
  }
  std::vector<int> sizes;
  std::vector<bool> done(n, false);
  for (int v = 0; v < n; ++v) {
    if (done[v]) continue;
    for (int u : closed_non[v].indices()) {
      if (!(closed_non[u] == closed_non[v])) return std::nullopt;
      done[u] = true;
    }
    sizes.push_back(static_cast<int>(closed_non[v].count()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct Observer {
  std::vector<Observation>& out;
  void operator()(std::string key, Json value, bool decided = true) {
    out.push_back({std::move(key), std::move(value), decided});
  }
};

void generic_observations(Analysis& a, Observer& add) {
  const auto& L = *a.algebra;
  const auto& b = a.bundle;
  add("derived_dim", L.derived_dim());
  for (int d = 1; d < L.dim(); ++d) add(count_key(d), a.inventory.count(d));
  add("count.maximals", a.inventory.maximals.size());
  add("frattini_dim", a.inventory.frattini.dim());
  add("order", b.order);
  add("size", b.size);
  add("degree_sequence", b.degree_sequence);
  add("is_connected", b.metrics.connected);
  add("diameter", b.order == 0 ? Json(nullptr) : inf_or(b.metrics.diameter));
  add("radius", b.order == 0 ? Json(nullptr) : inf_or(b.metrics.radius));
  add("girth", inf_or(b.metrics.girth));
  add("clique_number", b.clique.size, b.clique.decided);
  add("chromatic_number", b.coloring.colors, b.coloring.decided);
  add("independence_number", b.independence.size, b.independence.decided);
  add("domination_number", b.domination.size, b.domination.decided);
  add("is_planar", b.planarity.planar);
  add("isolated_count", b.isolated.size());
  add("is_regular", b.is_regular);
  add("is_complete", b.is_complete);

  const auto& s = a.star_bundle;
  add("star.order", s.order);
  add("star.size", s.size);
  add("star.is_regular", s.is_regular);
  add("star.degrees", distinct_degrees(a.graph.graph.induced(a.star_vertices)));
  add("star.diameter", s.order == 0 ? Json(nullptr) : inf_or(s.metrics.diameter));
}

bool witnesses_verify(const Analysis& a) {
  const Graph& g = a.graph.graph;
  const auto& b = a.bundle;
  const auto& cw = b.clique.witness;
  if (static_cast<int>(cw.size()) != b.clique.size) return false;
  for (std::size_t i = 0; i < cw.size(); ++i)
    for (std::size_t j = i + 1; j < cw.size(); ++j)
      if (!g.adjacent(cw[i], cw[j])) return false;
  const auto& iw = b.independence.witness;
  if (static_cast<int>(iw.size()) != b.independence.size) return false;
  for (std::size_t i = 0; i < iw.size(); ++i)
    for (std::size_t j = i + 1; j < iw.size(); ++j)
      if (g.adjacent(iw[i], iw[j])) return false;
  if (g.order() > 0) {
    if (coloring_conflict(g, b.coloring.coloring)) return false;
    if (count_colors(b.coloring.coloring) != b.coloring.colors) return false;
  }
  if (static_cast<int>(b.domination.witness.size()) != b.domination.size) return false;
  Bitset covered(g.order());
  for (int v : b.domination.witness) {
    covered.set(v);
    covered |= g.neighbors(v);
  }
  for (int v : a.star_vertices)
    if (!covered.test(v)) return false;
  if (!b.domination_on_star && static_cast<int>(covered.count()) != g.order()) return false;
  long long degree_sum = 0;
  for (int d : b.degree_sequence) degree_sum += d;
  return degree_sum == 2 * b.size && b.clique.size <= b.coloring.colors && b.domination.size <= b.order;
}

void law_observations(Analysis& a, Observer& add) {
  const auto& G = a.graph;
  const Graph& g = G.graph;
  const int n = a.algebra->dim();
  const Subspace& F = a.inventory.frattini;

  bool simple = true;
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) simple = false;
    for (int v : g.neighbors(u).indices())
      if (!g.adjacent(v, u)) simple = false;
  }
  add("law.adjacency", simple);
  add("law.witnesses", witnesses_verify(a));

  bool frattini_ok = true;
  for (int v = 0; v < G.order(); ++v)
    if ((g.degree(v) == 0) != contains(F, G.vertices[v])) frattini_ok = false;
  add("law.frattini_isolation", frattini_ok);

  bool all_lines = true;
  for (const auto& [d, list] : a.inventory.by_dim)
    if (d > 1 && !list.empty()) all_lines = false;
  add("all_proper_subalgebras_one_dim", all_lines);
  add("law.completeness", a.bundle.is_complete == all_lines);

  std::vector<int> outside;
  for (int v = 0; v < G.order(); ++v)
    if (!contains(F, G.vertices[v])) outside.push_back(v);
  const Metrics rm = metric_invariants(g.induced(outside));
  const bool diam_ok = n < 2 || outside.empty() || (rm.connected && rm.diameter && *rm.diameter <= 3);
  add("restricted.diameter", outside.empty() ? Json(nullptr) : inf_or(rm.diameter));
  add("law.diameter_bound", diam_ok);

  if (n == 3) {
    bool g1 = true, g2 = true, g3 = true;
    for (int u = 0; u < G.order(); ++u) {
      for (int v = u + 1; v < G.order(); ++v) {
        const auto& A = G.vertices[u];
        const auto& B = G.vertices[v];
        const bool adj = g.adjacent(u, v);
        if (A.dim() == 2 && B.dim() == 2 && !adj) g1 = false;
        if (A.dim() == 1 && B.dim() == 2 && adj == contains(B, A)) g2 = false;
        if (A.dim() == 1 && B.dim() == 1 && (!adj) != sum(A, B).is_subalgebra()) g3 = false;
      }
    }
    add("law.planes_pairwise_adjacent", g1);
    add("law.line_plane_adjacency", g2);
    add("law.line_line_adjacency", g3);
  }
}

void family_observations(Analysis& a, const FamilySpec& spec, Observer& add) {
  const auto& G = a.graph;
  const Graph& g = G.graph;
  const AlgebraPtr& L = a.algebra;
  const Field& f = L->field();
  auto dim_is = [&](int d) { return [&G, d](int v) { return G.vertices[v].dim() == d; }; };
  auto line_x0 = [&](int v) { return G.vertices[v].dim() == 1 && G.vertices[v].row(0)[0].code == 0; };
  auto line_x1 = [&](int v) { return G.vertices[v].dim() == 1 && G.vertices[v].row(0)[0].code != 0; };

  switch (spec.id) {
    case FamilyId::abelian: {
      if (spec.n != 3) break;
      add("degree.plane", degree_set(G, dim_is(2)));
      add("degree.line", degree_set(G, dim_is(1)));
      bool independent = true;
      for (int u = 0; u < G.order(); ++u)
        for (int v = u + 1; v < G.order(); ++v)
          if (G.vertices[u].dim() == 1 && G.vertices[v].dim() == 1 && g.adjacent(u, v)) independent = false;
      add("lines_independent", independent);
      break;
    }
    case FamilyId::heisenberg3: {
      const int z = G.index_of(span_of(L, {{0, 0, 1}}));
      add("degree.plane", degree_set(G, dim_is(2)));
      add("degree.central_line", degree_set(G, [&](int v) { return v == z; }));
      add("degree.noncentral_line", degree_set(G, [&](int v) { return v != z && G.vertices[v].dim() == 1; }));
      bool through_center = true;
      for (int v = 0; v < G.order(); ++v)
        if (G.vertices[v].dim() == 2 && !contains(G.vertices[v], G.vertices[z])) through_center = false;
      add("planes_contain_center", through_center);
      add("isolated_is_center", a.bundle.isolated == std::vector<int>{z});
      std::vector<int> noncentral;
      for (int v = 0; v < G.order(); ++v)
        if (v != z && G.vertices[v].dim() == 1) noncentral.push_back(v);
      const auto parts = multipartite_parts(g.induced(noncentral));
      add("noncentral_parts", parts ? Json(*parts) : Json("not complete multipartite"));
      break;
    }
    case FamilyId::solvable2B: {
      const int y = G.index_of(span_of(L, {{0, 1, 0}}));
      const int z = G.index_of(span_of(L, {{0, 0, 1}}));
      add("degree.plane", degree_set(G, dim_is(2)));
      add("degree.y_line", degree_set(G, [&](int v) { return v == y; }));
      add("degree.z_line", degree_set(G, [&](int v) { return v == z; }));
      add("degree.other_V_line", degree_set(G, [&](int v) { return line_x0(v) && v != y && v != z; }));
      add("degree.outside_line", degree_set(G, line_x1));
      bool law = true;
      for (int u = 0; u < G.order(); ++u) {
        if (!line_x1(u)) continue;
        for (int v = u + 1; v < G.order(); ++v) {
          if (!line_x1(v)) continue;
          const auto p = G.vertices[u].row(0);
          const auto r = G.vertices[v].row(0);
          if (g.adjacent(u, v) != (p[1] != r[1] && p[2] != r[2])) law = false;
        }
      }
      add("law.X_ab", law);
      break;
    }
    case FamilyId::case3_irreducible: {
      const int V = G.index_of(span_of(L, {{0, 1, 0}, {0, 0, 1}}));
      add("degree.V", degree_set(G, [&](int v) { return v == V; }));
      add("degree.V_line", degree_set(G, line_x0));
      add("degree.outside_line", degree_set(G, line_x1));
      break;
    }
    case FamilyId::case3_two_eigen: {
      const int e1 = G.index_of(span_of(L, {{0, 1, 0}}));
      const int e2 = G.index_of(span_of(L, {{0, 0, 1}}));
      add("degree.plane", degree_set(G, dim_is(2)));
      add("degree.eigenlines", degree_set(G, [&](int v) { return v == e1 || v == e2; }));
      add("degree.other_V_line", degree_set(G, [&](int v) { return line_x0(v) && v != e1 && v != e2; }));
      add("degree.outside_line", degree_set(G, line_x1));
      break;
    }
    case FamilyId::case3_jordan: {
      const int e = G.index_of(span_of(L, {{0, 1, 0}}));
      add("degree.eigenline", degree_set(G, [&](int v) { return v == e; }));
      add("degree.plane", degree_set(G, dim_is(2)));
      add("degree.other_line", degree_set(G, [&](int v) { return v != e && G.vertices[v].dim() == 1; }));
      add("isolated_is_eigenline", a.bundle.isolated == std::vector<int>{e});
      break;
    }
    case FamilyId::case3_scalar: {
      add("degree.plane", degree_set(G, dim_is(2)));
      add("degree.line", degree_set(G, dim_is(1)));
      break;
    }
    case FamilyId::sl2: {
      if (!f.is_odd()) break;
      const int q = f.order();
      auto of_kind = [&](VertexKind k) { return [&G, k](int v) { return G.kinds[v] == k; }; };
      auto count_kind = [&](VertexKind k) { return std::count(G.kinds.begin(), G.kinds.end(), k); };
      add("count.nilpotent", count_kind(VertexKind::nilpotent_line));
      add("count.split", count_kind(VertexKind::split_line));
      add("count.nonsplit", count_kind(VertexKind::nonsplit_line));
      add("count.borels", count_kind(VertexKind::borel));

      auto closed = borels_closed_form(L);
      std::sort(closed.begin(), closed.end());
      const auto& brute = a.inventory.by_dim.at(2);
      add("borels_closed_form_match", closed == brute);

      bool trichotomy = true;
      for (int v = 0; v < G.order(); ++v) {
        if (G.vertices[v].dim() != 1) continue;
        const LineKind kind = classify_line_sl2(G.vertices[v]);
        const int expected = kind == LineKind::nonsplit ? 0 : kind == LineKind::nilpotent ? 1 : 2;
        if (borel_membership_count(G.vertices[v]) != expected ||
            borel_membership_count_exhaustive(G.vertices[v], brute) != expected)
          trichotomy = false;
      }
      add("borel_membership_trichotomy", trichotomy);

      std::vector<int> borels, nonsplit;
      for (int v = 0; v < G.order(); ++v) {
        if (G.kinds[v] == VertexKind::borel) borels.push_back(v);
        if (G.kinds[v] == VertexKind::nonsplit_line) nonsplit.push_back(v);
      }
      bool borel_lines = true;
      for (int b : borels) {
        int nil = 0, split = 0, other = 0;
        for (int v = 0; v < G.order(); ++v) {
          if (G.vertices[v].dim() != 1 || !contains(G.vertices[b], G.vertices[v])) continue;
          if (G.kinds[v] == VertexKind::nilpotent_line) ++nil;
          else if (G.kinds[v] == VertexKind::split_line) ++split;
          else ++other;
        }
        if (nil != 1 || split != q || other != 0) borel_lines = false;
      }
      add("borel_lines", borel_lines);

      add("degree.borel", degree_set(G, of_kind(VertexKind::borel)));
      add("degree.nilpotent", degree_set(G, of_kind(VertexKind::nilpotent_line)));
      add("degree.split", degree_set(G, of_kind(VertexKind::split_line)));
      add("degree.nonsplit", degree_set(G, of_kind(VertexKind::nonsplit_line)));
      add("center_is_nonsplit", a.bundle.metrics.center == nonsplit);
      add("every_vertex_on_triangle", every_vertex_on_triangle(g));
      add("borels_induce_complete", g.induced(borels).size() == static_cast<long long>(borels.size()) *
                                                                   (static_cast<long long>(borels.size()) - 1) / 2);

      const auto coloring = borel_coloring_sl2(G);
      add("borel_coloring.colors", count_colors(coloring));
      add("borel_coloring.proper", !coloring_conflict(g, coloring).has_value());
      bool classes = true;
      for (int v = 0; v < G.order(); ++v) {
        const int c = coloring[v];
        if (c < static_cast<int>(borels.size()) && !contains(G.vertices[borels[c]], G.vertices[v])) classes = false;
      }
      add("borel_coloring.classes", classes);
      break;
    }
    case FamilyId::su2: add("claim.su2_complete", a.bundle.is_complete); break;
    case FamilyId::diam3_example: {
      const int fa = G.index_of(span_of(L, {{1, 0, 0, 0}}));
      const int bb = G.index_of(span_of(L, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
      const int d = bfs_distance(g, fa, bb);
      add("distance.Fa_B", d < 0 ? Json("inf") : Json(d));
      break;
    }
    case FamilyId::nonabelian2: break;
  }
}

std::optional<std::string> unsupported_reason(const FamilySpec& spec, const Field& field) {
  if (requires_odd_field(spec.id) && !field.is_odd()) return family_name(spec.id) + " needs odd q";
  if (spec.id == FamilyId::case3_two_eigen && !spec.mu && !default_two_eigen_mu(field))
    return "case3_two_eigen needs an eigenvalue outside {0, 1}, so q > 2";
  return std::nullopt;
}

} // namespace

void check_family_field(const FamilySpec& spec, const Field& field) {
  if (const auto reason = unsupported_reason(spec, field)) throw Error(*reason);
}

std::vector<Prediction> law_predictions(int dim) {
  std::vector<Prediction> out{
      {"law.adjacency", true, cite::law_simple},
      {"law.witnesses", true, cite::law_witness},
      {"law.frattini_isolation", true, cite::law_frattini},
      {"law.completeness", true, cite::law_complete},
      {"law.diameter_bound", true, cite::law_diam},
  };
  if (dim == 3) {
    out.push_back({"law.planes_pairwise_adjacent", true, cite::law_g1});
    out.push_back({"law.line_plane_adjacency", true, cite::law_g2});
    out.push_back({"law.line_line_adjacency", true, cite::law_g3});
  }
  return out;
}

std::vector<Prediction> predict(const FamilySpec& spec, const Field& field) {
  check_family_field(spec, field);
  const long long q = field.order();
  const int dim = spec.id == FamilyId::abelian ? spec.n : spec.id == FamilyId::nonabelian2 ? 2
                                                      : spec.id == FamilyId::diam3_example ? 4
                                                                                           : 3;
  std::vector<Prediction> out = law_predictions(dim);
  auto P = [&](std::string key, Json value, const char* citation) {
    out.push_back({std::move(key), std::move(value), citation});
  };
  auto one = [](long long v) { return Json::array({v}); };
  const long long lines3 = q * q + q + 1;
  auto dim_two = [&] {
    P("count.lines", q + 1, cite::dim2);
    P("order", q + 1, cite::dim2);
    P("size", q * (q + 1) / 2, cite::dim2);
    P("is_complete", true, cite::dim2);
    P("clique_number", q + 1, cite::dim2);
    P("chromatic_number", q + 1, cite::dim2);
    P("domination_number", 1, cite::dim2);
    P("diameter", 1, cite::dim2);
    P("is_planar", q + 1 <= 4, cite::dim2);
  };

  switch (spec.id) {
    case FamilyId::abelian:
      if (spec.n == 1) {
        P("order", 0, cite::dim1);
        P("size", 0, cite::dim1);
      } else if (spec.n == 2) {
        dim_two();
      } else if (spec.n == 3) {
        P("derived_dim", 0, cite::abelian);
        P("count.lines", lines3, cite::abelian);
        P("count.planes", lines3, cite::abelian);
        P("order", 2 * lines3, cite::abelian);
        P("isolated_count", 0, cite::isolated_none);
        P("degree.plane", one(2 * q * q + q), cite::abelian);
        P("degree.line", one(q * q), cite::abelian);
        P("lines_independent", true, cite::abelian);
      }
      break;
    case FamilyId::nonabelian2: dim_two(); break;
    case FamilyId::heisenberg3:
      P("derived_dim", 1, cite::heis);
      P("count.lines", lines3, cite::heis);
      P("count.planes", q + 1, cite::heis);
      P("degree.plane", one(q * q + q), cite::heis);
      P("degree.central_line", one(0), cite::heis);
      P("degree.noncentral_line", one(q * q + q), cite::heis);
      P("planes_contain_center", true, cite::heis);
      P("isolated_count", 1, cite::heis);
      P("isolated_is_center", true, cite::heis);
      P("noncentral_parts", Json(std::vector<long long>(static_cast<std::size_t>(q + 1), q)), cite::heis);
      P("star.order", (q + 1) * (q + 1), cite::heis_reg);
      P("star.is_regular", true, cite::heis_reg);
      P("star.degrees", one(q * q + q), cite::heis_reg);
      break;
    case FamilyId::solvable2B:
      P("derived_dim", 1, cite::s2b);
      P("count.lines", lines3, cite::s2b);
      P("count.planes", 2 * q + 1, cite::s2b);
      P("isolated_count", 0, cite::s2b);
      P("degree.plane", one(q * q + 2 * q), cite::s2b);
      P("degree.y_line", one(q), cite::s2b);
      P("degree.z_line", one(q), cite::s2b);
      P("degree.other_V_line", one(q * q + 2 * q), cite::s2b);
      P("degree.outside_line", one(q * q + q - 1), cite::s2b);
      P("law.X_ab", true, cite::s2b);
      break;
    case FamilyId::case3_irreducible:
      P("derived_dim", 2, cite::c3_planes);
      P("count.planes", 1, cite::c3_planes);
      P("degree.V", one(q * q), cite::c3_deg);
      P("degree.V_line", one(q * q), cite::c3_deg);
      P("degree.outside_line", one(q * q + q + 1), cite::c3_deg);
      break;
    case FamilyId::case3_two_eigen:
      P("derived_dim", 2, cite::c3_planes);
      P("count.planes", 1 + 2 * q, cite::c3_planes);
      P("degree.plane", one(q * q + 2 * q), cite::c3_deg);
      P("degree.eigenlines", one(q), cite::c3_deg);
      P("degree.other_V_line", one(q * q + 2 * q), cite::c3_deg);
      P("degree.outside_line", one(q * q + q - 1), cite::c3_deg);
      break;
    case FamilyId::case3_jordan:
      P("derived_dim", 2, cite::c3_planes);
      P("count.planes", 1 + q, cite::c3_planes);
      P("degree.eigenline", one(0), cite::c3_deg);
      P("degree.plane", one(q * q + q), cite::c3_deg);
      P("degree.other_line", one(q * q + q), cite::c3_deg);
      P("isolated_count", 1, cite::c3_deg);
      P("isolated_is_eigenline", true, cite::c3_deg);
      P("star.order", (q + 1) * (q + 1), cite::c3_deg);
      P("star.is_regular", true, cite::c3_deg);
      P("star.degrees", one(q * q + q), cite::c3_deg);
      break;
    case FamilyId::case3_scalar:
      P("derived_dim", 2, cite::c3_planes);
      P("count.planes", lines3, cite::c3_planes);
      P("degree.plane", one(2 * q * q + q), cite::c3_deg);
      P("degree.line", one(q * q), cite::c3_deg);
      break;
    case FamilyId::sl2: {
      const long long nonsplit = q * (q - 1) / 2, split = q * (q + 1) / 2;
      const long long omega = (q * q + q + 2) / 2;
      P("derived_dim", 3, cite::perfect);
      P("count.lines", lines3, cite::sl2_sub);
      P("count.planes", q + 1, cite::sl2_sub);
      P("count.nilpotent", q + 1, cite::sl2_sub);
      P("count.split", split, cite::sl2_sub);
      P("count.nonsplit", nonsplit, cite::sl2_sub);
      P("count.borels", q + 1, cite::sl2_sub);
      P("borels_closed_form_match", true, cite::sl2_borel);
      P("borel_membership_trichotomy", true, cite::sl2_borel);
      P("borel_lines", true, cite::sl2_lines);
      P("order", (q + 1) * (q + 1) + 1, cite::sl2_deg);
      P("size", q * (q + 1) * (q + 1) * (q + 1) / 2, cite::sl2_deg);
      std::vector<long long> seq;
      seq.insert(seq.end(), static_cast<std::size_t>(nonsplit), (q + 1) * (q + 1));
      seq.insert(seq.end(), static_cast<std::size_t>(2 * (q + 1)), q * q + q);
      seq.insert(seq.end(), static_cast<std::size_t>(split), q * q - 1);
      P("degree_sequence", seq, cite::sl2_deg);
      P("degree.borel", one(q * q + q), cite::sl2_deg);
      P("degree.nilpotent", one(q * q + q), cite::sl2_deg);
      P("degree.split", one(q * q - 1), cite::sl2_deg);
      P("degree.nonsplit", one((q + 1) * (q + 1)), cite::sl2_deg);
      P("clique_number", omega, cite::sl2_inv);
      P("chromatic_number", omega, cite::sl2_chi);
      P("borel_coloring.colors", omega, cite::sl2_chi);
      P("borel_coloring.proper", true, cite::sl2_chi);
      P("borel_coloring.classes", true, cite::sl2_chi);
      P("domination_number", 1, cite::sl2_inv);
      P("is_connected", true, cite::sl2_inv);
      P("diameter", 2, cite::sl2_inv);
      P("radius", 1, cite::sl2_inv);
      P("center_is_nonsplit", true, cite::sl2_inv);
      P("girth", 3, cite::sl2_inv);
      P("every_vertex_on_triangle", true, cite::sl2_inv);
      P("borels_induce_complete", true, cite::sl2_inv);
      P("is_planar", false, cite::sl2_inv);
      break;
    }
    case FamilyId::su2:
      P("derived_dim", 3, cite::perfect);
      out.push_back({"claim.su2_complete", true, cite::su2, true});
      break;
    case FamilyId::diam3_example:
      P("frattini_dim", 0, cite::diam3);
      P("is_connected", true, cite::diam3);
      P("diameter", 3, cite::diam3);
      P("distance.Fa_B", 3, cite::diam3);
      break;
  }
  return out;
}

Analysis analyze(const AlgebraPtr& algebra, const std::optional<FamilySpec>& spec, SolverBudget budget, bool laws) {
  SubalgebraInventory inventory = enumerate_subalgebras(algebra);
  ComaximalGraph graph = build_graph(inventory);
  Analysis a{algebra, spec, std::move(inventory), std::move(graph), {}, {}, {}, {}};

  std::vector<int> hint;
  BundleOptions options{budget, nullptr};
  const bool sl2 = algebra->field().is_odd() && is_standard_sl2(*algebra);
  if (sl2) {
    hint = borel_coloring_sl2(a.graph);
    options.coloring_hint = &hint;
  }
  a.bundle = compute_invariants(a.graph.graph, options);
  a.star_vertices = a.graph.non_isolated();
  if (static_cast<int>(a.star_vertices.size()) == a.graph.order()) {
    a.star_bundle = a.bundle;
  } else {
    a.star_bundle = compute_invariants(a.graph.graph.induced(a.star_vertices), BundleOptions{budget, nullptr});
  }

  Observer add{a.observations};
  generic_observations(a, add);
  if (laws) law_observations(a, add);
  if (spec) family_observations(a, *spec, add);
  return a;
}

const Observation* find_observation(const Analysis& analysis, const std::string& invariant) {
  for (const auto& o : analysis.observations)
    if (o.invariant == invariant) return &o;
  return nullptr;
}

void Summary::add(const Summary& o) {
  match += o.match;
  mismatch += o.mismatch;
  unpredicted += o.unpredicted;
  undecided += o.undecided;
  conflict += o.conflict;
  undecided_checked += o.undecided_checked;
}

Json Summary::json() const {
  Json j;
  j["match"] = match;
  j["mismatch"] = mismatch;
  j["unpredicted"] = unpredicted;
  j["undecided"] = undecided;
  j["conflict"] = conflict;
  return j;
}

std::vector<ReportItem> compare(const std::vector<Observation>& observations,
                                const std::vector<Prediction>& predictions, Summary& summary) {
  std::map<std::string, const Prediction*> by_key;
  for (const auto& p : predictions) by_key[p.invariant] = &p;
  std::set<std::string> used;
  std::vector<ReportItem> items;
  for (const auto& o : observations) {
    ReportItem item{o.invariant, o.value, std::nullopt, {}, Status::unpredicted};
    const auto it = by_key.find(o.invariant);
    if (it != by_key.end()) {
      used.insert(o.invariant);
      item.predicted = it->second->value;
      item.citation = it->second->citation;
    }
    if (!o.decided) {
      item.status = Status::undecided;
      ++summary.undecided;
      if (item.predicted) ++summary.undecided_checked;
    } else if (!item.predicted) {
      ++summary.unpredicted;
    } else if (*item.predicted == o.value) {
      item.status = Status::match;
      ++summary.match;
    } else if (it->second->claim_check) {
      item.status = Status::conflict;
      ++summary.conflict;
    } else {
      item.status = Status::mismatch;
      ++summary.mismatch;
    }
    items.push_back(std::move(item));
  }
  for (const auto& p : predictions) {
    if (used.count(p.invariant)) continue;
    items.push_back({p.invariant, nullptr, std::optional<Json>(p.value), p.citation, Status::mismatch});
    ++summary.mismatch;
  }
  return items;
}

namespace {

Json item_json(const ReportItem& item, bool checked) {
  Json j;
  j["invariant"] = item.invariant;
  j["computed"] = item.computed;
  if (checked) {
    j["predicted"] = item.predicted ? *item.predicted : Json(nullptr);
    j["citation"] = item.citation.empty() ? Json(nullptr) : Json(item.citation);
    j["status"] = to_string(item.status);
  }
  return j;
}

Json algebra_json(const LieAlgebra& L, const std::optional<FamilySpec>& spec, bool from_file) {
  const Field& f = L.field();
  Json j;
  j["source"] = from_file ? "file" : "catalog";
  j["family"] = spec ? Json(describe(*spec, f)) : Json(nullptr);
  if (!L.name().empty() && from_file) j["name"] = L.name();
  j["field"] = f.designation();
  std::vector<int> modulus = f.modulus();
  if (f.degree() > 1) modulus.push_back(1);
  j["modulus"] = modulus;
  j["dim"] = L.dim();
  j["derived_dim"] = L.derived_dim();
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

std::string json_cell(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (s.size() > 48) s = s.substr(0, 45) + "...";
  return s;
}

std::string text_report(const LieAlgebra& L, const std::optional<FamilySpec>& spec, const std::vector<ReportItem>& items,
                        bool checked, const Summary& summary, const std::vector<std::string>& notes) {
  std::ostringstream out;
  out << (spec ? describe(*spec, L.field()) : (L.name().empty() ? std::string("algebra") : L.name())) << " over F_"
      << L.field().designation() << " (dim " << L.dim() << ")\n";
  for (const auto& item : items) {
    out << "  " << std::left << std::setw(32) << item.invariant << std::setw(50) << json_cell(item.computed);
    if (checked) {
      out << std::setw(12) << to_string(item.status);
      if (item.status == Status::mismatch || item.status == Status::conflict)
        out << " predicted " << (item.predicted ? json_cell(*item.predicted) : "-");
    }
    out << "\n";
  }
  for (const auto& n : notes) out << "  note: " << n << "\n";
  if (checked) {
    out << "  summary: " << summary.match << " match, " << summary.mismatch << " mismatch, " << summary.unpredicted
        << " unpredicted, " << summary.undecided << " undecided, " << summary.conflict << " conflict\n";
  }
  return out.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

} // namespace

std::pair<AlgebraPtr, std::optional<FamilySpec>> resolve_algebra(const RunConfig& config) {
  if (config.algebra_file) return {load_algebra_file(*config.algebra_file), std::nullopt};
  const FieldPtr field = Field::from_designation(config.field);
  if (config.family == "case3") {
    std::optional<Matrix2> m;
    for (const auto& [key, value] : config.params) {
      if (key != "matrix") throw Error("case3 takes only the parameter matrix=a,b,c,d");
      const auto parts = split(value, ',');
      if (parts.size() != 4) throw Error("matrix needs 4 entries a,b,c,d");
      m = Matrix2{field->parse(parts[0]), field->parse(parts[1]), field->parse(parts[2]), field->parse(parts[3])};
    }
    if (!m) throw Error("case3 needs --param matrix=a,b,c,d");
    auto built = build_case3_from_matrix(field, *m);
    return {built.algebra, built.normalized};
  }
  auto spec = parse_family(config.family);
  if (!spec) throw Error("unknown family '" + config.family + "'");
  for (const auto& [key, value] : config.params) apply_param(*spec, *field, key, value);
  check_family_field(*spec, *field);
  return {build_catalog(*spec, field), spec};
}

InvariantReport run(const RunConfig& config) {
  const auto [algebra, spec] = resolve_algebra(config);
  const bool from_file = config.algebra_file.has_value();
  const Analysis a = analyze(algebra, spec, config.budget, from_file ? config.laws : true);

  std::vector<Prediction> predictions;
  if (config.check) {
    if (spec) predictions = predict(*spec, algebra->field());
    else if (config.laws) predictions = law_predictions(algebra->dim());
  }
  InvariantReport report;
  const auto items = compare(a.observations, predictions, report.summary);
  if (!config.check) report.summary = {};

  std::vector<std::string> notes;
  if (a.graph.order() == 0) notes.push_back("graph has no vertices");
  if (a.bundle.domination_on_star) notes.push_back("domination number computed on Gamma* (isolated vertices removed)");
  if (report.summary.undecided > 0) notes.push_back("solver budget exhausted; undecided items carry best-found bounds");
  for (const auto& item : items) {
    if (item.invariant == "claim.su2_complete" && item.status == Status::conflict) {
      notes.push_back("su2 claim conflicts with brute force: " + std::to_string(a.inventory.count(2)) +
                      " two-dimensional subalgebras found");
    }
  }

  const bool star = config.star;
  const std::vector<int>* shown = nullptr;
  std::vector<int> all(a.graph.order());
  for (int v = 0; v < a.graph.order(); ++v) all[v] = v;
  shown = star ? &a.star_vertices : &all;

  Json j;
  j["algebra"] = algebra_json(*algebra, spec, from_file);
  j["graph"] = star ? "gamma_star" : "gamma";
  Json inv;
  Json counts = Json::object();
  for (const auto& [d, list] : a.inventory.by_dim) counts[std::to_string(d)] = list.size();
  inv["counts"] = std::move(counts);
  inv["maximals"] = a.inventory.maximals.size();
  inv["frattini"] = matrix_json(a.inventory.frattini);
  j["inventory"] = std::move(inv);
  Json vertices = Json::array();
  for (std::size_t i = 0; i < shown->size(); ++i) {
    const int v = (*shown)[i];
    Json vj;
    vj["index"] = i;
    if (star) vj["gamma_index"] = v;
    vj["kind"] = to_string(a.graph.kinds[v]);
    vj["basis"] = matrix_json(a.graph.vertices[v]);
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  j["bundle"] = bundle_json(star ? a.star_bundle : a.bundle);
  j["checked"] = config.check;
  Json jitems = Json::array();
  for (const auto& item : items) jitems.push_back(item_json(item, config.check));
  j["items"] = std::move(jitems);
  if (config.check) {
    j["summary"] = report.summary.json();
    j["ok"] = report.summary.ok();
  }
  j["notes"] = notes;
  report.json = std::move(j);
  report.text = text_report(*algebra, spec, items, config.check, report.summary, notes);

  if (config.json_path) write_file(*config.json_path, dump_json(report.json));
  if (config.text_path) write_file(*config.text_path, report.text);
  if (config.inventory_path) write_file(*config.inventory_path, dump_json(inventory_json(a.inventory)));
  if (config.dot_path) {
    if (star) {
      ComaximalGraph sg;
      sg.algebra = a.graph.algebra;
      for (int v : a.star_vertices) {
        sg.vertices.push_back(a.graph.vertices[v]);
        sg.kinds.push_back(a.graph.kinds[v]);
      }
      sg.graph = a.graph.graph.induced(a.star_vertices);
      write_file(*config.dot_path, to_dot(sg));
    } else {
      write_file(*config.dot_path, to_dot(a.graph));
    }
  }
  return report;
}

SweepResult sweep(const std::vector<FamilySpec>& families, const std::vector<std::string>& fields,
                  SolverBudget budget) {
  struct Cell {
    Json row;
    Summary summary;
    bool error = false;
  };
  const std::size_t cells = families.size() * fields.size();
  std::vector<Cell> out(cells);
  detail::parallel_for(
      cells, worker_threads(),
      [&](std::size_t idx) {
        const FamilySpec& spec = families[idx / fields.size()];
        const std::string& designation = fields[idx % fields.size()];
        Cell& cell = out[idx];
        Json& row = cell.row;
        row["family"] = family_name(spec.id);
        row["field"] = designation;
        try {
          const FieldPtr field = Field::from_designation(designation);
          row["field"] = field->designation();
          row["family"] = describe(spec, *field);
          if (const auto reason = unsupported_reason(spec, *field)) {
            row["status"] = "skipped";
            row["reason"] = *reason;
            return;
          }
          const Analysis a = analyze(build_catalog(spec, field), spec, budget, true);
          const auto items = compare(a.observations, predict(spec, *field), cell.summary);
          row["status"] = "ok";
          row["summary"] = cell.summary.json();
          Json jitems = Json::array();
          for (const auto& item : items) jitems.push_back(item_json(item, true));
          row["items"] = std::move(jitems);
        } catch (const std::exception& e) {
          row["status"] = "error";
          row["reason"] = e.what();
          cell.error = true;
        }
      },
      2);

  SweepResult result;
  Json rows = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(36) << "family" << std::setw(7) << "field" << std::right << std::setw(7) << "match"
        << std::setw(10) << "mismatch" << std::setw(13) << "unpredicted" << std::setw(11) << "undecided"
        << std::setw(10) << "conflict" << "\n";
  for (auto& cell : out) {
    const std::string status = cell.row["status"].get<std::string>();
    table << std::left << std::setw(36) << cell.row["family"].get<std::string>() << std::setw(7)
          << cell.row["field"].get<std::string>() << std::right;
    if (status == "ok") {
      const auto& s = cell.summary;
      table << std::setw(7) << s.match << std::setw(10) << s.mismatch << std::setw(13) << s.unpredicted
            << std::setw(11) << s.undecided << std::setw(10) << s.conflict << "\n";
    } else {
      table << "  " << status << ": " << cell.row["reason"].get<std::string>() << "\n";
    }
    result.totals.add(cell.summary);
    if (cell.error) ++result.errors;
    rows.push_back(std::move(cell.row));
  }
  Json j;
  j["fields"] = fields;
  j["rows"] = std::move(rows);
  j["totals"] = result.totals.json();
  j["errors"] = result.errors;
  j["ok"] = result.ok();
  result.json = std::move(j);
  result.table = table.str();
  return result;
}

} // namespace comax
