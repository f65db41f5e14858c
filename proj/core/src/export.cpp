#include "comax/export.hpp"

#include "comax/sl2.hpp"

#include <sstream>

namespace comax {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json("inf"); }

Json indices(const std::vector<int>& v) { return Json(v); }

const char* kind_color(VertexKind kind) {
  switch (kind) {
    case VertexKind::plane:
    case VertexKind::borel: return "red";
    case VertexKind::line:
    case VertexKind::split_line: return "blue";
    case VertexKind::nilpotent_line: return "green";
    case VertexKind::nonsplit_line: return "black";
    case VertexKind::other: return "gray";
  }
  return "gray";
}

} // namespace

std::string kind_prefix(VertexKind kind) {
  switch (kind) {
    case VertexKind::line: return "L";
    case VertexKind::nilpotent_line: return "N";
    case VertexKind::split_line: return "S";
    case VertexKind::nonsplit_line: return "NS";
    case VertexKind::plane: return "P";
    case VertexKind::borel: return "B";
    case VertexKind::other: return "X";
  }
  return "X";
}

Json matrix_json(const Subspace& s) {
  const Field& f = s.algebra()->field();
  Json rows = Json::array();
  for (int r = 0; r < s.dim(); ++r) {
    Json row = Json::array();
    for (Elem e : s.row(r)) row.push_back(f.format(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json inventory_json(const SubalgebraInventory& inventory) {
  const auto& L = *inventory.algebra;
  const bool sl2 = L.field().is_odd() && is_standard_sl2(L);
  Json j;
  j["field"] = L.field().designation();
  j["dim"] = L.dim();
  Json by_dim = Json::object();
  for (const auto& [d, list] : inventory.by_dim) {
    Json arr = Json::array();
    for (const auto& s : list) {
      Json item;
      item["basis"] = matrix_json(s);
      if (sl2 && d == 1) item["kind"] = to_string(classify_line_sl2(s));
      arr.push_back(std::move(item));
    }
    by_dim[std::to_string(d)] = std::move(arr);
  }
  j["by_dim"] = std::move(by_dim);
  Json maximals = Json::array();
  for (const auto& m : inventory.maximals) maximals.push_back(matrix_json(m));
  j["maximals"] = std::move(maximals);
  j["frattini"] = matrix_json(inventory.frattini);
  j["frattini_dim"] = inventory.frattini.dim();
  return j;
}

Json bundle_json(const InvariantBundle& b) {
  Json j;
  j["order"] = b.order;
  j["size"] = b.size;
  j["degree_sequence"] = b.degree_sequence;
  j["is_connected"] = b.metrics.connected;
  j["diameter"] = b.order == 0 ? Json(nullptr) : optional_int(b.metrics.diameter);
  j["radius"] = b.order == 0 ? Json(nullptr) : optional_int(b.metrics.radius);
  j["center"] = indices(b.metrics.center);
  Json ecc = Json::array();
  for (const auto& e : b.metrics.eccentricity) ecc.push_back(optional_int(e));
  j["eccentricity"] = std::move(ecc);
  j["girth"] = optional_int(b.metrics.girth);

  j["clique_number"] = {{"value", b.clique.size}, {"decided", b.clique.decided}, {"witness", b.clique.witness}};
  j["chromatic_number"] = {{"value", b.coloring.colors},
                           {"decided", b.coloring.decided},
                           {"lower_bound", b.coloring.lower_bound},
                           {"certified_by_hint", b.coloring.certified_by_hint},
                           {"coloring", b.coloring.coloring}};
  j["independence_number"] = {
      {"value", b.independence.size}, {"decided", b.independence.decided}, {"witness", b.independence.witness}};
  j["domination_number"] = {{"value", b.domination.size},
                            {"decided", b.domination.decided},
                            {"on_star", b.domination_on_star},
                            {"witness", b.domination.witness}};
  j["is_planar"] = b.planarity.planar;
  j["planarity_route"] = b.planarity.route;
  j["isolated_vertices"] = indices(b.isolated);
  j["is_regular"] = b.is_regular;
  j["is_complete"] = b.is_complete;
  return j;
}

std::string to_dot(const ComaximalGraph& g) {
  std::ostringstream out;
  out << "graph comaximal {\n";
  out << "  node [style=filled, fontcolor=white];\n";
  for (int v = 0; v < g.order(); ++v) {
    const char* color = g.graph.degree(v) == 0 ? "black" : kind_color(g.kinds[v]);
    out << "  v" << v << " [label=\"" << kind_prefix(g.kinds[v]) << g.vertices[v].to_string() << "\", fillcolor=" << color
        << "];\n";
  }
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.graph.neighbors(u).indices())
      if (u < v) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace comax
