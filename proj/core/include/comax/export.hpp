#pragma once

#include "comax/invariants.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace comax {

using Json = nlohmann::ordered_json;

/// Row-major matrix of field-element strings.
Json matrix_json(const Subspace& s);

/// Per-dimension basis matrices, maximals, frattini, and for sl2 over odd q
/// a kind tag per line.
Json inventory_json(const SubalgebraInventory& inventory);

/// Every bundle field; infinite distances are the string "inf".
Json bundle_json(const InvariantBundle& bundle);

/// Graphviz DOT: labels are kind prefix plus RREF rows, e.g.
/// `B[1 0 0;0 0 1]`. Planes and Borels red, generic and split lines blue,
/// nilpotent lines green, nonsplit lines and isolated vertices black.
std::string to_dot(const ComaximalGraph& g);

/// Prefix used in DOT labels: L, N, S, NS, P, B, X.
std::string kind_prefix(VertexKind kind);

} // namespace comax
