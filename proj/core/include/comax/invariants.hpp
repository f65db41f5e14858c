#pragma once

#include "comax/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace comax {

/// Node limit shared by the exact solvers. Exhaustion never produces a
/// silent bound: results carry `decided = false`.
struct SolverBudget {
  std::uint64_t node_limit = 20'000'000;
};

struct CliqueResult {
  bool decided = true;
  int size = 0;              // best found; exact when decided
  std::vector<int> witness;  // ascending vertex indices
  std::uint64_t nodes = 0;
};

/// Branch and bound with greedy-coloring upper bounds over bitsets.
CliqueResult max_clique(const Graph& g, SolverBudget budget = {});

struct ColoringResult {
  bool decided = true;
  int colors = 0;            // best found; exact when decided
  int lower_bound = 0;
  std::vector<int> coloring; // color per vertex, 0-based
  std::uint64_t nodes = 0;
  bool certified_by_hint = false;
};

class ImproperColoringError : public Error {
public:
  ImproperColoringError(int u, int v)
      : Error("coloring is improper on edge (" + std::to_string(u) + ", " + std::to_string(v) + ")"), u_(u), v_(v) {}
  int u() const { return u_; }
  int v() const { return v_; }

private:
  int u_, v_;
};

/// First edge whose endpoints share a color, if any.
std::optional<std::pair<int, int>> coloring_conflict(const Graph& g, const std::vector<int>& coloring);
int count_colors(const std::vector<int>& coloring);

/// Exact chromatic number: DSATUR branch and bound between the clique lower
/// bound and a constructive upper bound. A proper `hint` that meets the
/// clique bound certifies immediately; an improper hint throws
/// ImproperColoringError.
ColoringResult chromatic_number(const Graph& g, SolverBudget budget = {}, const std::vector<int>* hint = nullptr);

struct DominationResult {
  bool decided = true;
  int size = 0;
  std::vector<int> witness;
  std::uint64_t nodes = 0;
};

bool is_dominating(const Graph& g, const std::vector<int>& set);

/// Minimum dominating set by iterative deepening from below the greedy
/// upper bound; branches on the undominated vertex with fewest dominators.
DominationResult domination_number(const Graph& g, SolverBudget budget = {});

struct Metrics {
  bool connected = false;
  std::optional<int> diameter;           // nullopt: infinite, or no vertices
  std::optional<int> radius;
  std::vector<int> center;
  std::vector<std::optional<int>> eccentricity;
  std::optional<int> girth;              // nullopt: acyclic
};

/// BFS distances; -1 marks unreachable.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);
std::optional<int> girth(const Graph& g);
Metrics metric_invariants(const Graph& g);

bool every_vertex_on_triangle(const Graph& g);

struct PlanarityResult {
  bool planar = true;
  std::string route; // "k5-clique", "edge-bound", "boyer-myrvold"
};

/// (a) a clique of size >= 5, (b) size > 3 order - 6, (c) Boyer-Myrvold.
PlanarityResult is_planar(const Graph& g, int clique_lower_bound);

std::vector<int> degree_sequence(const Graph& g); // non-increasing

struct InvariantBundle {
  int order = 0;
  long long size = 0;
  std::vector<int> degree_sequence;
  Metrics metrics;
  CliqueResult clique;
  ColoringResult coloring;
  CliqueResult independence; // witness is an independent set
  DominationResult domination;
  bool domination_on_star = false; // computed on Gamma* because of isolated vertices
  PlanarityResult planarity;
  std::vector<int> isolated;
  bool is_regular = false;
  bool is_complete = false;
};

struct BundleOptions {
  SolverBudget budget;
  const std::vector<int>* coloring_hint = nullptr;
};

/// All invariants of g; witnesses use g's vertex indices.
InvariantBundle compute_invariants(const Graph& g, const BundleOptions& options = {});

struct DegreeProfile {
  std::vector<int> sequence;
  std::map<std::string, std::vector<int>> by_kind; // distinct degrees, ascending
};

DegreeProfile degree_profile(const ComaximalGraph& g);

/// Borels get colors 0..q in vertex order, nonsplit lines the next colors,
/// and each nilpotent or split line the color of the first Borel (in vertex
/// order) containing it. Throws if g is not Gamma(sl2(F_q)), q odd.
std::vector<int> borel_coloring_sl2(const ComaximalGraph& g);

} // namespace comax
