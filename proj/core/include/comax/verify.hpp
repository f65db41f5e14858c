#pragma once

#include "comax/catalog.hpp"
#include "comax/export.hpp"
#include "comax/invariants.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace comax {

enum class Status { match, mismatch, unpredicted, undecided, conflict };

std::string to_string(Status status);

/// One closed-form value keyed by invariant name. A claim check reports
/// disagreement as `conflict` instead of `mismatch`.
struct Prediction {
  std::string invariant;
  Json value;
  std::string citation;
  bool claim_check = false;
};

/// Universal laws (Frattini isolation, completeness, diameter bound, the
/// three-dimensional adjacency rules, witness checks), predicted true.
std::vector<Prediction> law_predictions(int dim);

/// Full prediction table for a family over F_q, laws included. Throws for
/// families that need odd q, and for case3_two_eigen over F_2.
std::vector<Prediction> predict(const FamilySpec& spec, const Field& field);

/// Throws if the family is not defined over this field.
void check_family_field(const FamilySpec& spec, const Field& field);

/// A computed value; `decided = false` when an exact solver ran out of budget.
struct Observation {
  std::string invariant;
  Json value;
  bool decided = true;
};

struct Analysis {
  AlgebraPtr algebra;
  std::optional<FamilySpec> spec;
  SubalgebraInventory inventory;
  ComaximalGraph graph;
  InvariantBundle bundle;      // on Gamma
  InvariantBundle star_bundle; // on Gamma*
  std::vector<int> star_vertices;
  std::vector<Observation> observations;
};

/// Inventory, graph, both bundles, and every observation. Family-specific
/// observations are added when `spec` is given; laws when `laws` is set.
Analysis analyze(const AlgebraPtr& algebra, const std::optional<FamilySpec>& spec, SolverBudget budget,
                 bool laws = true);

const Observation* find_observation(const Analysis& analysis, const std::string& invariant);

struct ReportItem {
  std::string invariant;
  Json computed;
  std::optional<Json> predicted;
  std::string citation;
  Status status = Status::unpredicted;
};

struct Summary {
  int match = 0;
  int mismatch = 0;
  int unpredicted = 0;
  int undecided = 0;
  int conflict = 0;

  /// No mismatch, and no undecided item that carries a prediction.
  bool ok() const { return mismatch == 0 && undecided_checked == 0; }
  int undecided_checked = 0;

  void add(const Summary& other);
  Json json() const;
};

/// Joins observations with predictions. Predictions without a matching
/// observation are reported as mismatches.
std::vector<ReportItem> compare(const std::vector<Observation>& observations,
                                const std::vector<Prediction>& predictions, Summary& summary);

struct RunConfig {
  std::string family;                                       // catalog id, or "case3" with a matrix
  std::string field = "3";
  std::vector<std::pair<std::string, std::string>> params;  // key=value
  std::optional<std::string> algebra_file;                  // load mode
  bool check = false;
  bool laws = true;  // load mode: evaluate the universal laws
  bool star = false; // bundle, vertex list and DOT describe Gamma*
  SolverBudget budget;
  std::optional<std::string> json_path;
  std::optional<std::string> dot_path;
  std::optional<std::string> inventory_path;
  std::optional<std::string> text_path;
};

struct InvariantReport {
  Json json;
  Summary summary;
  std::string text;
};

/// Builds the algebra, analyzes it, joins predictions when checking, and
/// writes the requested files. JSON output is deterministic.
InvariantReport run(const RunConfig& config);

/// Resolves the family and parameters of a config to an algebra.
std::pair<AlgebraPtr, std::optional<FamilySpec>> resolve_algebra(const RunConfig& config);

struct SweepResult {
  Json json;
  std::string table;
  Summary totals;
  int errors = 0;
  bool ok() const { return totals.ok() && errors == 0; }
};

/// One cell per (family, field); cells the family does not support are
/// recorded as skipped. Cells run in parallel, assembly is in input order.
SweepResult sweep(const std::vector<FamilySpec>& families, const std::vector<std::string>& fields,
                  SolverBudget budget);

/// Canonical serialization used for every JSON artifact.
std::string dump_json(const Json& j);

} // namespace comax
