#pragma once

#include "comax/finite_field.hpp"

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace comax {

/// Coordinates of an algebra element in the structure-constant basis.
using Vector = std::vector<Elem>;

/// One nonzero bracket [e_i, e_j] = sum_m coeffs[m] e_m, with i < j.
struct BracketSpec {
  int i = 0;
  int j = 0;
  Vector coeffs;
};

struct AxiomViolation {
  enum class Kind { alternating, antisymmetry, jacobi };
  Kind kind;
  int i;
  int j;
  int k; // unused (-1) for alternating/antisymmetry
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// A finite-dimensional Lie algebra over F_q by structure constants
/// [e_i, e_j] = sum_m c(i, j, m) e_m. Construction does not validate; call
/// validate() (catalog builders and the file loader always do).
class LieAlgebra {
public:
  LieAlgebra(FieldPtr field, int dim, std::vector<Elem> constants, std::string name = {});

  /// Fills [e_j, e_i] = -[e_i, e_j] automatically; unlisted pairs are zero.
  static LieAlgebra from_brackets(FieldPtr field, int dim, std::span<const BracketSpec> brackets,
                                  std::string name = {});

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  Elem constant(int i, int j, int m) const { return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + m]; }
  std::span<const Elem> basis_bracket(int i, int j) const {
    return {c_.data() + (static_cast<std::size_t>(i) * dim_ + j) * dim_, static_cast<std::size_t>(dim_)};
  }

  /// Bilinear extension of the structure constants.
  Vector bracket(std::span<const Elem> u, std::span<const Elem> v) const;

  Vector basis_vector(int i) const;

  ValidationReport validate() const;

  /// dim [L, L].
  int derived_dim() const;

  bool is_abelian() const;

  /// Same field and identical structure-constant tensor.
  bool same_structure(const LieAlgebra& other) const;

private:
  FieldPtr field_;
  int dim_;
  std::vector<Elem> c_;
  std::string name_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Row-reduces an r x n row-major matrix in place to reduced row echelon
/// form and returns the rank. Zero rows end up at the bottom.
int rref_in_place(const Field& field, std::vector<Elem>& m, int rows, int cols);

/// A subspace of a Lie algebra, stored as its unique RREF basis matrix.
///
/// Equality is matrix equality, which is set equality of subspaces. The
/// ordering is by dimension, then row-major element codes.
class Subspace {
public:
  /// rref_canonical: the RREF basis of span(vectors).
  static Subspace span(AlgebraPtr algebra, std::span<const Vector> vectors);
  static Subspace zero(AlgebraPtr algebra);
  static Subspace whole(AlgebraPtr algebra);
  /// Trusts that `rref` is already a full-rank RREF matrix with `rows` rows.
  static Subspace from_rref(AlgebraPtr algebra, int rows, std::vector<Elem> rref);

  const AlgebraPtr& algebra() const { return algebra_; }
  int dim() const { return rows_; }
  int ambient_dim() const { return algebra_->dim(); }
  std::span<const Elem> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * ambient_dim(), static_cast<std::size_t>(ambient_dim())};
  }
  const std::vector<Elem>& matrix() const { return data_; }
  std::vector<Vector> basis() const;
  /// Index of the first nonzero entry of each row.
  std::vector<int> pivots() const;

  bool contains_vector(std::span<const Elem> v) const;
  bool is_subalgebra() const;

  /// Rows as "[1 0 2;0 1 1]".
  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.rows_ == b.rows_ && a.data_ == b.data_;
  }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
  Subspace(AlgebraPtr algebra, int rows, std::vector<Elem> data)
      : algebra_(std::move(algebra)), rows_(rows), data_(std::move(data)) {}

  AlgebraPtr algebra_;
  int rows_;
  std::vector<Elem> data_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// inner is a subset of outer.
bool contains(const Subspace& outer, const Subspace& inner);

/// Smallest subalgebra containing s: brackets of all basis pairs are adjoined
/// and the span re-canonicalized until the dimension stops growing.
Subspace generated_subalgebra(const Subspace& s);

/// <A, B>, the subalgebra generated by A and B.
Subspace generated_by(const Subspace& a, const Subspace& b);

} // namespace comax
