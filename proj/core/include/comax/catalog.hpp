#pragma once

#include "comax/lie_algebra.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace comax {

enum class FamilyId {
  abelian,          // abelian(n)
  nonabelian2,      // [x,y] = y
  heisenberg3,      // basis (e,f,h), [e,f] = h
  solvable2B,       // basis (x,y,z), [x,y] = y
  case3_irreducible,
  case3_two_eigen,  // [x,v1] = v1, [x,v2] = mu v2
  case3_jordan,     // [x,v1] = lambda v1, [x,v2] = v1 + lambda v2
  case3_scalar,     // [x,v1] = v1, [x,v2] = v2
  sl2,              // basis (x,y,h)
  su2,              // [e1,e2] = e3 and cyclic
  diam3_example,    // basis (a,b1,b2,x), Fa + B abelian, ad x irreducible on B
};

/// 2x2 matrix (alpha, beta, gamma, delta) of ad x on V = <v1, v2>:
/// [x,v1] = alpha v1 + beta v2, [x,v2] = gamma v1 + delta v2.
using Matrix2 = std::array<Elem, 4>;

struct FamilySpec {
  FamilyId id = FamilyId::abelian;
  int n = 3;                        // abelian only
  std::optional<Elem> mu;           // case3_two_eigen
  std::optional<Elem> lambda;       // case3_jordan
  std::optional<Matrix2> matrix;    // case3_irreducible, diam3_example
};

std::string family_name(FamilyId id);
/// Accepts the family ids plus the aliases dim1, abelian2, abelian3.
std::optional<FamilySpec> parse_family(const std::string& name);
/// Human-readable id with parameters, e.g. "abelian(n=3)" or "case3_jordan(lambda=1)".
std::string describe(const FamilySpec& spec, const Field& field);

/// Applies key=value parameters (n, mu, lambda, matrix=a,b,c,d).
void apply_param(FamilySpec& spec, const Field& field, const std::string& key, const std::string& value);

/// dim L' expected for the family, used as a build-time check.
int expected_derived_dim(const FamilySpec& spec, const Field& field);

/// True if the family is only defined for odd q (sl2, su2).
bool requires_odd_field(FamilyId id);

/// The monic quadratic t^2 + a t + b with no root in F_q, first in
/// (a, b) element order. Returned as its companion matrix
/// (0, 1, -b, -a).
Matrix2 irreducible_companion(const Field& field);

/// Smallest mu outside {0, 1}; nullopt for F_2.
std::optional<Elem> default_two_eigen_mu(const Field& field);

/// Builds and validates the family's algebra. Throws on invalid parameters
/// or if the result fails validation or the derived-dimension check.
AlgebraPtr build_catalog(const FamilySpec& spec, const FieldPtr& field);

enum class Case3Kind { irreducible, two_eigen, jordan, scalar };

struct Case3Form {
  Case3Kind kind;
  Elem parameter; // mu for two_eigen, lambda for jordan, lambda for scalar
};

std::string to_string(Case3Kind kind);

/// Eigenvalue analysis of ad x over F_q. Throws if the matrix is singular.
Case3Form classify_case3_matrix(const Field& field, const Matrix2& m);

struct Case3Build {
  AlgebraPtr algebra;
  Case3Form form;
  FamilySpec normalized;
};

/// Classifies a raw ad-x matrix and builds the normalized algebra of the
/// detected subcase. Irreducible matrices are kept as given.
Case3Build build_case3_from_matrix(const FieldPtr& field, const Matrix2& m);

/// Families covered by `sweep --all`, with default parameters.
std::vector<FamilySpec> sweep_families();

} // namespace comax
