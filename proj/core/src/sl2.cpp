#include "comax/sl2.hpp"

#include "comax/catalog.hpp"

namespace comax {

std::string to_string(LineKind kind) {
  switch (kind) {
    case LineKind::nilpotent: return "nilpotent";
    case LineKind::split: return "split";
    case LineKind::nonsplit: return "nonsplit";
    case LineKind::generic: return "generic";
  }
  return "unknown";
}

namespace {

void require_sl2(const LieAlgebra& L) {
  if (!L.field().is_odd()) throw Error("sl2 line classification needs odd q");
  if (!is_standard_sl2(L)) throw Error("algebra is not sl2 in the standard basis (x, y, h)");
}

void require_line(const Subspace& line) {
  if (line.dim() != 1) throw Error("expected a line, got a subspace of dimension " + std::to_string(line.dim()));
  require_sl2(*line.algebra());
}

// Roots alpha of nu alpha^2 + 4 alpha - 4 mu = 0, nu arbitrary.
int roots_affine_case(const Field& f, Elem mu, Elem nu) {
  if (nu.code == 0) return 1;
  const Elem d = f.add(f.one(), f.mul(mu, nu)); // discriminant / 16
  if (d.code == 0) return 1;
  return f.is_square(d) ? 2 : 0;
}

// Roots alpha of nu alpha^2 = 4 mu with nu != 0.
int roots_linear_case(const Field& f, Elem mu, Elem nu) {
  if (mu.code == 0) return 1;
  return f.is_square(f.div(f.mul(f.from_int(4), mu), nu)) ? 2 : 0;
}

} // namespace

bool is_standard_sl2(const LieAlgebra& L) {
  if (L.dim() != 3) return false;
  const auto reference = build_catalog(FamilySpec{FamilyId::sl2}, L.field_ptr());
  return L.same_structure(*reference);
}

Elem sl2_discriminant(const Field& f, std::span<const Elem> u) {
  if (u.size() != 3) throw Error("sl2 vectors have 3 coordinates");
  return f.add(f.mul(u[2], u[2]), f.mul(u[0], u[1]));
}

LineKind classify_line_sl2(const Subspace& line) {
  require_line(line);
  const Field& f = line.algebra()->field();
  const Elem delta = sl2_discriminant(f, line.row(0));
  if (delta.code == 0) return LineKind::nilpotent;
  return f.is_square(delta) ? LineKind::split : LineKind::nonsplit;
}

std::vector<Subspace> borels_closed_form(const AlgebraPtr& algebra) {
  require_sl2(*algebra);
  const Field& f = algebra->field();
  const Elem O = f.zero(), I = f.one();
  const Elem quarter = f.inv(f.from_int(4));
  std::vector<Subspace> out;
  const std::vector<Vector> standard{{I, O, O}, {O, O, I}};
  out.push_back(Subspace::span(algebra, standard));
  for (Elem alpha : f.elements()) {
    const std::vector<Vector> gens{{alpha, O, I}, {f.mul(quarter, f.mul(alpha, alpha)), I, O}};
    out.push_back(Subspace::span(algebra, gens));
  }
  return out;
}

int borel_membership_count(const Subspace& line) {
  require_line(line);
  const Field& f = line.algebra()->field();
  const auto u = line.row(0);
  Elem mu = u[0], nu = u[1];
  const Elem lambda = u[2];
  const int in_standard = nu.code == 0 ? 1 : 0;
  if (lambda.code != 0) {
    mu = f.div(mu, lambda);
    nu = f.div(nu, lambda);
    return in_standard + roots_affine_case(f, mu, nu);
  }
  if (nu.code == 0) return in_standard; // the line Fx
  return in_standard + roots_linear_case(f, mu, nu);
}

int borel_membership_count_exhaustive(const Subspace& line, const std::vector<Subspace>& borels) {
  int count = 0;
  for (const auto& b : borels) {
    if (contains(b, line)) ++count;
  }
  return count;
}

} // namespace comax
