#include "comax/catalog.hpp"

#include <sstream>

namespace comax {

namespace {

bool has_root(const Field& f, Elem a, Elem b) {
  for (Elem t : f.elements()) {
    if (f.add(f.add(f.mul(t, t), f.mul(a, t)), b).code == 0) return true;
  }
  return false;
}

// Characteristic polynomial t^2 - tr t + det of a 2x2 matrix.
std::pair<Elem, Elem> char_poly(const Field& f, const Matrix2& m) {
  const Elem tr = f.add(m[0], m[3]);
  const Elem det = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
  return {f.neg(tr), det};
}

// Semidirect product F x + V with ad x acting by m; basis (x, v1, v2).
LieAlgebra case3_algebra(const FieldPtr& field, const Matrix2& m, std::string name) {
  const Field& f = *field;
  std::vector<BracketSpec> br{
      {0, 1, {f.zero(), m[0], m[1]}},
      {0, 2, {f.zero(), m[2], m[3]}},
  };
  return LieAlgebra::from_brackets(field, 3, br, std::move(name));
}

} // namespace

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::abelian: return "abelian";
    case FamilyId::nonabelian2: return "nonabelian2";
    case FamilyId::heisenberg3: return "heisenberg3";
    case FamilyId::solvable2B: return "solvable2B";
    case FamilyId::case3_irreducible: return "case3_irreducible";
    case FamilyId::case3_two_eigen: return "case3_two_eigen";
    case FamilyId::case3_jordan: return "case3_jordan";
    case FamilyId::case3_scalar: return "case3_scalar";
    case FamilyId::sl2: return "sl2";
    case FamilyId::su2: return "su2";
    case FamilyId::diam3_example: return "diam3_example";
  }
  return "unknown";
}

std::optional<FamilySpec> parse_family(const std::string& name) {
  static const std::map<std::string, FamilySpec> table = {
      {"abelian", {FamilyId::abelian, 3}},
      {"dim1", {FamilyId::abelian, 1}},
      {"abelian2", {FamilyId::abelian, 2}},
      {"abelian3", {FamilyId::abelian, 3}},
      {"nonabelian2", {FamilyId::nonabelian2}},
      {"heisenberg3", {FamilyId::heisenberg3}},
      {"solvable2B", {FamilyId::solvable2B}},
      {"case3_irreducible", {FamilyId::case3_irreducible}},
      {"case3_two_eigen", {FamilyId::case3_two_eigen}},
      {"case3_jordan", {FamilyId::case3_jordan}},
      {"case3_scalar", {FamilyId::case3_scalar}},
      {"sl2", {FamilyId::sl2}},
      {"su2", {FamilyId::su2}},
      {"diam3_example", {FamilyId::diam3_example}},
  };
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string describe(const FamilySpec& spec, const Field& f) {
  std::ostringstream os;
  os << family_name(spec.id);
  switch (spec.id) {
    case FamilyId::abelian: os << "(n=" << spec.n << ")"; break;
    case FamilyId::case3_two_eigen:
      if (const auto mu = spec.mu ? spec.mu : default_two_eigen_mu(f)) os << "(mu=" << f.format(*mu) << ")";
      break;
    case FamilyId::case3_jordan: os << "(lambda=" << f.format(spec.lambda.value_or(f.one())) << ")"; break;
    case FamilyId::case3_irreducible:
    case FamilyId::diam3_example: {
      const Matrix2 m = spec.matrix.value_or(irreducible_companion(f));
      os << "(matrix=" << f.format(m[0]) << "," << f.format(m[1]) << "," << f.format(m[2]) << "," << f.format(m[3])
         << ")";
      break;
    }
    default: break;
  }
  return os.str();
}

void apply_param(FamilySpec& spec, const Field& f, const std::string& key, const std::string& value) {
  if (key == "n") {
    if (spec.id != FamilyId::abelian) throw Error("parameter n only applies to abelian");
    spec.n = std::stoi(value);
    if (spec.n < 1 || spec.n > 4) throw Error("abelian dimension must be in 1..4");
  } else if (key == "mu") {
    if (spec.id != FamilyId::case3_two_eigen) throw Error("parameter mu only applies to case3_two_eigen");
    spec.mu = f.parse(value);
  } else if (key == "lambda") {
    if (spec.id != FamilyId::case3_jordan) throw Error("parameter lambda only applies to case3_jordan");
    spec.lambda = f.parse(value);
  } else if (key == "matrix") {
    if (spec.id != FamilyId::case3_irreducible && spec.id != FamilyId::diam3_example) {
      throw Error("parameter matrix only applies to case3_irreducible and diam3_example");
    }
    Matrix2 m{};
    std::istringstream is(value);
    std::string tok;
    int i = 0;
    while (std::getline(is, tok, ',')) {
      if (i >= 4) throw Error("matrix needs exactly 4 entries");
      m[i++] = f.parse(tok);
    }
    if (i != 4) throw Error("matrix needs exactly 4 entries");
    spec.matrix = m;
  } else {
    throw Error("unknown family parameter '" + key + "'");
  }
}

bool requires_odd_field(FamilyId id) { return id == FamilyId::sl2 || id == FamilyId::su2; }

int expected_derived_dim(const FamilySpec& spec, const Field& f) {
  switch (spec.id) {
    case FamilyId::abelian: return 0;
    case FamilyId::nonabelian2:
    case FamilyId::heisenberg3:
    case FamilyId::solvable2B: return 1;
    case FamilyId::case3_irreducible:
    case FamilyId::case3_two_eigen:
    case FamilyId::case3_jordan:
    case FamilyId::case3_scalar:
    case FamilyId::diam3_example: return 2;
    // In characteristic 2 the sl2 tensor degenerates to the Heisenberg one.
    case FamilyId::sl2: return f.is_odd() ? 3 : 1;
    case FamilyId::su2: return 3;
  }
  return -1;
}

Matrix2 irreducible_companion(const Field& f) {
  for (Elem a : f.elements()) {
    for (Elem b : f.elements()) {
      if (b.code == 0) continue;
      if (!has_root(f, a, b)) return {f.zero(), f.one(), f.neg(b), f.neg(a)};
    }
  }
  throw Error("no irreducible quadratic found"); // unreachable for a field
}

std::optional<Elem> default_two_eigen_mu(const Field& f) {
  for (Elem e : f.elements()) {
    if (e.code > 1) return e;
  }
  return std::nullopt;
}

std::string to_string(Case3Kind kind) {
  switch (kind) {
    case Case3Kind::irreducible: return "irreducible";
    case Case3Kind::two_eigen: return "two_eigen";
    case Case3Kind::jordan: return "jordan";
    case Case3Kind::scalar: return "scalar";
  }
  return "unknown";
}

Case3Form classify_case3_matrix(const Field& f, const Matrix2& m) {
  const auto [a, b] = char_poly(f, m);
  if (b.code == 0) throw Error("ad x matrix is singular; dim L' would be below 2");
  std::vector<Elem> roots;
  for (Elem t : f.elements()) {
    if (f.add(f.add(f.mul(t, t), f.mul(a, t)), b).code == 0) roots.push_back(t);
  }
  if (roots.empty()) return {Case3Kind::irreducible, f.zero()};
  if (roots.size() == 2) return {Case3Kind::two_eigen, f.div(roots[1], roots[0])};
  // Double root: scalar iff off-diagonal vanishes and the diagonal is constant.
  const Elem lambda = roots[0];
  if (m[1].code == 0 && m[2].code == 0 && m[0] == m[3]) return {Case3Kind::scalar, lambda};
  return {Case3Kind::jordan, lambda};
}

Case3Build build_case3_from_matrix(const FieldPtr& field, const Matrix2& m) {
  const Field& f = *field;
  const Case3Form form = classify_case3_matrix(f, m);
  FamilySpec spec;
  switch (form.kind) {
    case Case3Kind::irreducible:
      spec.id = FamilyId::case3_irreducible;
      spec.matrix = m;
      break;
    case Case3Kind::two_eigen:
      spec.id = FamilyId::case3_two_eigen;
      spec.mu = form.parameter;
      break;
    case Case3Kind::jordan:
      spec.id = FamilyId::case3_jordan;
      spec.lambda = form.parameter;
      break;
    case Case3Kind::scalar: spec.id = FamilyId::case3_scalar; break;
  }
  return {build_catalog(spec, field), form, spec};
}

AlgebraPtr build_catalog(const FamilySpec& spec, const FieldPtr& field) {
  const Field& f = *field;
  const Elem O = f.zero(), I = f.one();
  std::optional<LieAlgebra> L;
  switch (spec.id) {
    case FamilyId::abelian: {
      if (spec.n < 1 || spec.n > 4) throw Error("abelian dimension must be in 1..4");
      L.emplace(LieAlgebra::from_brackets(field, spec.n, {}, "abelian" + std::to_string(spec.n)));
      break;
    }
    case FamilyId::nonabelian2: {
      std::vector<BracketSpec> br{{0, 1, {O, I}}};
      L.emplace(LieAlgebra::from_brackets(field, 2, br, "nonabelian2"));
      break;
    }
    case FamilyId::heisenberg3: {
      std::vector<BracketSpec> br{{0, 1, {O, O, I}}};
      L.emplace(LieAlgebra::from_brackets(field, 3, br, "heisenberg3"));
      break;
    }
    case FamilyId::solvable2B: {
      std::vector<BracketSpec> br{{0, 1, {O, I, O}}};
      L.emplace(LieAlgebra::from_brackets(field, 3, br, "solvable2B"));
      break;
    }
    case FamilyId::case3_irreducible: {
      const Matrix2 m = spec.matrix.value_or(irreducible_companion(f));
      if (classify_case3_matrix(f, m).kind != Case3Kind::irreducible) {
        throw Error("case3_irreducible needs a matrix with irreducible characteristic polynomial");
      }
      L.emplace(case3_algebra(field, m, "case3_irreducible"));
      break;
    }
    case FamilyId::case3_two_eigen: {
      const auto mu = spec.mu ? spec.mu : default_two_eigen_mu(f);
      if (!mu) throw Error("case3_two_eigen needs mu outside {0,1}; none exists in F_" + f.designation());
      if (mu->code == 0 || *mu == I) throw Error("case3_two_eigen needs mu outside {0,1}");
      L.emplace(case3_algebra(field, {I, O, O, *mu}, "case3_two_eigen"));
      break;
    }
    case FamilyId::case3_jordan: {
      const Elem lambda = spec.lambda.value_or(I);
      if (lambda.code == 0) throw Error("case3_jordan needs lambda != 0");
      L.emplace(case3_algebra(field, {lambda, O, I, lambda}, "case3_jordan"));
      break;
    }
    case FamilyId::case3_scalar: L.emplace(case3_algebra(field, {I, O, O, I}, "case3_scalar")); break;
    case FamilyId::sl2: {
      const Elem two = f.from_int(2);
      // [x,y] = h, [x,h] = -2x, [y,h] = 2y
      std::vector<BracketSpec> br{{0, 1, {O, O, I}}, {0, 2, {f.neg(two), O, O}}, {1, 2, {O, two, O}}};
      L.emplace(LieAlgebra::from_brackets(field, 3, br, "sl2"));
      break;
    }
    case FamilyId::su2: {
      // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
      std::vector<BracketSpec> br{{0, 1, {O, O, I}}, {1, 2, {I, O, O}}, {0, 2, {O, f.neg(I), O}}};
      L.emplace(LieAlgebra::from_brackets(field, 3, br, "su2"));
      break;
    }
    case FamilyId::diam3_example: {
      const Matrix2 m = spec.matrix.value_or(irreducible_companion(f));
      if (classify_case3_matrix(f, m).kind != Case3Kind::irreducible) {
        throw Error("diam3_example needs ad x to act irreducibly on B");
      }
      // basis (a, b1, b2, x); [b_i, x] = -[x, b_i]
      std::vector<BracketSpec> br{{1, 3, {O, f.neg(m[0]), f.neg(m[1]), O}}, {2, 3, {O, f.neg(m[2]), f.neg(m[3]), O}}};
      L.emplace(LieAlgebra::from_brackets(field, 4, br, "diam3_example"));
      break;
    }
  }
  const auto report = L->validate();
  if (!report.ok()) throw Error(family_name(spec.id) + " failed validation: " + report.describe());
  const int expected = expected_derived_dim(spec, f);
  if (L->derived_dim() != expected) {
    throw Error(family_name(spec.id) + " has derived dimension " + std::to_string(L->derived_dim()) + ", expected " +
                std::to_string(expected));
  }
  return std::make_shared<const LieAlgebra>(std::move(*L));
}

std::vector<FamilySpec> sweep_families() {
  return {
      {FamilyId::abelian, 1},
      {FamilyId::abelian, 2},
      {FamilyId::nonabelian2},
      {FamilyId::abelian, 3},
      {FamilyId::heisenberg3},
      {FamilyId::solvable2B},
      {FamilyId::case3_irreducible},
      {FamilyId::case3_two_eigen},
      {FamilyId::case3_jordan},
      {FamilyId::case3_scalar},
      {FamilyId::sl2},
      {FamilyId::su2},
      {FamilyId::diam3_example},
  };
}

} // namespace comax
