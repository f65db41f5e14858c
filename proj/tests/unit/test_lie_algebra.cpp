#include "comax/catalog.hpp"
#include "comax/lie_algebra.hpp"
#include "comax/subalgebra.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace comax;

namespace {

Vector vec(const Field& f, std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(f.from_int(x));
  return v;
}

AlgebraPtr make(const FieldPtr& f, int n, const std::vector<BracketSpec>& b) {
  return std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets(f, n, b));
}

} // namespace

TEST_CASE("validation") {
  auto f = Field::make(3);
  auto abelian = make(f, 3, {});
  CHECK(abelian->validate().ok());

  auto heis = build_catalog({FamilyId::heisenberg3}, f);
  CHECK(heis->validate().ok());

  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1 fails Jacobi.
  const Field& F = *f;
  auto bad = make(f, 3, {{0, 1, vec(F, {0, 0, 1})}, {1, 2, vec(F, {1, 0, 0})}, {0, 2, vec(F, {2, 0, 0})}});
  const auto report = bad->validate();
  CHECK_FALSE(report.ok());
  bool has_jacobi = false;
  for (const auto& v : report.violations) has_jacobi = has_jacobi || v.kind == AxiomViolation::Kind::jacobi;
  CHECK(has_jacobi);
  CHECK(report.describe().find("Jacobi") != std::string::npos);

  // Oracle: the Jacobi sum on (e1,e2,e3) is nonzero by direct expansion.
  oracle::Space sp(bad);
  const int e1 = sp.encode(vec(F, {1, 0, 0})), e2 = sp.encode(vec(F, {0, 1, 0})), e3 = sp.encode(vec(F, {0, 0, 1}));
  const int jac = sp.add(sp.add(sp.bracket(e1, sp.bracket(e2, e3)), sp.bracket(e2, sp.bracket(e3, e1))),
                         sp.bracket(e3, sp.bracket(e1, e2)));
  CHECK(jac != 0);

  // Non-antisymmetric and non-alternating tensors.
  std::vector<Elem> c(27, F.zero());
  c[(0 * 3 + 1) * 3 + 2] = F.one();
  CHECK_FALSE(LieAlgebra(f, 3, c).validate().ok());
  std::vector<Elem> d(27, F.zero());
  d[(1 * 3 + 1) * 3 + 0] = F.one();
  CHECK_FALSE(LieAlgebra(f, 3, d).validate().ok());
}

TEST_CASE("bracket examples") {
  auto f = Field::make(5);
  auto sl2 = build_catalog({FamilyId::sl2}, f);
  const Field& F = *f;
  // basis (x, y, h)
  CHECK(sl2->bracket(vec(F, {0, 0, 1}), vec(F, {1, 0, 0})) == vec(F, {2, 0, 0}));
  CHECK(sl2->bracket(vec(F, {1, 0, 0}), vec(F, {0, 1, 0})) == vec(F, {0, 0, 1}));
  CHECK_THROWS_AS(sl2->bracket(vec(F, {1, 0}), vec(F, {0, 1, 0})), Error);

  auto heis = build_catalog({FamilyId::heisenberg3}, f);
  for (Elem a1 : F.elements())
    for (Elem b2 : F.elements()) {
      const Vector u{a1, F.from_int(2), F.from_int(3)}, v{F.from_int(1), b2, F.from_int(4)};
      const Elem expected = F.sub(F.mul(a1, b2), F.mul(F.from_int(1), F.from_int(2)));
      CHECK(heis->bracket(u, v) == Vector{F.zero(), F.zero(), expected});
    }
}

TEST_CASE("bracket is alternating and antisymmetric on all vectors") {
  auto f = Field::make(3);
  for (auto id : {FamilyId::sl2, FamilyId::solvable2B, FamilyId::case3_jordan}) {
    auto L = build_catalog({id}, f);
    oracle::Space sp(L);
    for (int a = 0; a < sp.size; ++a) {
      CHECK(sp.encode(L->bracket(sp.decode(a), sp.decode(a))) == 0);
      for (int b = 0; b < sp.size; ++b) {
        auto u = L->bracket(sp.decode(a), sp.decode(b));
        auto w = L->bracket(sp.decode(b), sp.decode(a));
        CHECK(sp.add(sp.encode(u), sp.encode(w)) == 0);
        CHECK(sp.encode(u) == sp.bracket(a, b));
      }
    }
  }
}

TEST_CASE("rref canonical form") {
  auto f = Field::make(2);
  auto L = make(f, 3, {});
  const Field& F = *f;
  auto s = Subspace::span(L, std::vector<Vector>{vec(F, {1, 1, 0}), vec(F, {0, 1, 1})});
  CHECK(s.dim() == 2);
  CHECK(s.to_string() == "[1 0 1;0 1 1]");
  auto t = Subspace::span(L, std::vector<Vector>{vec(F, {0, 1, 1}), vec(F, {1, 0, 1}), vec(F, {1, 1, 0})});
  CHECK(s == t);
  auto v = vec(F, {1, 1, 1});
  CHECK(Subspace::span(L, std::vector<Vector>{v, v}).dim() == 1);
  CHECK(Subspace::span(L, std::vector<Vector>{}).dim() == 0);
  CHECK(Subspace::span(L, std::vector<Vector>{}) == Subspace::zero(L));
  CHECK(s.pivots() == std::vector<int>{0, 1});
  CHECK(Subspace::span(L, s.basis()) == s);
}

TEST_CASE("generated subalgebra examples") {
  auto f = Field::make(3);
  const Field& F = *f;
  auto heis = build_catalog({FamilyId::heisenberg3}, f);
  auto ef = Subspace::span(heis, std::vector<Vector>{vec(F, {1, 0, 0}), vec(F, {0, 1, 0})});
  CHECK(generated_subalgebra(ef) == Subspace::whole(heis));

  auto sl2 = build_catalog({FamilyId::sl2}, f);
  auto xy = Subspace::span(sl2, std::vector<Vector>{vec(F, {1, 0, 0}), vec(F, {0, 1, 0})});
  CHECK(generated_subalgebra(xy) == Subspace::whole(sl2));
  auto xh = Subspace::span(sl2, std::vector<Vector>{vec(F, {1, 0, 0}), vec(F, {0, 0, 1})});
  CHECK(generated_subalgebra(xh) == xh);
}

TEST_CASE("closure is extensive, monotone, idempotent, and matches the element-set oracle") {
  for (int q : {2, 3}) {
    auto f = Field::make(q);
    for (const auto& spec : sweep_families()) {
      if (requires_odd_field(spec.id) && q == 2) continue;
      if (spec.id == FamilyId::case3_two_eigen && q == 2) continue;
      auto L = build_catalog(spec, f);
      if (L->dim() > 3) continue;
      oracle::Space sp(L);
      std::vector<Subspace> all;
      for (int d = 0; d <= L->dim(); ++d)
        for (auto& s : enumerate_subspaces(L, d)) all.push_back(s);
      for (const auto& s : all) {
        const auto g = generated_subalgebra(s);
        CHECK(contains(g, s));
        CHECK(generated_subalgebra(g) == g);
        CHECK(g.is_subalgebra());
        CHECK(sp.of(g) == sp.close(sp.of(s)));
      }
      for (const auto& a : all)
        for (const auto& b : all)
          if (contains(b, a)) CHECK(contains(generated_subalgebra(b), generated_subalgebra(a)));
    }
  }
}

TEST_CASE("sum and intersection dimension formula") {
  for (int q : {2, 3}) {
    auto f = Field::make(q);
    auto L = make(f, 3, {});
    oracle::Space sp(L);
    std::vector<Subspace> all;
    for (int d = 0; d <= 3; ++d)
      for (auto& s : enumerate_subspaces(L, d)) all.push_back(s);
    for (const auto& a : all) {
      CHECK(intersection(a, a) == a);
      for (const auto& b : all) {
        const auto s = sum(a, b);
        const auto i = intersection(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        // Oracle: intersection as element sets.
        auto sa = sp.of(a), sb = sp.of(b), si = sp.of(i);
        for (int v = 0; v < sp.size; ++v) CHECK(si[v] == (sa[v] && sb[v]));
        CHECK(contains(s, a));
        CHECK(contains(s, b));
      }
    }
  }
}

TEST_CASE("derived dimension by family") {
  auto f3 = Field::make(3);
  CHECK(build_catalog({FamilyId::abelian, 3}, f3)->derived_dim() == 0);
  CHECK(build_catalog({FamilyId::heisenberg3}, f3)->derived_dim() == 1);
  CHECK(build_catalog({FamilyId::sl2}, f3)->derived_dim() == 3);
  CHECK(build_catalog({FamilyId::su2}, f3)->derived_dim() == 3);
  CHECK(build_catalog({FamilyId::sl2}, Field::make(2))->derived_dim() == 1);
}

TEST_CASE("mixing algebras is rejected") {
  auto f = Field::make(3);
  auto a = make(f, 3, {});
  auto b = build_catalog({FamilyId::heisenberg3}, f);
  const auto s = Subspace::whole(a);
  const auto t = Subspace::whole(b);
  CHECK_THROWS_AS(sum(s, t), Error);
  CHECK_THROWS_AS(intersection(s, t), Error);
}
