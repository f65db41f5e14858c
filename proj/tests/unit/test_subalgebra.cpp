#include "comax/catalog.hpp"
#include "comax/sl2.hpp"
#include "comax/subalgebra.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

using namespace comax;

namespace {

Vector vec(const Field& f, std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(f.from_int(x));
  return v;
}

Subspace line(const AlgebraPtr& L, std::initializer_list<int> xs) {
  return Subspace::span(L, std::vector<Vector>{vec(L->field(), xs)});
}

bool supported(const FamilySpec& spec, const Field& f) {
  if (requires_odd_field(spec.id) && !f.is_odd()) return false;
  if (spec.id == FamilyId::case3_two_eigen && !default_two_eigen_mu(f)) return false;
  return true;
}

} // namespace

TEST_CASE("subspace counts are Gaussian binomials") {
  for (int q : {2, 3}) {
    auto f = Field::make(q);
    for (int n = 1; n <= 4; ++n) {
      auto L = std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets(f, n, {}));
      for (int d = 0; d <= n; ++d) {
        const auto subs = enumerate_subspaces(L, d);
        CHECK(static_cast<long long>(subs.size()) == oracle::gaussian_binomial(n, d, q));
        CHECK(std::is_sorted(subs.begin(), subs.end()));
        CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
        for (const auto& s : subs) CHECK(s.dim() == d);
      }
      CHECK_THROWS_AS(enumerate_subspaces(L, n + 1), Error);
      CHECK_THROWS_AS(enumerate_subspaces(L, -1), Error);
    }
  }
  auto f4 = Field::make(2, 2);
  auto L = std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets(f4, 3, {}));
  CHECK(enumerate_subspaces(L, 1).size() == 21);
  CHECK(enumerate_subspaces(build_catalog({FamilyId::sl2}, Field::make(3)), 1).size() == 13);
}

TEST_CASE("inventory agrees with the element-set oracle") {
  for (int q : {2, 3}) {
    auto f = Field::make(q);
    for (const auto& spec : sweep_families()) {
      if (!supported(spec, *f)) continue;
      auto L = build_catalog(spec, f);
      if (L->dim() == 4 && q == 3) continue; // covered at q = 2
      CAPTURE(describe(spec, *f));
      CAPTURE(q);
      const auto inv = enumerate_subalgebras(L);
      oracle::Space sp(L);
      const auto brute = sp.subalgebras();
      std::set<oracle::Space::Set> mine;
      for (const auto& s : inv.all()) {
        CHECK(generated_subalgebra(s) == s);
        mine.insert(sp.of(s));
      }
      CHECK(mine == brute);
      CHECK(inv.total() == brute.size());

      // Maximals and the Frattini subalgebra from the element sets.
      std::vector<oracle::Space::Set> maximal;
      for (const auto& s : brute) {
        bool is_max = true;
        for (const auto& t : brute)
          if (s != t && oracle::Space::subset(s, t)) is_max = false;
        if (is_max) maximal.push_back(s);
      }
      // In dimension 1 the zero subalgebra is the only maximal one.
      if (L->dim() == 1) maximal.push_back(sp.zero_set());
      std::set<oracle::Space::Set> my_max;
      for (const auto& m : inv.maximals) my_max.insert(sp.of(m));
      CHECK(my_max == std::set<oracle::Space::Set>(maximal.begin(), maximal.end()));
      oracle::Space::Set fr(sp.size, true);
      for (const auto& m : maximal)
        for (int v = 0; v < sp.size; ++v) fr[v] = fr[v] && m[v];
      CHECK(sp.of(inv.frattini) == fr);
    }
  }
}

TEST_CASE("plane counts of the three-dimensional families") {
  for (int q : {2, 3, 5}) {
    auto f = Field::make(q);
    auto planes = [&](FamilySpec spec) { return enumerate_subalgebras(build_catalog(spec, f)).count(2); };
    CHECK(planes({FamilyId::abelian, 3}) == std::size_t(q * q + q + 1));
    CHECK(planes({FamilyId::heisenberg3}) == std::size_t(q + 1));
    CHECK(planes({FamilyId::solvable2B}) == std::size_t(2 * q + 1));
    CHECK(planes({FamilyId::case3_irreducible}) == 1u);
    if (q > 2) CHECK(planes({FamilyId::case3_two_eigen}) == std::size_t(1 + 2 * q));
    CHECK(planes({FamilyId::case3_jordan}) == std::size_t(1 + q));
    CHECK(planes({FamilyId::case3_scalar}) == std::size_t(1 + q + q * q));
    if (q > 2) CHECK(planes({FamilyId::sl2}) == std::size_t(q + 1));
  }
}

TEST_CASE("Frattini examples") {
  auto f3 = Field::make(3);
  CHECK(frattini(build_catalog({FamilyId::abelian, 3}, f3)).dim() == 0);
  CHECK(frattini(build_catalog({FamilyId::diam3_example}, Field::make(2))).dim() == 0);
  auto jordan = build_catalog({FamilyId::case3_jordan}, f3);
  CHECK(contains(frattini(jordan), line(jordan, {0, 1, 0})));
  auto heis = build_catalog({FamilyId::heisenberg3}, f3);
  CHECK(frattini(heis) == line(heis, {0, 0, 1}));
  auto dim1 = build_catalog({FamilyId::abelian, 1}, f3);
  CHECK(enumerate_subalgebras(dim1).total() == 0);
}

TEST_CASE("catalog parameters and errors") {
  auto f3 = Field::make(3);
  auto f2 = Field::make(2);
  FamilySpec bad{FamilyId::case3_irreducible};
  bad.matrix = Matrix2{f3->from_int(1), f3->zero(), f3->zero(), f3->from_int(2)};
  CHECK_THROWS_AS(build_catalog(bad, f3), Error);
  FamilySpec mu{FamilyId::case3_two_eigen};
  mu.mu = f3->one();
  CHECK_THROWS_AS(build_catalog(mu, f3), Error);
  FamilySpec lam{FamilyId::case3_jordan};
  lam.lambda = f3->zero();
  CHECK_THROWS_AS(build_catalog(lam, f3), Error);
  CHECK_THROWS_AS(build_catalog({FamilyId::case3_two_eigen}, f2), Error);
  CHECK_FALSE(default_two_eigen_mu(*f2).has_value());
  CHECK(parse_family("dim1")->n == 1);
  CHECK_FALSE(parse_family("nope").has_value());
  FamilySpec ab{FamilyId::abelian};
  CHECK_THROWS_AS(apply_param(ab, *f3, "n", "7"), Error);
  CHECK_THROWS_AS(apply_param(ab, *f3, "mu", "2"), Error);
  apply_param(ab, *f3, "n", "2");
  CHECK(ab.n == 2);

  auto heis = build_catalog({FamilyId::heisenberg3}, f2);
  CHECK(heis->dim() == 3);
  CHECK(heis->derived_dim() == 1);
  auto d3 = build_catalog({FamilyId::diam3_example}, f2);
  CHECK(d3->dim() == 4);
  CHECK(d3->derived_dim() == 2);
  auto su2 = build_catalog({FamilyId::su2}, f3);
  CHECK(su2->basis_bracket(0, 1)[2] == f3->one());
  CHECK(su2->basis_bracket(1, 2)[0] == f3->one());
  CHECK(su2->basis_bracket(2, 0)[1] == f3->one());
}

TEST_CASE("case3 matrices are classified and normalized") {
  auto f5 = Field::make(5);
  const Field& F = *f5;
  auto m = [&](int a, int b, int c, int d) { return Matrix2{F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d)}; };
  CHECK(classify_case3_matrix(F, m(2, 0, 0, 2)).kind == Case3Kind::scalar);
  CHECK(classify_case3_matrix(F, m(2, 1, 0, 2)).kind == Case3Kind::jordan);
  CHECK(classify_case3_matrix(F, m(1, 0, 0, 3)).kind == Case3Kind::two_eigen);
  CHECK(classify_case3_matrix(F, m(0, 1, 3, 0)).kind == Case3Kind::irreducible); // t^2 - 3, 3 nonsquare mod 5
  CHECK_THROWS_AS(classify_case3_matrix(F, m(1, 1, 1, 1)), Error);

  for (const auto& mat : {m(2, 0, 0, 2), m(2, 1, 0, 2), m(1, 2, 0, 3), m(3, 1, 1, 3), m(0, 1, 3, 0)}) {
    const auto built = build_case3_from_matrix(f5, mat);
    const auto planes = enumerate_subalgebras(built.algebra).count(2);
    switch (built.form.kind) {
      case Case3Kind::irreducible: CHECK(planes == 1u); break;
      case Case3Kind::two_eigen: CHECK(planes == 11u); break;
      case Case3Kind::jordan: CHECK(planes == 6u); break;
      case Case3Kind::scalar: CHECK(planes == 31u); break;
    }
  }
  // Eigenvalues 2 and 4 give mu = 4 / 2 = 2 after scaling x.
  const auto form = classify_case3_matrix(F, m(2, 0, 0, 4));
  CHECK(form.kind == Case3Kind::two_eigen);
  CHECK(form.parameter == F.from_int(2));
}

TEST_CASE("sl2 line classification") {
  auto f3 = Field::make(3);
  auto L = build_catalog({FamilyId::sl2}, f3);
  CHECK(classify_line_sl2(line(L, {0, 0, 1})) == LineKind::split);
  CHECK(classify_line_sl2(line(L, {1, 2, 0})) == LineKind::nonsplit);
  CHECK(classify_line_sl2(line(L, {1, 0, 0})) == LineKind::nilpotent);
  // Generator choice does not matter.
  CHECK(classify_line_sl2(line(L, {2, 1, 0})) == LineKind::nonsplit);
  CHECK_THROWS_AS(classify_line_sl2(Subspace::whole(L)), Error);
  auto even = build_catalog({FamilyId::sl2}, Field::make(2));
  CHECK_THROWS_AS(classify_line_sl2(line(even, {1, 0, 0})), Error);
  CHECK_THROWS_AS(borels_closed_form(even), Error);
  auto heis = build_catalog({FamilyId::heisenberg3}, f3);
  CHECK_THROWS_AS(classify_line_sl2(line(heis, {1, 0, 0})), Error);
}

TEST_CASE("sl2 counts, Borels and membership over F_3 and F_5") {
  for (int q : {3, 5}) {
    CAPTURE(q);
    auto f = Field::make(q);
    auto L = build_catalog({FamilyId::sl2}, f);
    const auto inv = enumerate_subalgebras(L);
    int nil = 0, split = 0, nonsplit = 0;
    for (const auto& s : inv.by_dim.at(1)) {
      switch (classify_line_sl2(s)) {
        case LineKind::nilpotent: ++nil; break;
        case LineKind::split: ++split; break;
        case LineKind::nonsplit: ++nonsplit; break;
        default: break;
      }
    }
    CHECK(nil == q + 1);
    CHECK(split == q * (q + 1) / 2);
    CHECK(nonsplit == q * (q - 1) / 2);

    auto closed = borels_closed_form(L);
    CHECK(closed.size() == std::size_t(q + 1));
    std::sort(closed.begin(), closed.end());
    // Brute-force 2-dim subalgebras from the element-set oracle.
    oracle::Space sp(L);
    std::set<oracle::Space::Set> brute2, mine2;
    for (const auto& s : sp.subalgebras())
      if (oracle::dim_of(sp, s) == 2) brute2.insert(s);
    for (const auto& b : closed) mine2.insert(sp.of(b));
    CHECK(mine2 == brute2);
    CHECK(closed == inv.by_dim.at(2));
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t j = i + 1; j < closed.size(); ++j) CHECK(intersection(closed[i], closed[j]).dim() == 1);

    for (const auto& s : inv.by_dim.at(1)) {
      const auto kind = classify_line_sl2(s);
      const int expected = kind == LineKind::nonsplit ? 0 : kind == LineKind::nilpotent ? 1 : 2;
      CHECK(borel_membership_count(s) == expected);
      CHECK(borel_membership_count_exhaustive(s, closed) == expected);
    }
    for (const auto& b : closed) {
      int n = 0, sp_lines = 0;
      for (const auto& s : inv.by_dim.at(1)) {
        if (!contains(b, s)) continue;
        if (classify_line_sl2(s) == LineKind::nilpotent) ++n;
        if (classify_line_sl2(s) == LineKind::split) ++sp_lines;
      }
      CHECK(n == 1);
      CHECK(sp_lines == q);
    }
  }
}

TEST_CASE("subalgebra enumeration is independent of the thread count") {
  auto L = build_catalog({FamilyId::diam3_example}, Field::make(3));
  setenv("COMAX_THREADS", "1", 1);
  const auto a = enumerate_subalgebras(L).all();
  setenv("COMAX_THREADS", "4", 1);
  const auto b = enumerate_subalgebras(L).all();
  unsetenv("COMAX_THREADS");
  CHECK(a == b);
  CHECK(worker_threads() >= 1u);
}
