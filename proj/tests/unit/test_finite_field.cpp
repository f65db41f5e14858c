#include "comax/finite_field.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace comax;

namespace {

const std::vector<std::pair<int, int>> kSmallFields = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}};

} // namespace

TEST_CASE("field construction") {
  auto f3 = Field::make(3);
  CHECK(f3->order() == 3);
  CHECK(f3->is_prime_field());

  auto f4 = Field::make(2, 2, std::vector<int>{1, 1, 1});
  CHECK(f4->order() == 4);
  CHECK(f4->modulus() == std::vector<int>{1, 1});

  auto f9 = Field::make(3, 2);
  CHECK(f9->modulus() == std::vector<int>{1, 0}); // t^2 + 1
  CHECK(Field::make(2, 3)->modulus() == std::vector<int>{1, 1, 0}); // t^3 + t + 1

  CHECK_THROWS_AS(Field::make(4), Error);
  CHECK_THROWS_AS(Field::make(3, 0), Error);
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<int>{2, 0, 1}), Error); // t^2 + 2 = (t+1)(t+2)
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<int>{1, 0}), Error);    // t^2 + 1 = (t+1)^2
}

TEST_CASE("auto-selected modulus is the first irreducible in code order") {
  for (auto [p, k] : kSmallFields) {
    if (k == 1) continue;
    auto f = Field::make(p, k);
    CHECK(oracle::irreducible_exhaustive(p, f->modulus()));
    // No earlier candidate in code order (high coefficient most significant) is irreducible.
    int code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * p + f->modulus()[i];
    for (int c = 0; c < code; ++c) {
      std::vector<int> low(k);
      for (int i = 0, r = c; i < k; ++i, r /= p) low[i] = r % p;
      CHECK_FALSE(oracle::irreducible_exhaustive(p, low));
    }
  }
}

TEST_CASE("designations") {
  CHECK(Field::from_designation("3")->order() == 3);
  CHECK(Field::from_designation("2^2")->order() == 4);
  CHECK(Field::from_designation("4")->designation() == "2^2");
  CHECK(Field::from_designation("9")->designation() == "3^2");
  CHECK_THROWS_AS(Field::from_designation("6"), Error);
  CHECK_THROWS_AS(Field::from_designation("x"), Error);
}

TEST_CASE("small arithmetic examples") {
  auto f3 = Field::make(3);
  CHECK(f3->mul(Elem{2}, Elem{2}) == Elem{1});
  auto f5 = Field::make(5);
  CHECK(f5->inv(Elem{2}) == Elem{3});
  auto f4 = Field::make(2, 2);
  const Elem t = f4->parse("1*t");
  CHECK(f4->format(f4->mul(t, t)) == "1+1*t");
  CHECK_THROWS_AS(f5->inv(Elem{0}), Error);
}

TEST_CASE("multiplication matches polynomial arithmetic") {
  for (auto [p, k] : kSmallFields) {
    auto f = Field::make(p, k);
    const std::vector<int> mod = k == 1 ? std::vector<int>{} : f->modulus();
    for (Elem a : f->elements()) {
      for (Elem b : f->elements()) {
        auto expected = oracle::poly_mulmod(p, mod, f->coeffs(a), f->coeffs(b));
        CHECK(f->coeffs(f->mul(a, b)) == expected);
        std::vector<int> sum(k);
        for (int i = 0; i < k; ++i) sum[i] = (f->coeffs(a)[i] + f->coeffs(b)[i]) % p;
        CHECK(f->coeffs(f->add(a, b)) == sum);
      }
    }
  }
}

TEST_CASE("field axioms and Frobenius") {
  for (auto [p, k] : kSmallFields) {
    auto f = Field::make(p, k);
    for (Elem a : f->elements()) {
      CHECK(f->add(a, f->neg(a)) == f->zero());
      if (a.code != 0) CHECK(f->mul(a, f->inv(a)) == f->one());
      for (Elem b : f->elements()) {
        CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
        if (b.code != 0) CHECK(f->mul(f->div(a, b), b) == a);
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic") {
  for (auto [p, k] : kSmallFields) {
    auto f = Field::make(p, k);
    const int q = f->order();
    bool found = false;
    for (Elem g : f->elements()) {
      if (g.code == 0) continue;
      int order = 1;
      for (Elem x = g; x != f->one(); x = f->mul(x, g)) ++order;
      if (order == q - 1) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("Euler criterion agrees with exhaustive squaring") {
  for (auto [p, k] : kSmallFields) {
    auto f = Field::make(p, k);
    if (!f->is_odd()) {
      CHECK_THROWS_AS(f->is_square(f->one()), Error);
      continue;
    }
    const auto squares = oracle::squares_exhaustive(*f);
    int nonzero = 0;
    for (Elem a : f->elements()) {
      CHECK(f->is_square(a) == (squares.count(a) == 1));
      if (a.code && f->is_square(a)) ++nonzero;
    }
    CHECK(nonzero == (f->order() - 1) / 2);
  }
  auto f3 = Field::make(3);
  CHECK(f3->is_square(Elem{1}));
  CHECK_FALSE(f3->is_square(Elem{2}));
  CHECK(Field::make(5)->is_square(Elem{4}));
}

TEST_CASE("element enumeration order and formatting") {
  auto f4 = Field::make(2, 2);
  std::vector<std::string> names;
  for (const auto& e : enumerate_elements(f4)) names.push_back(e.to_string());
  CHECK(names == std::vector<std::string>{"0+0*t", "1+0*t", "0+1*t", "1+1*t"});
  auto f3 = Field::make(3);
  CHECK(enumerate_elements(f3).size() == 3);
  CHECK(enumerate_elements(f3)[2].to_string() == "2");
  for (Elem a : f4->elements()) CHECK(f4->parse(f4->format(a)) == a);
  CHECK(f3->parse("-1") == Elem{2});
  CHECK_THROWS_AS(f3->parse("1*t"), Error);
}

TEST_CASE("FieldElement wrapper rejects mixed fields") {
  auto f3 = Field::make(3);
  auto f5 = Field::make(5);
  FieldElement a(f3, 2), b(f3, 2), c(f5, 1);
  CHECK((a * b).value() == Elem{1});
  CHECK((a + b).value() == Elem{1});
  CHECK((-a).value() == Elem{1});
  CHECK_THROWS_AS(a + c, Error);
  // Equal parameters make equal fields even across separate constructions.
  FieldElement d(Field::make(3), 1);
  CHECK((a * b) == d);
}
