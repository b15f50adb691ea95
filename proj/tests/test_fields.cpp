#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "halfpoint/fields.hpp"

using namespace halfpoint;

TEST_CASE("field construction and error paths") {
  CHECK(Field::prime(5)->order() == 5);
  CHECK(Field::extension(3, 2, {1, 0, 1})->order() == 9);  // x^2+1 irreducible: -1 non-square mod 3
  CHECK_THROWS_AS(Field::prime(2), DomainError);
  CHECK_THROWS_AS(Field::prime(9), DomainError);
  CHECK_THROWS_AS(Field::extension(2, 2, {1, 1, 1}), DomainError);
  // x^2-1 = (x-1)(x+1) is reducible
  CHECK_THROWS_AS(Field::extension(3, 2, {2, 0, 1}), DomainError);
  // x^3-x-1 has no roots mod 3
  CHECK(Field::extension(3, 3, {2, 2, 0, 1})->order() == 27);

  try {
    Field::prime(2);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == Err::CharTwo);
  }
}

TEST_CASE("field spec parsing round-trips") {
  for (const char* s : {"Q", "Fp:7", "Fp:8191", "Fq:3^2:1,0,1", "Fq:5^2:2,0,1"}) {
    auto F = Field::parse(s);
    CHECK(Field::parse(F->spec())->sameField(*F));
  }
  CHECK(Field::parse("Fq:3^2")->order() == 9);
  CHECK_THROWS_AS(Field::parse("Fz:3"), DomainError);
}

TEST_CASE("basic arithmetic examples") {
  auto F7 = Field::prime(7);
  CHECK(F7->eq(F7->inv(F7->fromInt(3)), F7->fromInt(5)));  // 3*5 = 15 = 1 mod 7

  auto Q = Field::rationals();
  CHECK(Q->str(Q->fromRatio(2, 4)) == "1/2");
  CHECK(Q->str(Q->fromRatio(-3, -6)) == "1/2");
  CHECK(Q->str(Q->fromRatio(3, -6)) == "-1/2");
}

static void checkAxioms(const FieldPtr& F, std::mt19937& rng) {
  auto randomElem = [&]() {
    if (F->finite()) return F->elementAt(rng() % F->order());
    long long num = static_cast<long long>(rng() % 41) - 20;
    long long den = 1 + static_cast<long long>(rng() % 19);
    return F->fromRatio(num, den);
  };
  for (int trial = 0; trial < 50; ++trial) {
    Elem a = randomElem(), b = randomElem(), c = randomElem();
    CHECK(F->eq(F->add(a, F->add(b, c)), F->add(F->add(a, b), c)));
    CHECK(F->eq(F->mul(a, F->mul(b, c)), F->mul(F->mul(a, b), c)));
    CHECK(F->eq(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c))));
    CHECK(F->eq(F->add(a, b), F->add(b, a)));
    CHECK(F->eq(F->mul(a, b), F->mul(b, a)));
    CHECK(F->isZero(F->add(a, F->neg(a))));
    if (!F->isZero(a)) {
      CHECK(F->eq(F->mul(a, F->inv(a)), F->one()));
      CHECK(F->eq(F->div(b, a), F->mul(b, F->inv(a))));
    }
  }
  CHECK_THROWS_AS(F->inv(F->zero()), DomainError);
  CHECK_THROWS_AS(F->div(F->one(), F->zero()), DomainError);
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937 rng(12345);
  for (auto q : {3ull, 5ull, 7ull, 9ull, 13ull, 25ull, 27ull, 61ull, 101ull}) checkAxioms(Field::ofOrder(q), rng);
  checkAxioms(Field::rationals(), rng);
  checkAxioms(Field::prime(65537), rng);  // Tonelli-Shanks territory
}

TEST_CASE("sqrt examples and invariants") {
  auto F13 = Field::prime(13);
  auto r = F13->sqrt(F13->fromInt(10));
  REQUIRE(r.has_value());
  CHECK(F13->str(r->first) == "6");
  CHECK(F13->str(r->second) == "7");

  auto Q = Field::rationals();
  auto rq = Q->sqrt(Q->fromRatio(4, 9));
  REQUIRE(rq.has_value());
  CHECK(Q->str(rq->first) == "2/3");
  CHECK(Q->str(rq->second) == "-2/3");
  CHECK_FALSE(Q->sqrt(Q->fromInt(-4)).has_value());
  CHECK_FALSE(Q->sqrt(Q->fromRatio(2, 3)).has_value());

  auto F7 = Field::prime(7);
  CHECK_FALSE(F7->sqrt(F7->fromInt(3)).has_value());  // squares mod 7: {0,1,2,4}

  // sqrt(0) is the single root 0, listed twice
  auto z = F7->sqrt(F7->zero());
  REQUIRE(z.has_value());
  CHECK(F7->isZero(z->first));
  CHECK(F7->isZero(z->second));
}

TEST_CASE("sqrt completeness and square counts by enumeration") {
  for (auto q : {3ull, 5ull, 7ull, 9ull, 11ull, 13ull, 25ull, 27ull, 49ull, 61ull}) {
    auto F = Field::ofOrder(q);
    std::uint64_t squares = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
      Elem a = F->elementAt(i);
      auto r = F->sqrt(a);
      if (r) {
        ++squares;
        CHECK(F->eq(F->mul(r->first, r->first), a));
        CHECK(F->eq(F->mul(r->second, r->second), a));
        CHECK_FALSE(F->less(r->second, r->first));
      } else {
        for (std::uint64_t j = 0; j < q; ++j) {
          Elem x = F->elementAt(j);
          CHECK_FALSE(F->eq(F->mul(x, x), a));
        }
      }
    }
    CHECK(squares == (q + 1) / 2);
  }
}

TEST_CASE("Tonelli-Shanks agrees with exhaustive search") {
  auto small = Field::prime(8191);   // table path (q <= 8192)
  auto large = Field::prime(65537);  // TS path, p = 1 mod 4
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t v = rng() % 65537;
    Elem a = large->fromInt(static_cast<long long>(v));
    auto r = large->sqrt(a);
    if (r) CHECK(large->eq(large->mul(r->first, r->first), a));
  }
  for (int i = 0; i < 100; ++i) {
    std::uint64_t v = rng() % 8191;
    Elem a = small->fromInt(static_cast<long long>(v));
    auto r = small->sqrt(a);
    if (r) CHECK(small->eq(small->mul(r->first, r->first), a));
  }
}

TEST_CASE("enumeration is exhaustive and deterministic") {
  auto F5 = Field::prime(5);
  for (std::uint64_t i = 0; i < 5; ++i) CHECK(F5->indexOf(F5->elementAt(i)) == i);

  auto F9 = Field::ofOrder(9);
  CHECK(F9->order() == 9);
  for (std::uint64_t i = 0; i < 9; ++i) CHECK(F9->indexOf(F9->elementAt(i)) == i);

  CHECK_THROWS_AS(Field::rationals()->order(), DomainError);
  try {
    Field::rationals()->elementAt(0);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == Err::NotEnumerable);
  }
}

TEST_CASE("parse-print identity on every element") {
  for (auto q : {5ull, 9ull, 27ull}) {
    auto F = Field::ofOrder(q);
    for (std::uint64_t i = 0; i < q; ++i) {
      Elem a = F->elementAt(i);
      CHECK(F->eq(F->parseElem(F->str(a)), a));
    }
  }
  auto Q = Field::rationals();
  for (long long n = -6; n <= 6; ++n)
    for (long long d = 1; d <= 5; ++d) {
      Elem a = Q->fromRatio(n, d);
      CHECK(Q->eq(Q->parseElem(Q->str(a)), a));
    }
  // negative residues normalize
  auto F7 = Field::prime(7);
  CHECK(F7->eq(F7->parseElem("-4"), F7->fromInt(3)));
}

TEST_CASE("Fx operator wrapper") {
  auto F = Field::prime(11);
  Fx a(F, 7), b(F, 5);
  CHECK(a + b == Fx(F, 1));
  CHECK(a * b == Fx(F, 2));
  CHECK(a - b == Fx(F, 2));
  CHECK(a / b == Fx(F, 8));  // 5^-1 = 9, 7*9 = 63 = 8 mod 11
  CHECK(-a == Fx(F, 4));
  CHECK(2 * a - 3 == Fx(F, 0));
}
