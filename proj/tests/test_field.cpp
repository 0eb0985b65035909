#include <doctest.h>

#include <random>

#include "maniplex/errors.hpp"
#include "maniplex/field.hpp"

using namespace maniplex;

TEST_CASE("modulus selection is the smallest monic irreducible") {
  CHECK(Field::make(5, 1).modulus() == std::vector<uint32_t>{0, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<uint32_t>{1, 0, 1});
  CHECK(Field::make(2, 2).modulus() == std::vector<uint32_t>{1, 1, 1});
  // deterministic across invocations
  CHECK(Field::make(7, 2).modulus() == Field::make(7, 2).modulus());
  CHECK(Field::make(2, 6).modulus() == Field::make(2, 6).modulus());
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(Field::make(6, 1), CompositeP);
  CHECK_THROWS_AS(Field::make(1, 1), CompositeP);
  CHECK_THROWS_AS(Field::make(5, 0), BadDegree);
}

TEST_CASE("basic arithmetic") {
  Field F13 = Field::make(13, 1);
  CHECK(F13.inv(3) == 9);
  CHECK(F13.neg(0) == 0);
  CHECK_THROWS_AS(F13.inv(0), DivisionByZero);

  // t * t = 2 in GF(9) with modulus t^2 + 1
  Field F9 = Field::make(3, 2);
  FieldElement t{{0, 1}};
  CHECK(F9.mul(t, t) == FieldElement{{2, 0}});
  CHECK(F9.neg(FieldElement{{0, 0}}) == FieldElement{{0, 0}});
}

TEST_CASE("square roots of -1") {
  auto root = [](uint32_t p, uint32_t k) { return Field::make(p, k).sqrt_minus_one(); };
  CHECK(root(13, 1).value() == 5);
  CHECK(root(5, 1).value() == 2);
  CHECK_FALSE(root(7, 1).has_value());
  // GF(9): t has t^2 = -1 and the smallest coefficient list
  Field F9 = Field::make(3, 2);
  CHECK(F9.decode(F9.sqrt_minus_one().value()) == FieldElement{{0, 1}});
}

TEST_CASE("square root of -1 exists iff q = 1 (mod 4) or p = 2, q <= 121") {
  const std::pair<uint32_t, uint32_t> fields[] = {
      {2, 1}, {3, 1},  {2, 2}, {5, 1},  {7, 1},  {2, 3},  {3, 2},  {11, 1}, {13, 1}, {2, 4},
      {17, 1}, {19, 1}, {23, 1}, {5, 2},  {3, 3}, {29, 1}, {31, 1}, {2, 5},  {37, 1}, {41, 1},
      {43, 1}, {47, 1}, {7, 2},  {53, 1}, {59, 1}, {61, 1}, {2, 6},  {67, 1}, {71, 1}, {73, 1},
      {79, 1}, {3, 4},  {83, 1}, {89, 1}, {97, 1}, {101, 1}, {103, 1}, {107, 1}, {109, 1},
      {113, 1}, {11, 2}};
  for (auto [p, k] : fields) {
    Field F = Field::make(p, k);
    const uint32_t q = F.order();
    auto a = F.sqrt_minus_one();
    const bool expected = (q % 4 == 1) || p == 2;
    INFO("q = ", q);
    CHECK(a.has_value() == expected);
    if (a) CHECK(F.mul(*a, *a) == F.neg(F.one()));
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(42);
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{13, 1}, {3, 2}, {2, 3}, {5, 2}}) {
    Field F = Field::make(p, k);
    std::uniform_int_distribution<uint32_t> pick(0, F.order() - 1);
    for (int t = 0; t < 300; ++t) {
      uint32_t x = pick(rng), y = pick(rng), z = pick(rng);
      CHECK(F.add(x, y) == F.add(y, x));
      CHECK(F.mul(x, y) == F.mul(y, x));
      CHECK(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
      CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
      CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
      CHECK(F.add(x, F.neg(x)) == F.zero());
      if (x != 0) CHECK(F.mul(x, F.inv(x)) == F.one());
    }
  }
}

TEST_CASE("multiplicative group has order q - 1") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                      {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}, {5, 2}, {3, 3}, {7, 2}}) {
    Field F = Field::make(p, k);
    for (uint32_t x = 1; x < F.order(); ++x) CHECK(F.pow(x, F.order() - 1) == F.one());
  }
}

TEST_CASE("coefficient list round trip") {
  Field F = Field::make(3, 3);
  for (uint32_t x = 0; x < F.order(); ++x) CHECK(F.encode(F.decode(x)) == x);
  CHECK_THROWS_AS(F.encode(FieldElement{{1, 2}}), PreconditionFailed);
  CHECK_THROWS_AS(F.encode(FieldElement{{3, 0, 0}}), PreconditionFailed);
}
