#include <doctest.h>

#include <random>

#include "invsum/intset.hpp"

using namespace invsum;

TEST_CASE("parse_set reads ranges and singletons") {
  CHECK(parse_set("0,1,2,20-22") == IntSet{0, 1, 2, 20, 21, 22});
  const auto a = parse_set("0-13,26,52");
  CHECK(a.size() == 16);
  CHECK(a.min() == 0);
  CHECK(a.max() == 52);
  CHECK(a.contains(13));
  CHECK_FALSE(a.contains(14));
  CHECK(parse_set(" 3 , 1-2 ,1 ") == IntSet{1, 2, 3});
}

TEST_CASE("parse_set rejects bad input with an offset") {
  try {
    (void)parse_set("5-3");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 0);
  }
  try {
    (void)parse_set("0,1,x");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS((void)parse_set(""), ParseError);
  CHECK_THROWS_AS((void)parse_set("1,,2"), ParseError);
  CHECK_THROWS_AS((void)parse_set("-1"), ParseError);
  CHECK_THROWS_AS((void)parse_set("1-"), ParseError);
  CHECK_THROWS_AS((void)parse_set("0-999999999999"), ParseError);
}

TEST_CASE("render uses maximal runs") {
  CHECK(render(parse_set("0-13,26,52")) == "0-13,26,52");
  CHECK(render(IntSet{0, 1, 3}) == "0-1,3");
  CHECK(render(IntSet{7}) == "7");
}

TEST_CASE("normalize examples") {
  auto nf = normalize(IntSet{10, 12, 14});
  CHECK(nf.set == IntSet{0, 1, 2});
  CHECK(nf.shift == 10);
  CHECK(nf.scale == 2);
  CHECK_FALSE(nf.reflected);

  nf = normalize(IntSet{0, 2, 3});
  CHECK(nf.set == IntSet{0, 1, 3});
  CHECK(nf.reflected);

  nf = normalize(IntSet{7});
  CHECK(nf.set == IntSet{0});
  CHECK(nf.shift == 7);
  CHECK(nf.scale == 1);

  CHECK(normalize(IntSet{4, 9}).set == IntSet{0, 1});
  // palindromes keep reflected = false
  CHECK_FALSE(normalize(IntSet{0, 1, 3, 4}).reflected);
}

TEST_CASE("affine_equivalent examples") {
  CHECK(affine_equivalent(IntSet{0, 1, 3}, IntSet{0, 2, 3}));
  CHECK_FALSE(affine_equivalent(IntSet{0, 1, 3}, IntSet{0, 1, 2}));
  CHECK(affine_equivalent(IntSet{0, 1}, IntSet{100, 107}));
}

TEST_CASE("from_values rejects negatives and dedupes") {
  CHECK(IntSet::from_values({3, 1, 3, 2}) == IntSet{1, 2, 3});
  CHECK_THROWS_AS((void)IntSet::from_values({-1, 2}), std::domain_error);
  CHECK(IntSet::from_mask(0b1011) == IntSet{0, 1, 3});
  CHECK(IntSet::interval(2, 5) == IntSet{2, 3, 4, 5});
}

TEST_CASE("normalize is idempotent and affine invariant on random sets") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Value> val(0, 60);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_int_distribution<Value> p(-9, 9);
  std::uniform_int_distribution<Value> q(0, 1000);
  for (int t = 0; t < 2000; ++t) {
    std::vector<Value> v(static_cast<std::size_t>(size(rng)));
    for (auto& x : v) x = val(rng);
    const auto a = IntSet::from_values(v);
    const auto nf = normalize(a);
    CHECK(normalize(nf.set).set == nf.set);
    CHECK(nf.set.min() == 0);
    if (nf.set.size() >= 2) CHECK(difference_gcd(nf.set) == 1);

    Value pp = p(rng);
    if (pp == 0) pp = 1;
    const Value qq = q(rng) + (pp < 0 ? 9 * 60 : 0);
    const auto image = affine_image(a, pp, qq);
    CHECK(affine_equivalent(a, image));
    CHECK(parse_set(render(a)) == a);
  }
}

TEST_CASE("affine_image rejects negative results") {
  CHECK_THROWS((void)affine_image(IntSet{0, 5}, -1, 0));
}
