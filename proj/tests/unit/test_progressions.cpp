#include <doctest.h>

#include <random>

#include "../oracle.hpp"
#include "invsum/progressions.hpp"
#include "invsum/sumset.hpp"
#include "invsum/verify.hpp"

using namespace invsum;

TEST_CASE("ap_cover examples") {
  CHECK(ap_cover(parse_set("0-13,26,52")) == ApWindow{0, 1, 53});
  CHECK(ap_cover(IntSet{10, 14, 22}) == ApWindow{10, 4, 4});
  CHECK(ap_cover(IntSet{0, 1}) == ApWindow{0, 1, 2});
  CHECK(ap_cover(IntSet{5}) == ApWindow{5, 1, 1});
}

TEST_CASE("ap_cover is minimal among all containing progressions") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Value> val(0, 24);
  for (int t = 0; t < 300; ++t) {
    std::vector<Value> v{val(rng), val(rng), val(rng), val(rng)};
    const auto a = IntSet::from_values(v);
    if (a.size() < 2) continue;
    const auto w = ap_cover(a);
    for (Value x : a) CHECK(w.contains(x));
    for (Value d = 1; d <= a.span(); ++d) {
      for (Value s = a.min() - 2 * d; s <= a.min(); ++s) {
        if (s < 0) continue;
        for (Value len = 1; len < w.length; ++len) {
          const ApWindow cand{s, d, len};
          bool all = true;
          for (Value x : a) all = all && cand.contains(x);
          CHECK_FALSE(all);
        }
      }
    }
  }
}

TEST_CASE("is_valid_bp examples") {
  CHECK(is_valid_bp(ApWindow{0, 1, 13}, ApWindow{45, 1, 13}));
  CHECK(is_valid_bp(ApWindow{0, 3, 3}, ApWindow{1, 3, 2}));
  CHECK_FALSE(is_valid_bp(ApWindow{0, 1, 3}, ApWindow{20, 1, 23}));
  CHECK_THROWS_AS((void)is_valid_bp(ApWindow{0, 1, 3}, ApWindow{20, 2, 3}), std::invalid_argument);
}

TEST_CASE("is_valid_bp agrees with materialized sumsets") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Value> start(0, 30), diff(1, 6), len(1, 8);
  for (int t = 0; t < 20000; ++t) {
    const Value d = diff(rng);
    const ApWindow i{start(rng), d, len(rng)};
    const ApWindow j{start(rng), d, len(rng)};
    CHECK(is_valid_bp(i, j) == oracle::valid_bp(i, j));
  }
}

TEST_CASE("bp_cover examples") {
  auto c = bp_cover(parse_set("0-12,45,57"));
  REQUIRE(c);
  CHECK(c->total_length() == 26);

  c = bp_cover(IntSet{0, 1, 3, 4, 6});
  REQUIRE(c);
  CHECK(c->i == ApWindow{0, 3, 3});
  CHECK(c->j == ApWindow{1, 3, 2});
  CHECK(c->total_length() == 5);

  CHECK_FALSE(bp_cover(parse_set("0,1,2,20-22,40-42")));
  CHECK_FALSE(bp_cover(IntSet{4}));

  c = bp_cover(IntSet{0, 1});
  REQUIRE(c);
  CHECK(c->total_length() == 2);
  CHECK(c->has_singleton_part());
}

TEST_CASE("bp_cover_within examples") {
  const auto a = parse_set("0-12,45,57");
  auto c = bp_cover_within(a, 26);
  REQUIRE(c);
  CHECK(c->total_length() <= 26);
  CHECK_FALSE(bp_cover_within(a, 25));
  CHECK(bp_cover_within(IntSet{0, 1, 3, 4, 6}, 5));
}

TEST_CASE("bp_cover matches the unpruned oracle on all canonical sets up to span 9") {
  for (const auto& a : enumerate_canonical(9)) {
    const auto got = bp_cover(a);
    const auto want = oracle::bp_cover(oracle::values(a));
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->i == want->i);
      CHECK(got->j == want->j);
    }
  }
}

TEST_CASE("bp covers are affine covariant in length") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Value> val(0, 20);
  for (int t = 0; t < 200; ++t) {
    std::vector<Value> v;
    for (int i = 0; i < 6; ++i) v.push_back(val(rng));
    const auto a = IntSet::from_values(v);
    const auto img = affine_image(a, 3, 11);
    const auto c1 = bp_cover(a);
    const auto c2 = bp_cover(img);
    REQUIRE(c1.has_value() == c2.has_value());
    if (c1) CHECK(c1->total_length() == c2->total_length());
    CHECK(ap_cover(a).length == ap_cover(img).length);
  }
}

TEST_CASE("a materialized BP has 3(|I|+|J|) - 3 sums") {
  for (const auto& a : enumerate_canonical(10)) {
    const auto c = bp_cover(a);
    if (!c || c->has_singleton_part()) continue;
    std::vector<Value> v;
    for (Value x : c->i.materialize()) v.push_back(x);
    for (Value x : c->j.materialize()) v.push_back(x);
    const auto b = IntSet::from_values(v);
    CHECK(static_cast<Value>(sumset(b, b).size()) == 3 * c->total_length() - 3);
  }
}
