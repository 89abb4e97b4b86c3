#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "invsum/structure.hpp"
#include "invsum/sumset.hpp"

using namespace invsum;

TEST_CASE("residue_decomposition examples") {
  auto r = residue_decomposition(IntSet{0, 2, 4, 6}, 2);
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].residue == 0);
  CHECK(r.classes[0].fullness(2) == doctest::Approx(1.0));

  r = residue_decomposition(IntSet{0, 1, 3, 4, 6}, 3);
  REQUIRE(r.classes.size() == 2);
  CHECK(r.classes[0].residue == 0);
  CHECK(r.classes[0].members == IntSet{0, 3, 6});
  CHECK(r.classes[1].residue == 1);
  CHECK(r.classes[1].members == IntSet{1, 4});
  CHECK(r.full(0.0));

  r = residue_decomposition(IntSet{0, 4, 6}, 2);
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].fullness(2) == doctest::Approx(0.75));
  CHECK_FALSE(r.full(0.05));
  CHECK(r.full(0.25));

  CHECK_THROWS((void)residue_decomposition(IntSet{0, 1}, 0));
}

TEST_CASE("residue classes partition the set") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<Value> val(0, 200);
  for (int t = 0; t < 200; ++t) {
    std::vector<Value> v;
    for (int i = 0; i < 30; ++i) v.push_back(val(rng));
    const auto a = IntSet::from_values(v);
    for (Value d = 1; d <= 7; ++d) {
      const auto r = residue_decomposition(a, d);
      std::vector<Value> back;
      for (const auto& c : r.classes) {
        CHECK(c.fullness(d) > 0.0);
        CHECK(c.fullness(d) <= 1.0);
        for (Value x : c.members) {
          CHECK(x % d == c.residue);
          back.push_back(x);
        }
        CHECK(c.lo == c.members.min());
        CHECK(c.hi == c.members.max());
      }
      CHECK(IntSet::from_values(back) == a);
      CHECK(back.size() == a.size());
    }
  }
}

TEST_CASE("triangle_profile examples") {
  CHECK(triangle_profile(IntSet::interval(0, 10), 0, 20, 0.05).kind == TriangleKind::forward);
  CHECK(triangle_profile(IntSet::interval(10, 20), 0, 20, 0.05).kind == TriangleKind::backward);
  std::vector<Value> evens;
  for (Value x = 0; x <= 20; x += 2) evens.push_back(x);
  CHECK(triangle_profile(IntSet::from_values(evens), 0, 20, 0.05).kind == TriangleKind::neither);

  CHECK_THROWS((void)triangle_profile(IntSet{0, 1}, 5, 5, 0.05));
  CHECK_THROWS((void)triangle_profile(IntSet{0, 1}, 0, 5, 0.3));
  CHECK_THROWS((void)triangle_profile(IntSet{0, 1}, 0, 5, 0.0));
}

TEST_CASE("triangle reflection duality") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<Value> val(0, 60);
  int forward = 0;
  for (int t = 0; t < 3000; ++t) {
    std::vector<Value> v;
    const int n = 5 + t % 40;
    for (int i = 0; i < n; ++i) v.push_back(t % 2 ? val(rng) : val(rng) / 2);
    v.push_back(0);
    v.push_back(60);
    const auto a = IntSet::from_values(v);
    const auto fwd = triangle_profile(a, 0, 60, 0.05).kind;
    const auto back = triangle_profile(reflect(a), 0, 60, 0.05).kind;
    CHECK((fwd == TriangleKind::forward) == (back == TriangleKind::backward));
    CHECK((fwd == TriangleKind::backward) == (back == TriangleKind::forward));
    forward += fwd == TriangleKind::forward;
  }
  CHECK(forward > 0);
}

TEST_CASE("forward triangles fill most of the middle of their sumset") {
  // Dense head, sparse tail; only sets classified forward are checked.
  std::mt19937_64 rng(31);
  const double theta = 0.05;
  int tested = 0;
  for (int t = 0; t < 400 && tested < 60; ++t) {
    const Value span = 200 + static_cast<Value>(rng() % 400);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double knee = 0.38 + 0.1 * unit(rng);
    std::vector<Value> v{0, span};
    for (Value x = 1; x < span; ++x) {
      const double pos = static_cast<double>(x) / static_cast<double>(span);
      const double p = pos < knee ? 0.95 : 0.2;
      if (unit(rng) < p) v.push_back(x);
    }
    const auto a = IntSet::from_values(v);
    const auto verdict = triangle_profile(a, 0, span, theta);
    if (verdict.kind != TriangleKind::forward) continue;
    ++tested;
    const auto two_a = sumset(a, a);
    const auto lo = static_cast<Value>(std::ceil(theta * static_cast<double>(span)));
    const auto hi = static_cast<Value>(std::floor(static_cast<double>(span) * (1.0 - theta)));
    // longest run of consecutive sums inside [lo, hi]
    Value best = 0, run = 0;
    for (Value x = lo; x <= hi; ++x) {
      run = two_a.contains(x) ? run + 1 : 0;
      best = std::max(best, run);
    }
    CHECK(static_cast<double>(best) >= (1.0 - 4 * theta) * static_cast<double>(hi - lo + 1));
  }
  CHECK(tested >= 20);
}
