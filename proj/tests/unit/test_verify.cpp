#include <doctest.h>

#include "../oracle.hpp"
#include "invsum/verify.hpp"

using namespace invsum;

TEST_CASE("canonical counts match the brute-force quotient") {
  const std::vector<std::size_t> golden{1, 2, 4, 8, 17, 33, 68, 134, 267, 528, 1055, 2087};
  for (Value m = 1; m <= 12; ++m) {
    CHECK(enumerate_canonical_masks(m).size() == golden[static_cast<std::size_t>(m - 1)]);
  }
  CHECK(enumerate_canonical(10).size() == 528);
}

TEST_CASE("canonical enumeration examples") {
  CHECK(enumerate_canonical(1) == std::vector<IntSet>{IntSet{0, 1}});
  std::vector<IntSet> max3;
  for (const auto& a : enumerate_canonical(3)) {
    if (a.max() == 3) max3.push_back(a);
  }
  CHECK(max3 == std::vector<IntSet>{IntSet{0, 1, 3}, IntSet{0, 1, 2, 3}});
}

TEST_CASE("every subset normalizes to exactly one representative") {
  for (Value m = 1; m <= 12; ++m) {
    std::set<oracle::Vec> got;
    for (const auto& a : enumerate_canonical(m)) {
      const auto v = oracle::values(a);
      CHECK(oracle::normal_form(v) == v);
      CHECK(got.insert(v).second);
    }
    CHECK(got == oracle::canonical_classes(m));
  }
}

TEST_CASE("for_each_canonical streams the same order and stops early") {
  std::vector<IntSet> seen;
  for_each_canonical(8, [&](const IntSet& a) {
    seen.push_back(a);
    return true;
  });
  CHECK(seen == enumerate_canonical(8));
  std::size_t n = 0;
  for_each_canonical(8, [&](const IntSet&) { return ++n < 10; });
  CHECK(n == 10);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS((void)enumerate_canonical_masks(12, 100), ResourceCeiling);
  CHECK_THROWS((void)enumerate_canonical_masks(kMaxEnumerableSpan + 1));
  CHECK(is_canonical_mask(0b1011, 3));
  CHECK_FALSE(is_canonical_mask(0b1101, 3));
  CHECK_FALSE(is_canonical_mask(0b10101, 4));
}

TEST_CASE("freiman_small_b examples") {
  auto v = check_freiman_small_b(IntSet{0, 1, 2, 4});
  CHECK(v.applicable);
  REQUIRE(v.holds);
  CHECK(*v.holds);
  REQUIRE(v.ap_witness);
  CHECK(v.ap_witness->length == 5);

  v = check_freiman_small_b(IntSet{0, 1, 2, 3});
  CHECK(v.applicable);
  CHECK(v.holds.value_or(false));

  v = check_freiman_small_b(IntSet{0, 1, 3, 4, 6});
  CHECK_FALSE(v.applicable);
  CHECK_FALSE(v.holds);
}

TEST_CASE("3k3 examples") {
  CHECK_FALSE(check_3k3(IntSet::interval(0, 6)).applicable);

  const IntSet odd{0, 1, 2, 3, 4, 5, 10};
  const auto vo = oracle::values(odd);
  const bool app = oracle::doubling(vo) == 3 * 7 - 3;
  CHECK(check_3k3(odd).applicable == app);

  const IntSet bp{0, 1, 3, 4, 6, 7, 9};
  auto v = check_3k3(bp);
  CHECK(v.applicable);
  CHECK(v.holds.value_or(false));
  CHECK(v.bp_witness);
  CHECK(v.exact_bp);
}

TEST_CASE("main examples") {
  CHECK_FALSE(check_main(parse_set("0-12,45,57")).applicable);
  CHECK_FALSE(check_main(parse_set("0,1,2,20-22,40-42")).applicable);
  CHECK_FALSE(check_main(IntSet::interval(0, 9)).applicable);

  // [0, k-4] ∪ {k, 2k}: b small, AP too long, no BP short enough?
  const auto a = parse_set("0-9,30");
  const auto f = SetFacts::of(a);
  const auto v = check_main(f);
  CHECK(v.applicable == (f.stats.deficiency_b >= 0 && 3 * f.stats.deficiency_b + 6 < f.stats.k));
  if (v.applicable) {
    const bool want = f.ap.length <= 2 * f.stats.k - 1 + 2 * f.stats.deficiency_b ||
                      (f.bp && f.bp->total_length() <= f.stats.k + f.stats.deficiency_b);
    CHECK(*v.holds == want);
  }
}

TEST_CASE("holds is set exactly when applicable") {
  for (const auto& a : enumerate_canonical(9)) {
    const auto f = SetFacts::of(a);
    for (ClaimId c : all_claims()) {
      const auto v = check(c, f, 3.3);
      CHECK(v.claim == c);
      CHECK(v.holds.has_value() == v.applicable);
    }
  }
}

TEST_CASE("claim names round-trip") {
  for (ClaimId c : all_claims()) CHECK(parse_claim(to_string(c)) == c);
  CHECK(to_string(ClaimId::three_k_three) == "3k3");
  CHECK_THROWS((void)parse_claim("nope"));
  CHECK_THROWS((void)check_weak_conjecture(SetFacts::of(IntSet{0, 1}), 3.5));
}

TEST_CASE("small sweeps find no violations of the proven theorems") {
  SweepOptions opts;
  opts.max_span = 12;
  opts.claims = {ClaimId::freiman_small_b, ClaimId::three_k_three, ClaimId::main};
  const auto s = sweep(opts);
  CHECK(s.sets == 2087);
  REQUIRE(s.claims.size() == 3);
  CHECK(s.claims[0].violations.empty());
  CHECK(s.claims[1].violations.empty());
  CHECK(s.claims[0].applicable > 0);
  CHECK(s.claims[1].applicable > 0);
  CHECK(s.claims[0].holds == s.claims[0].applicable);
  MESSAGE("main at span 12: applicable " << s.claims[2].applicable << ", violations "
                                         << s.claims[2].violations.size());
}

TEST_CASE("parallel sweep equals the serial reference") {
  SweepOptions opts;
  opts.max_span = 11;
  opts.claims = all_claims();
  const auto ref = sweep_serial(opts);
  for (int w : {1, 2, 4, 8}) {
    opts.workers = w;
    CHECK(sweep(opts) == ref);
  }
  CHECK(ref.sets == 1055);
}

TEST_CASE("sweep limits") {
  SweepOptions opts;
  opts.claims = {};
  CHECK_THROWS((void)sweep(opts));
  opts.claims = {ClaimId::main};
  opts.max_span = 14;
  opts.max_sets = 10;
  CHECK_THROWS_AS((void)sweep(opts), ResourceCeiling);
}

TEST_CASE("family members") {
  CHECK(ex12(3, 20) == parse_set("0,1,2,20-22,40-42"));
  CHECK(ex15(16) == parse_set("0-13,26,52"));
  CHECK(ex16(15) == parse_set("0-12,45,57"));
  CHECK_THROWS((void)ex12(3, 18));
  CHECK_THROWS((void)ex15(15));
  CHECK_THROWS((void)ex16(14));
}

TEST_CASE("family b identities hold on the table") {
  for (Family f : {Family::ex12, Family::ex15, Family::ex16}) {
    const auto rows = family_table(f, 150);
    CHECK_FALSE(rows.empty());
    for (const auto& r : rows) {
      CHECK(r.stats.deficiency_b == r.expected_b);
      if (f == Family::ex12) CHECK(r.expected_b == r.k / 3 - 2);
    }
  }
}

TEST_CASE("analyze composes the module results") {
  auto r = analyze(parse_set("0-12,45,57"));
  CHECK(r.stats.k == 15);
  CHECK(r.stats.deficiency_b == 11);
  REQUIRE(r.bp);
  CHECK(r.bp->total_length() == 26);
  CHECK(r.residues.size() == 6);
  CHECK(r.verdicts.size() == all_claims().size());

  r = analyze(IntSet::interval(0, 4));
  CHECK(r.stats.deficiency_b == -3);
  CHECK(r.ap.length == 5);
  CHECK_FALSE(r.verdicts.at(ClaimId::main).applicable);

  r = analyze(parse_set("0,1,2,20-22,40-42"));
  CHECK_FALSE(r.bp);
  CHECK(r.ap.length == 43);

  // works on the normal form
  r = analyze(IntSet{10, 12, 16});
  CHECK(r.normal_form.set == IntSet{0, 1, 3});
  CHECK(r.input == IntSet{10, 12, 16});
}

TEST_CASE("3k-2 footnote fixture") {
  const Value k = 10;
  std::vector<Value> v;
  for (Value x = 0; x <= k - 3; ++x) v.push_back(x);
  v.push_back(4 * k);
  v.push_back(4 * k + 2);
  const auto s = stats(IntSet::from_values(v));
  CHECK(s.doubling == 3 * k - 2);
}
