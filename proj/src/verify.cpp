#include "invsum/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>

namespace invsum {

std::string_view to_string(ClaimId c) {
  switch (c) {
    case ClaimId::freiman_small_b: return "freiman_small_b";
    case ClaimId::three_k_three: return "3k3";
    case ClaimId::main: return "main";
    case ClaimId::bp_subset: return "bp_subset";
    case ClaimId::weak_conjecture: return "weak_conjecture";
  }
  return "?";
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> claims = {ClaimId::freiman_small_b, ClaimId::three_k_three,
                                              ClaimId::main, ClaimId::bp_subset,
                                              ClaimId::weak_conjecture};
  return claims;
}

ClaimId parse_claim(std::string_view name) {
  for (ClaimId c : all_claims()) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
}

SetFacts SetFacts::of(const IntSet& a, const SumsetConfig& cfg) {
  SetFacts f;
  f.set = a;
  f.stats = invsum::stats(a, cfg);
  f.ap = ap_cover(a);
  f.bp = bp_cover(a);
  return f;
}

namespace {

// 0 <= b < k/3 - 2, in integers.
bool in_conjecture_range(const SumsetStats& s) {
  return s.deficiency_b >= 0 && 3 * s.deficiency_b + 6 < s.k;
}

bool ap_within(const SetFacts& f, Value budget) { return f.ap.length <= budget; }

bool bp_within(const SetFacts& f, Value budget) {
  return f.bp && f.bp->total_length() <= budget;
}

// Shared outcome of main, bp_subset and weak_conjecture.
void conclude_two_budgets(const SetFacts& f, Verdict& v) {
  const auto k = f.stats.k;
  const auto b = f.stats.deficiency_b;
  const bool ap_ok = ap_within(f, 2 * k - 1 + 2 * b);
  const bool bp_ok = bp_within(f, k + b);
  v.holds = ap_ok || bp_ok;
  v.ap_witness = f.ap;
  v.bp_witness = f.bp;
}

}  // namespace

bool structured_within_conjecture_budgets(const SetFacts& f) {
  const auto k = f.stats.k;
  const auto b = f.stats.deficiency_b;
  return ap_within(f, 2 * k - 1 + 2 * b) || bp_within(f, k + b);
}

Verdict check_freiman_small_b(const SetFacts& f) {
  Verdict v;
  v.claim = ClaimId::freiman_small_b;
  const auto& s = f.stats;
  v.applicable = s.k > 3 && s.doubling < 3 * s.k - 3;
  if (v.applicable) {
    v.holds = ap_within(f, s.k + s.b2);
    v.ap_witness = f.ap;
  }
  return v;
}

Verdict check_3k3(const SetFacts& f) {
  Verdict v;
  v.claim = ClaimId::three_k_three;
  const auto& s = f.stats;
  v.applicable = s.k > 6 && s.doubling == 3 * s.k - 3;
  if (v.applicable) {
    v.holds = ap_within(f, 2 * s.k - 1) || f.bp.has_value();
    v.ap_witness = f.ap;
    v.bp_witness = f.bp;
    v.exact_bp = f.bp && f.bp->total_length() == s.k;
  }
  return v;
}

Verdict check_main(const SetFacts& f) {
  Verdict v;
  v.claim = ClaimId::main;
  v.applicable = in_conjecture_range(f.stats);
  if (v.applicable) conclude_two_budgets(f, v);
  return v;
}

Verdict check_bp_subset(const SetFacts& f) {
  Verdict v;
  v.claim = ClaimId::bp_subset;
  v.applicable = f.bp.has_value() && f.stats.k > 10 && in_conjecture_range(f.stats);
  if (v.applicable) {
    v.holds = bp_within(f, f.stats.k + f.stats.deficiency_b);
    v.bp_witness = f.bp;
  }
  return v;
}

Verdict check_weak_conjecture(const SetFacts& f, double alpha) {
  if (!(alpha > 3.0 && alpha < 10.0 / 3.0)) {
    throw std::invalid_argument("alpha must lie in (3, 10/3)");
  }
  Verdict v;
  v.claim = ClaimId::weak_conjecture;
  const auto& s = f.stats;
  v.applicable = s.deficiency_b >= 0 &&
                 static_cast<double>(s.doubling) <= alpha * static_cast<double>(s.k);
  if (v.applicable) conclude_two_budgets(f, v);
  return v;
}

Verdict check(ClaimId claim, const SetFacts& f, double alpha) {
  switch (claim) {
    case ClaimId::freiman_small_b: return check_freiman_small_b(f);
    case ClaimId::three_k_three: return check_3k3(f);
    case ClaimId::main: return check_main(f);
    case ClaimId::bp_subset: return check_bp_subset(f);
    case ClaimId::weak_conjecture: return check_weak_conjecture(f, alpha);
  }
  throw std::logic_error("unhandled claim");
}

Verdict check_freiman_small_b(const IntSet& a) { return check_freiman_small_b(SetFacts::of(a)); }
Verdict check_3k3(const IntSet& a) { return check_3k3(SetFacts::of(a)); }
Verdict check_main(const IntSet& a) { return check_main(SetFacts::of(a)); }

StructureReport analyze(const IntSet& a, const AnalyzeOptions& opts) {
  StructureReport r;
  r.input = a;
  r.theta = opts.theta;
  r.alpha = opts.alpha;
  r.normal_form = normalize(a);
  const auto facts = SetFacts::of(r.normal_form.set, opts.sumset);
  r.stats = facts.stats;
  r.ap = facts.ap;
  r.bp = facts.bp;
  for (ClaimId c : all_claims()) r.verdicts[c] = check(c, facts, opts.alpha);
  for (Value d = 1; d <= opts.max_residue_modulus; ++d) {
    r.residues.push_back(residue_decomposition(r.normal_form.set, d));
  }
  const auto& s = r.normal_form.set;
  if (s.max() > s.min()) {
    r.triangle = triangle_profile(s, s.min(), s.max(), opts.theta);
  } else {
    r.triangle = TriangleVerdict{TriangleKind::neither, s.min(), s.max(), opts.theta};
  }
  return r;
}

// ---------------------------------------------------------------------------

bool is_canonical_mask(std::uint64_t mask, Value m) {
  Value g = 0;
  for (std::uint64_t w = mask & (mask - 1); w != 0 && g != 1; w &= w - 1) {
    g = std::gcd(g, static_cast<Value>(std::countr_zero(w)));
  }
  if (g != 1) return false;
  // Reverse the low m+1 bits.
  std::uint64_t rev = 0;
  for (std::uint64_t w = mask; w != 0; w &= w - 1) {
    rev |= std::uint64_t{1} << (m - std::countr_zero(w));
  }
  const std::uint64_t diff = mask ^ rev;
  // The smaller sorted sequence holds the lowest element of the symmetric difference.
  return diff == 0 || (mask & diff & -diff) != 0;
}

namespace {

template <class Visit>
void visit_masks(Value max_span, Visit&& visit) {
  if (max_span < 1) throw std::invalid_argument("max_span must be at least 1");
  if (max_span > kMaxEnumerableSpan) {
    throw ResourceCeiling("max_span above " + std::to_string(kMaxEnumerableSpan) +
                          " cannot be enumerated");
  }
  for (Value m = 1; m <= max_span; ++m) {
    const std::uint64_t ends = 1U | (std::uint64_t{1} << m);
    const std::uint64_t inner_count = std::uint64_t{1} << (m - 1);
    for (std::uint64_t inner = 0; inner < inner_count; ++inner) {
      const std::uint64_t mask = ends | (inner << 1);
      if (is_canonical_mask(mask, m) && !visit(mask)) return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> enumerate_canonical_masks(Value max_span, std::size_t max_sets) {
  std::vector<std::uint64_t> out;
  visit_masks(max_span, [&](std::uint64_t mask) {
    if (out.size() == max_sets) {
      throw ResourceCeiling("more than " + std::to_string(max_sets) + " canonical sets");
    }
    out.push_back(mask);
    return true;
  });
  return out;
}

std::vector<IntSet> enumerate_canonical(Value max_span, std::size_t max_sets) {
  std::vector<IntSet> out;
  for (auto mask : enumerate_canonical_masks(max_span, max_sets)) {
    out.push_back(IntSet::from_mask(mask));
  }
  return out;
}

void for_each_canonical(Value max_span, const std::function<bool(const IntSet&)>& visit) {
  visit_masks(max_span, [&](std::uint64_t mask) { return visit(IntSet::from_mask(mask)); });
}

// ---------------------------------------------------------------------------

std::size_t SweepSummary::total_violations() const noexcept {
  std::size_t n = 0;
  for (const auto& c : claims) n += c.violations.size();
  return n;
}

namespace {

struct SetOutcome {
  std::vector<Verdict> verdicts;  // parallel to the claim list
  SetFacts facts;
};

SetOutcome evaluate(const IntSet& a, const SweepOptions& opts) {
  SetOutcome o;
  o.facts = SetFacts::of(a);
  o.verdicts.reserve(opts.claims.size());
  for (ClaimId c : opts.claims) o.verdicts.push_back(check(c, o.facts, opts.alpha));
  return o;
}

void accumulate(SweepSummary& s, const SetOutcome& o) {
  ++s.sets;
  for (std::size_t i = 0; i < o.verdicts.size(); ++i) {
    const auto& v = o.verdicts[i];
    auto& c = s.claims[i];
    if (!v.applicable) continue;
    ++c.applicable;
    if (v.exact_bp) ++c.exact_bp;
    if (*v.holds) {
      ++c.holds;
      continue;
    }
    Violation viol;
    viol.set = o.facts.set;
    viol.k = o.facts.stats.k;
    viol.b = o.facts.stats.deficiency_b;
    viol.ap_len = o.facts.ap.length;
    if (o.facts.bp) viol.bp_len = o.facts.bp->total_length();
    c.violations.push_back(std::move(viol));
  }
}

SweepSummary empty_summary(const SweepOptions& opts) {
  if (opts.claims.empty()) throw std::invalid_argument("sweep needs at least one claim");
  SweepSummary s;
  s.max_span = opts.max_span;
  for (ClaimId c : opts.claims) {
    ClaimSummary cs;
    cs.claim = c;
    s.claims.push_back(std::move(cs));
  }
  return s;
}

}  // namespace

SweepSummary sweep(const SweepOptions& opts) {
  auto summary = empty_summary(opts);
  const auto masks = enumerate_canonical_masks(opts.max_span, opts.max_sets);
  std::vector<SetOutcome> outcomes(masks.size());
  const auto n = static_cast<std::int64_t>(masks.size());
  const int workers = std::max(1, opts.workers);

#pragma omp parallel for schedule(dynamic, 128) num_threads(workers)
  for (std::int64_t i = 0; i < n; ++i) {
    outcomes[static_cast<std::size_t>(i)] =
        evaluate(IntSet::from_mask(masks[static_cast<std::size_t>(i)]), opts);
  }

  for (const auto& o : outcomes) accumulate(summary, o);
  return summary;
}

SweepSummary sweep_serial(const SweepOptions& opts) {
  auto summary = empty_summary(opts);
  for_each_canonical(opts.max_span, [&](const IntSet& a) {
    if (summary.sets == opts.max_sets) {
      throw ResourceCeiling("more than " + std::to_string(opts.max_sets) + " canonical sets");
    }
    accumulate(summary, evaluate(a, opts));
    return true;
  });
  return summary;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
    case Family::ex12: return "ex12";
    case Family::ex15: return "ex15";
    case Family::ex16: return "ex16";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "ex12") return Family::ex12;
  if (name == "ex15") return Family::ex15;
  if (name == "ex16") return Family::ex16;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

IntSet ex12(Value a, Value c) {
  if (a < 1) throw std::invalid_argument("ex12 needs a >= 1");
  if (c <= 6 * a) throw std::invalid_argument("ex12 needs c > 2k = 6a");
  std::vector<Value> v;
  for (Value block = 0; block < 3; ++block) {
    for (Value t = 0; t < a; ++t) v.push_back(block * c + t);
  }
  return IntSet::from_values(std::move(v));
}

IntSet ex15(Value k) {
  if (k <= 15) throw std::invalid_argument("ex15 needs k > 15");
  std::vector<Value> v;
  for (Value t = 0; t <= k - 3; ++t) v.push_back(t);
  v.push_back(k + 10);
  v.push_back(2 * k + 20);
  return IntSet::from_values(std::move(v));
}

IntSet ex16(Value k) {
  if (k <= 14) throw std::invalid_argument("ex16 needs k > 14");
  std::vector<Value> v;
  for (Value t = 0; t <= k - 3; ++t) v.push_back(t);
  v.push_back(3 * k);
  v.push_back(3 * k + 12);
  return IntSet::from_values(std::move(v));
}

namespace {

FamilyRow make_row(Family f, const IntSet& a, std::int64_t expected_b) {
  FamilyRow r;
  r.family = f;
  r.k = static_cast<Value>(a.size());
  r.stats = stats(a);
  r.expected_b = expected_b;
  r.ap_len = ap_cover(a).length;
  if (auto bp = bp_cover(a)) r.bp_len = bp->total_length();
  return r;
}

}  // namespace

std::vector<FamilyRow> family_table(Family f, Value max_span) {
  std::vector<FamilyRow> rows;
  switch (f) {
    case Family::ex12:
      for (Value a = 1; 2 * (6 * a + 1) + a - 1 <= max_span; ++a) {
        for (Value c = 6 * a + 1; 2 * c + a - 1 <= max_span; ++c) {
          auto row = make_row(f, ex12(a, c), a - 2);
          row.a = a;
          row.c = c;
          rows.push_back(std::move(row));
        }
      }
      break;
    case Family::ex15:
      for (Value k = 16; 2 * k + 20 <= max_span; ++k) rows.push_back(make_row(f, ex15(k), 11));
      break;
    case Family::ex16:
      for (Value k = 15; 3 * k + 12 <= max_span; ++k) rows.push_back(make_row(f, ex16(k), 11));
      break;
  }
  return rows;
}

}  // namespace invsum
