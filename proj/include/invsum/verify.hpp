#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "invsum/intset.hpp"
#include "invsum/progressions.hpp"
#include "invsum/structure.hpp"
#include "invsum/sumset.hpp"

namespace invsum {

/// Thrown when a sweep or search would exceed its configured ceiling.
class ResourceCeiling : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ClaimId {
  freiman_small_b,  ///< |2A| = 2k-1+b2 < 3k-3, k > 3  =>  AP of length <= k + b2
  three_k_three,    ///< |2A| = 3k-3, k > 6  =>  AP of length <= 2k-1, or a BP
  main,             ///< 0 <= b < k/3 - 2  =>  AP <= 2k-1+2b or BP <= k+b
  bp_subset,        ///< inside some BP, k > 10, 0 <= b < k/3 - 2  =>  BP <= k+b
  weak_conjecture,  ///< 3k-3 <= |2A| <= alpha*k  =>  AP <= 2k-1+2b or BP <= k+b
};

std::string_view to_string(ClaimId c);
ClaimId parse_claim(std::string_view name);
const std::vector<ClaimId>& all_claims();

struct Verdict {
  ClaimId claim = ClaimId::main;
  bool applicable = false;
  std::optional<bool> holds;  ///< set iff applicable
  std::optional<ApWindow> ap_witness;
  std::optional<BpCover> bp_witness;
  bool exact_bp = false;  ///< a equals I ∪ J (three_k_three only)
};

/// Inputs shared by every claim check, computed once per set.
struct SetFacts {
  IntSet set;
  SumsetStats stats;
  ApWindow ap;
  std::optional<BpCover> bp;  ///< minimal cover, if any

  static SetFacts of(const IntSet& a, const SumsetConfig& cfg = {});
};

/// AP budget 2k-1+2b or BP budget k+b, for b = deficiency >= 0.
bool structured_within_conjecture_budgets(const SetFacts& f);

Verdict check_freiman_small_b(const SetFacts& f);
Verdict check_3k3(const SetFacts& f);
Verdict check_main(const SetFacts& f);
Verdict check_bp_subset(const SetFacts& f);
Verdict check_weak_conjecture(const SetFacts& f, double alpha);

Verdict check(ClaimId claim, const SetFacts& f, double alpha);

Verdict check_freiman_small_b(const IntSet& a);
Verdict check_3k3(const IntSet& a);
Verdict check_main(const IntSet& a);

struct AnalyzeOptions {
  double theta = kDefaultTheta;
  double alpha = 3.3;  ///< ratio ceiling for weak_conjecture, in (3, 10/3)
  Value max_residue_modulus = 6;
  SumsetConfig sumset;
};

struct StructureReport {
  IntSet input;
  NormalForm normal_form;
  SumsetStats stats;
  ApWindow ap;
  std::optional<BpCover> bp;
  std::map<ClaimId, Verdict> verdicts;
  std::vector<ResidueDecomposition> residues;  ///< d = 1 .. max_residue_modulus
  TriangleVerdict triangle;                    ///< over [min a, max a]
  double theta = kDefaultTheta;
  double alpha = 3.3;
};

/// Everything is computed on the normal form; input is kept for echo.
StructureReport analyze(const IntSet& a, const AnalyzeOptions& opts = {});

// ---------------------------------------------------------------------------
// Canonical enumeration

/// Largest max_span enumerate_canonical accepts (sets are packed into 64-bit masks).
inline constexpr Value kMaxEnumerableSpan = 62;

/// True iff the set encoded by `mask` (bit i = element i, bit 0 and bit m
/// set) has gcd 1 and is lexicographically <= its reflection.
bool is_canonical_mask(std::uint64_t mask, Value m);

/// One representative per affine class of sets with min 0, gcd 1, max in
/// [1, max_span], reflection canonical. Ordered by max, then by mask value.
/// Throws ResourceCeiling past `max_sets` representatives.
std::vector<std::uint64_t> enumerate_canonical_masks(Value max_span,
                                                     std::size_t max_sets = SIZE_MAX);
std::vector<IntSet> enumerate_canonical(Value max_span, std::size_t max_sets = SIZE_MAX);

/// Streams the same sequence without materializing it; stop by returning false.
void for_each_canonical(Value max_span, const std::function<bool(const IntSet&)>& visit);

// ---------------------------------------------------------------------------
// Sweep

struct Violation {
  IntSet set;
  std::int64_t k = 0;
  std::int64_t b = 0;
  Value ap_len = 0;
  std::optional<Value> bp_len;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ClaimSummary {
  ClaimId claim = ClaimId::main;
  std::size_t applicable = 0;
  std::size_t holds = 0;
  std::size_t exact_bp = 0;  ///< three_k_three: holds with a equal to its BP
  std::vector<Violation> violations;

  friend bool operator==(const ClaimSummary&, const ClaimSummary&) = default;
};

struct SweepSummary {
  Value max_span = 0;
  std::size_t sets = 0;
  std::vector<ClaimSummary> claims;

  std::size_t total_violations() const noexcept;
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepOptions {
  Value max_span = 10;
  std::vector<ClaimId> claims = {ClaimId::main};
  int workers = 1;
  std::size_t max_sets = 5'000'000;
  double alpha = 3.3;
};

/// Shards the canonical sequence by index over OpenMP threads; totals and
/// the violation order do not depend on the worker count.
SweepSummary sweep(const SweepOptions& opts);

/// Single-threaded loop over for_each_canonical; kept as the reference.
SweepSummary sweep_serial(const SweepOptions& opts);

// ---------------------------------------------------------------------------
// Example families

enum class Family { ex12, ex15, ex16 };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

/// [0,a-1] ∪ [c,c+a-1] ∪ [2c,2c+a-1]; requires a >= 1 and c > 6a (k = 3a, c > 2k).
IntSet ex12(Value a, Value c);
/// [0,k-3] ∪ {k+10, 2k+20}; requires k > 15.
IntSet ex15(Value k);
/// [0,k-3] ∪ {3k, 3k+12}; requires k > 14.
IntSet ex16(Value k);

struct FamilyRow {
  Family family = Family::ex12;
  Value a = 0;  ///< ex12 only
  Value c = 0;  ///< ex12 only
  Value k = 0;
  SumsetStats stats;
  std::int64_t expected_b = 0;
  Value ap_len = 0;
  std::optional<Value> bp_len;
};

/// Every valid member with span <= max_span, in parameter order.
std::vector<FamilyRow> family_table(Family f, Value max_span);

}  // namespace invsum
