#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "invsum/intset.hpp"
#include "invsum/verify.hpp"

namespace invsum {

/// A set that escapes both the AP budget 2k-1+2b and the BP budget k+b.
struct SearchRecord {
  IntSet set;
  std::int64_t k = 0;
  std::int64_t b = 0;
  std::int64_t doubling = 0;
  Value ap_len = 0;
  std::optional<Value> bp_len;
  std::int64_t ratio_num = 0;  ///< |2A| / |A| in lowest terms
  std::int64_t ratio_den = 1;
  bool frontier = false;    ///< b equals the smallest failing b found for this k
  bool applicable = false;  ///< 0 <= b < k/3 - 2, i.e. a counterexample to the conjecture range

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

/// Recomputes stats and covers; nullopt if the set satisfies a budget or b < 0.
std::optional<SearchRecord> failing_record(const IntSet& a);

/// True iff recomputation from rec.set reproduces k, b, ap_len and bp_len
/// and the set really fails both budgets.
bool certify(const SearchRecord& rec);

enum class SearchMode { exhaustive, randomized };

std::string_view to_string(SearchMode m);

struct SearchOptions {
  Value k = 9;
  Value max_span = 60;
  std::uint64_t budget = 50'000'000;  ///< DFS nodes, or local-search evaluations
  std::uint64_t seed = 1;
  int workers = 1;
  std::size_t max_records = 0;  ///< 0 keeps every frontier record
  std::uint64_t steps_per_restart = 2000;
  /// Largest b tried by the exhaustive search; unset means no limit.
  std::optional<std::int64_t> b_limit;
  /// Skip the exhaustive attempt.
  bool force_randomized = false;
};

struct SearchResult {
  SearchMode mode = SearchMode::exhaustive;
  bool complete = false;  ///< exhaustive search finished within budget
  bool budget_exhausted = false;
  std::uint64_t work = 0;  ///< DFS nodes plus local-search evaluations
  std::optional<std::int64_t> min_failing_b;
  std::vector<SearchRecord> records;  ///< lexicographic by set

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Exhaustive branch-and-bound over normalized k-sets with max <= max_span,
/// raising the b bound one step at a time until failures appear. If the
/// node budget runs out, falls back to seeded random restarts with local
/// moves and flags the result as incomplete. Output is identical for every
/// worker count.
SearchResult frontier_search(const SearchOptions& opts);

struct RatioBucket {
  std::int64_t index = 0;  ///< bucket covers [index, index + 1) / buckets_per_unit
  std::size_t count = 0;
  std::size_t structured = 0;
  std::size_t unstructured = 0;

  friend bool operator==(const RatioBucket&, const RatioBucket&) = default;
};

struct RatioHistogram {
  Value max_span = 0;
  std::int64_t buckets_per_unit = 8;
  std::size_t sets = 0;
  std::vector<RatioBucket> buckets;  ///< nonempty buckets, increasing

  double lower(const RatioBucket& b) const noexcept;
  double upper(const RatioBucket& b) const noexcept;
};

/// Structured means: for b >= 0, within AP 2k-1+2b or BP k+b; for b < 0,
/// within the small-doubling AP budget k + b2.
bool structured_for_histogram(const SetFacts& f);

/// Histogram of |2A|/|A| over enumerate_canonical(max_span).
RatioHistogram ratio_histogram(Value max_span, std::int64_t buckets_per_unit = 8,
                               int workers = 1, std::size_t max_sets = 5'000'000);

}  // namespace invsum
