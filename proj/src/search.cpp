#include "invsum/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <map>

#include "invsum/progressions.hpp"
#include "invsum/sumset.hpp"

namespace invsum {

std::string_view to_string(SearchMode m) {
  return m == SearchMode::exhaustive ? "exhaustive" : "randomized";
}

namespace {

bool in_conjecture_range(std::int64_t k, std::int64_t b) { return b >= 0 && 3 * b + 6 < k; }

// Failure test given |2A|; the AP check runs first since BP search dominates.
std::optional<SearchRecord> failing_record_with(const IntSet& a, std::int64_t doubling) {
  const auto k = static_cast<std::int64_t>(a.size());
  const std::int64_t b = doubling - (3 * k - 3);
  if (b < 0) return std::nullopt;
  const auto ap = ap_cover(a);
  if (ap.length <= 2 * k - 1 + 2 * b) return std::nullopt;
  if (bp_cover_within(a, k + b)) return std::nullopt;

  SearchRecord r;
  r.set = a;
  r.k = k;
  r.b = b;
  r.doubling = doubling;
  r.ap_len = ap.length;
  if (auto bp = bp_cover(a)) r.bp_len = bp->total_length();
  const auto g = std::gcd(doubling, k);
  r.ratio_num = doubling / g;
  r.ratio_den = k / g;
  r.applicable = in_conjecture_range(k, b);
  return r;
}

}  // namespace

std::optional<SearchRecord> failing_record(const IntSet& a) {
  if (a.empty()) return std::nullopt;
  return failing_record_with(a, static_cast<std::int64_t>(sumset(a, a).size()));
}

bool certify(const SearchRecord& rec) {
  const auto again = failing_record(rec.set);
  if (!again) return false;
  return again->k == rec.k && again->b == rec.b && again->doubling == rec.doubling &&
         again->ap_len == rec.ap_len && again->bp_len == rec.bp_len &&
         again->ratio_num == rec.ratio_num && again->ratio_den == rec.ratio_den &&
         again->applicable == rec.applicable;
}

namespace {

// -------------------------------------------------------------------------
// Exhaustive branch-and-bound

bool reflection_canonical(const std::vector<Value>& v) {
  const Value top = v.back();
  for (std::size_t i = 0, j = v.size(); i < v.size(); ++i) {
    --j;
    const Value mirrored = top - v[j];
    if (v[i] != mirrored) return v[i] < mirrored;
  }
  return true;
}

Value gcd_of(const std::vector<Value>& v) {
  Value g = 0;
  for (Value x : v) g = std::gcd(g, x);
  return g;
}

class FrontierDfs {
 public:
  FrontierDfs(Value k, Value max_span, std::int64_t doubling_cap, std::uint64_t node_cap)
      : k_(k),
        max_span_(max_span),
        cap_(doubling_cap),
        node_cap_(node_cap),
        elem_words_(static_cast<std::size_t>(max_span / 64 + 1)),
        sum_words_(static_cast<std::size_t>((2 * max_span) / 64 + 1)),
        elem_bits_(elem_words_, 0),
        sums_(static_cast<std::size_t>(k + 1) * sum_words_, 0) {}

  // Runs the subtree of sets starting {0, second, ...}.
  void run(Value second) {
    elems_.assign(1, 0);
    std::fill(elem_bits_.begin(), elem_bits_.end(), 0);
    std::fill(sums_.begin(), sums_.end(), 0);
    elem_bits_[0] = 1;
    level(1)[0] = 1;  // 2{0}
    extend(1, second, second);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  bool aborted() const noexcept { return aborted_; }
  std::vector<SearchRecord>& failures() noexcept { return failures_; }

 private:
  std::uint64_t* level(std::size_t j) { return sums_.data() + j * sum_words_; }

  // Adds x as element number j (0-based) and recurses over larger elements.
  void extend(std::size_t j, Value x_lo, Value x_hi) {
    const auto remaining_after = static_cast<Value>(k_) - static_cast<Value>(j) - 1;
    const Value top = std::min(x_hi, max_span_ - remaining_after);
    for (Value x = x_lo; x <= top && !aborted_; ++x) {
      if (++nodes_ > node_cap_) {
        aborted_ = true;
        return;
      }
      const std::uint64_t* prev = level(j);
      std::uint64_t* next = level(j + 1);
      std::copy_n(prev, sum_words_, next);
      shift_or_into(next, x);
      next[static_cast<std::size_t>(2 * x) >> 6] |= std::uint64_t{1} << ((2 * x) & 63);
      std::int64_t pop = 0;
      for (std::size_t w = 0; w < sum_words_; ++w) pop += std::popcount(next[w]);
      if (pop + 2 * remaining_after > cap_) continue;

      elems_.push_back(x);
      if (remaining_after == 0) {
        leaf(pop);
      } else {
        elem_bits_[static_cast<std::size_t>(x) >> 6] |= std::uint64_t{1} << (x & 63);
        extend(j + 1, x + 1, max_span_);
        elem_bits_[static_cast<std::size_t>(x) >> 6] &= ~(std::uint64_t{1} << (x & 63));
      }
      elems_.pop_back();
    }
  }

  // next |= elem_bits << x
  void shift_or_into(std::uint64_t* next, Value x) const {
    const auto ws = static_cast<std::size_t>(x >> 6);
    const unsigned bs = static_cast<unsigned>(x & 63);
    for (std::size_t w = 0; w < elem_words_; ++w) {
      const std::uint64_t v = elem_bits_[w];
      if (v == 0) continue;
      next[w + ws] |= v << bs;
      if (bs != 0 && w + ws + 1 < sum_words_) next[w + ws + 1] |= v >> (64 - bs);
    }
  }

  void leaf(std::int64_t doubling) {
    if (doubling < 3 * k_ - 3) return;
    if (gcd_of(elems_) != 1 || !reflection_canonical(elems_)) return;
    auto rec = failing_record_with(IntSet::from_values(elems_), doubling);
    if (rec) failures_.push_back(std::move(*rec));
  }

  std::int64_t k_;
  Value max_span_;
  std::int64_t cap_;
  std::uint64_t node_cap_;
  std::size_t elem_words_;
  std::size_t sum_words_;
  std::vector<std::uint64_t> elem_bits_;
  std::vector<std::uint64_t> sums_;  // level j holds 2P for the first j elements
  std::vector<Value> elems_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<SearchRecord> failures_;
};

struct RoundOutcome {
  bool over_budget = false;
  std::uint64_t nodes = 0;
  std::vector<SearchRecord> failures;
};

RoundOutcome exhaustive_round(const SearchOptions& opts, std::int64_t b, std::uint64_t budget) {
  const std::int64_t cap = 3 * opts.k - 3 + b;
  const Value last_second = opts.max_span - (opts.k - 2);
  const auto branches = static_cast<std::int64_t>(std::max<Value>(0, last_second));
  std::vector<std::uint64_t> nodes(static_cast<std::size_t>(branches), 0);
  std::vector<std::vector<SearchRecord>> found(static_cast<std::size_t>(branches));
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> over{false};

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, opts.workers))
  for (std::int64_t i = 0; i < branches; ++i) {
    if (over.load(std::memory_order_relaxed)) continue;
    FrontierDfs dfs(opts.k, opts.max_span, cap, budget);
    dfs.run(static_cast<Value>(i) + 1);
    const auto idx = static_cast<std::size_t>(i);
    nodes[idx] = dfs.nodes();
    found[idx] = std::move(dfs.failures());
    if (dfs.aborted() || spent.fetch_add(dfs.nodes()) + dfs.nodes() > budget) over = true;
  }

  RoundOutcome out;
  out.over_budget = over.load();
  if (out.over_budget) return out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    out.nodes += nodes[i];
    for (auto& r : found[i]) out.failures.push_back(std::move(r));
  }
  return out;
}

// -------------------------------------------------------------------------
// Randomized restarts with local moves

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Evaluated {
  std::int64_t score = 0;
  std::optional<SearchRecord> failure;
};

Evaluated evaluate(const std::vector<Value>& elems, std::int64_t k) {
  const auto a = IntSet::from_values(elems);
  const auto doubling = static_cast<std::int64_t>(sumset(a, a).size());
  const std::int64_t b = doubling - (3 * k - 3);
  Evaluated e;
  e.failure = failing_record_with(a, doubling);
  // Failing sets are ranked by b alone; structured ones pay a penalty.
  e.score = e.failure ? b : b + k + 1;
  return e;
}

// Returns false if the move produced an invalid configuration.
bool apply_move(std::vector<Value>& v, Value max_span, std::mt19937_64& rng) {
  const auto k = v.size();
  std::uniform_int_distribution<int> which(0, 2);
  switch (which(rng)) {
    case 0: {  // remove one, add one
      std::uniform_int_distribution<std::size_t> pick(0, k - 1);
      std::uniform_int_distribution<Value> pos(0, max_span);
      const Value add = pos(rng);
      if (std::binary_search(v.begin(), v.end(), add)) return false;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
      v.insert(std::upper_bound(v.begin(), v.end(), add), add);
      break;
    }
    case 1: {  // translate the tail block by +-1
      std::uniform_int_distribution<std::size_t> pivot(1, k - 1);
      std::uniform_int_distribution<int> sign(0, 1);
      const std::size_t p = pivot(rng);
      const Value delta = sign(rng) == 0 ? -1 : 1;
      for (std::size_t i = p; i < k; ++i) v[i] += delta;
      if (v[p] <= v[p - 1]) return false;
      break;
    }
    default: {  // grow the gap before a random element
      std::uniform_int_distribution<std::size_t> pivot(1, k - 1);
      std::uniform_int_distribution<Value> grow(1, std::max<Value>(1, max_span / 8));
      const std::size_t p = pivot(rng);
      const Value delta = grow(rng);
      for (std::size_t i = p; i < k; ++i) v[i] += delta;
      break;
    }
  }
  const Value lo = v.front();
  for (auto& x : v) x -= lo;
  return v.back() <= max_span;
}

struct RestartOutcome {
  std::optional<std::int64_t> best_b;
  std::vector<SearchRecord> failures;  // all at best_b, normalized
};

constexpr std::size_t kPerRestartKeep = 256;

void offer(RestartOutcome& out, SearchRecord rec) {
  rec.set = normalize(rec.set).set;
  if (out.best_b && rec.b > *out.best_b) return;
  if (!out.best_b || rec.b < *out.best_b) {
    out.best_b = rec.b;
    out.failures.clear();
  }
  if (out.failures.size() >= kPerRestartKeep) return;
  for (const auto& f : out.failures) {
    if (f.set == rec.set) return;
  }
  out.failures.push_back(std::move(rec));
}

RestartOutcome run_restart(const SearchOptions& opts, std::uint64_t restart) {
  std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(restart)));
  const auto k = static_cast<std::size_t>(opts.k);

  std::vector<Value> pool(static_cast<std::size_t>(opts.max_span));
  std::iota(pool.begin(), pool.end(), Value{1});
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Value> cur(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k - 1));
  cur.push_back(0);
  std::sort(cur.begin(), cur.end());

  RestartOutcome out;
  auto cur_eval = evaluate(cur, opts.k);
  if (cur_eval.failure) offer(out, *cur_eval.failure);

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double kTemperature = 0.75;
  for (std::uint64_t step = 1; step < opts.steps_per_restart; ++step) {
    auto cand = cur;
    if (!apply_move(cand, opts.max_span, rng)) continue;
    auto e = evaluate(cand, opts.k);
    if (e.failure) offer(out, *e.failure);
    const auto delta = e.score - cur_eval.score;
    if (delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / kTemperature)) {
      cur = std::move(cand);
      cur_eval = std::move(e);
    }
  }
  return out;
}

SearchResult randomized_search(const SearchOptions& opts) {
  const std::uint64_t steps = std::max<std::uint64_t>(1, opts.steps_per_restart);
  const std::uint64_t restarts = std::max<std::uint64_t>(1, opts.budget / steps);
  std::vector<RestartOutcome> outcomes(restarts);

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, opts.workers))
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(restarts); ++r) {
    outcomes[static_cast<std::size_t>(r)] = run_restart(opts, static_cast<std::uint64_t>(r));
  }

  SearchResult res;
  res.mode = SearchMode::randomized;
  res.complete = false;
  res.budget_exhausted = true;
  res.work = restarts * steps;
  for (const auto& o : outcomes) {
    if (o.best_b && (!res.min_failing_b || *o.best_b < *res.min_failing_b)) {
      res.min_failing_b = o.best_b;
    }
  }
  for (auto& o : outcomes) {
    if (o.best_b != res.min_failing_b) continue;
    for (auto& f : o.failures) res.records.push_back(std::move(f));
  }
  return res;
}

void finalize(SearchResult& res, std::size_t max_records) {
  auto& recs = res.records;
  std::sort(recs.begin(), recs.end(),
            [](const SearchRecord& x, const SearchRecord& y) { return x.set < y.set; });
  recs.erase(std::unique(recs.begin(), recs.end(),
                         [](const SearchRecord& x, const SearchRecord& y) {
                           return x.set == y.set;
                         }),
             recs.end());
  if (max_records != 0 && recs.size() > max_records) recs.resize(max_records);
  for (auto& r : recs) r.frontier = res.min_failing_b && r.b == *res.min_failing_b;
}

}  // namespace

SearchResult frontier_search(const SearchOptions& opts) {
  if (opts.k < 3) throw std::invalid_argument("frontier_search needs k >= 3");
  if (opts.max_span < opts.k - 1) throw std::invalid_argument("max_span too small for k elements");
  if (opts.max_span > (Value{1} << 20)) throw ResourceCeiling("max_span too large for search");

  const std::int64_t k = opts.k;
  const std::int64_t b_max_possible = k * (k + 1) / 2 - (3 * k - 3);
  const std::int64_t b_last = std::min(b_max_possible, opts.b_limit.value_or(b_max_possible));

  SearchResult res;
  if (!opts.force_randomized) {
    std::uint64_t left = opts.budget;
    bool over = false;
    for (std::int64_t b = 0; b <= b_last; ++b) {
      auto round = exhaustive_round(opts, b, left);
      if (round.over_budget) {
        over = true;
        break;
      }
      res.work += round.nodes;
      left -= round.nodes;
      if (!round.failures.empty()) {
        res.min_failing_b = b;
        res.records = std::move(round.failures);
        break;
      }
    }
    if (!over) {
      res.mode = SearchMode::exhaustive;
      res.complete = true;
      finalize(res, opts.max_records);
      return res;
    }
  }

  const auto spent = res.work;
  res = randomized_search(opts);
  res.work += spent;
  finalize(res, opts.max_records);
  return res;
}

// ---------------------------------------------------------------------------

double RatioHistogram::lower(const RatioBucket& b) const noexcept {
  return static_cast<double>(b.index) / static_cast<double>(buckets_per_unit);
}

double RatioHistogram::upper(const RatioBucket& b) const noexcept {
  return static_cast<double>(b.index + 1) / static_cast<double>(buckets_per_unit);
}

bool structured_for_histogram(const SetFacts& f) {
  if (f.stats.deficiency_b >= 0) return structured_within_conjecture_budgets(f);
  return f.ap.length <= f.stats.k + f.stats.b2;
}

RatioHistogram ratio_histogram(Value max_span, std::int64_t buckets_per_unit, int workers,
                               std::size_t max_sets) {
  if (buckets_per_unit < 1) throw std::invalid_argument("buckets_per_unit must be positive");
  const auto masks = enumerate_canonical_masks(max_span, max_sets);
  struct Item {
    std::int64_t bucket;
    bool structured;
  };
  std::vector<Item> items(masks.size());
  const auto n = static_cast<std::int64_t>(masks.size());

#pragma omp parallel for schedule(dynamic, 128) num_threads(std::max(1, workers))
  for (std::int64_t i = 0; i < n; ++i) {
    const auto f = SetFacts::of(IntSet::from_mask(masks[static_cast<std::size_t>(i)]));
    // floor(|2A| * buckets_per_unit / k), exact in integers
    items[static_cast<std::size_t>(i)] = {f.stats.doubling * buckets_per_unit / f.stats.k,
                                          structured_for_histogram(f)};
  }

  RatioHistogram h;
  h.max_span = max_span;
  h.buckets_per_unit = buckets_per_unit;
  h.sets = masks.size();
  std::map<std::int64_t, RatioBucket> by_index;
  for (const auto& it : items) {
    auto& b = by_index[it.bucket];
    b.index = it.bucket;
    ++b.count;
    ++(it.structured ? b.structured : b.unstructured);
  }
  for (auto& [idx, b] : by_index) h.buckets.push_back(b);
  return h;
}

}  // namespace invsum
