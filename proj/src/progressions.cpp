#include "invsum/progressions.hpp"

#include <omp.h>

#include <stdexcept>
#include <tuple>
#include <vector>

namespace invsum {

bool ApWindow::contains(Value x) const noexcept {
  if (x < start || x > last()) return false;
  return (x - start) % diff == 0;
}

IntSet ApWindow::materialize() const {
  std::vector<Value> v;
  v.reserve(static_cast<std::size_t>(length));
  for (Value t = 0; t < length; ++t) v.push_back(start + t * diff);
  return IntSet::from_values(std::move(v));
}

ApWindow ap_cover(const IntSet& a) {
  if (a.empty()) throw std::invalid_argument("ap_cover requires a nonempty set");
  const Value g = difference_gcd(a);
  if (g == 0) return ApWindow{a.min(), 1, 1};
  return ApWindow{a.min(), g, a.span() / g + 1};
}

namespace {

Value mod(Value x, Value d) {
  const Value r = x % d;
  return r < 0 ? r + d : r;
}

// Sumset of two windows with the same difference: a complete progression
// between the endpoint sums.
struct SumRange {
  Value lo, hi, residue;
};

SumRange window_sum(const ApWindow& x, const ApWindow& y) {
  const Value lo = x.start + y.start;
  return {lo, x.last() + y.last(), mod(lo, x.diff)};
}

bool disjoint(const SumRange& p, const SumRange& q) {
  return p.residue != q.residue || p.hi < q.lo || q.hi < p.lo;
}

// Sort key for minimal covers; `diff` sits between total and start.
auto cover_key(const BpCover& c) {
  return std::make_tuple(c.total_length(), c.diff(), c.i.start, c.i.length);
}

ApWindow window_between(Value lo, Value hi, Value d) { return ApWindow{lo, d, (hi - lo) / d + 1}; }

// Calls visit(cover) for each valid candidate with difference d, in split
// order; stops early when visit returns true.
template <class Visit>
bool visit_candidates(const IntSet& a, Value d, Visit&& visit) {
  const auto& v = a.values();
  const Value r0 = mod(v.front(), d);
  Value r1 = -1;
  Value lo1 = 0, hi1 = 0, lo0 = v.front(), hi0 = v.front();
  for (Value x : v) {
    const Value r = mod(x, d);
    if (r == r0) {
      hi0 = x;
    } else if (r1 < 0) {
      r1 = r;
      lo1 = hi1 = x;
    } else if (r == r1) {
      hi1 = x;
    } else {
      return false;  // three or more residue classes
    }
  }

  if (r1 >= 0) {
    BpCover c{window_between(lo0, hi0, d), window_between(lo1, hi1, d)};
    if (is_valid_bp(c.i, c.j)) return visit(c);
    return false;
  }

  // Single class: only order splits can be disjoint.
  for (std::size_t s = 1; s < v.size(); ++s) {
    BpCover c{window_between(v.front(), v[s - 1], d), window_between(v[s], v.back(), d)};
    if (is_valid_bp(c.i, c.j) && visit(c)) return true;
  }
  return false;
}

std::optional<BpCover> best_for_difference(const IntSet& a, Value d) {
  std::optional<BpCover> best;
  visit_candidates(a, d, [&](const BpCover& c) {
    if (!best || cover_key(c) < cover_key(*best)) best = c;
    return false;
  });
  return best;
}

void keep_better(std::optional<BpCover>& best, const std::optional<BpCover>& c) {
  if (c && (!best || cover_key(*c) < cover_key(*best))) best = c;
}

constexpr Value kParallelMinSpan = 4096;

}  // namespace

bool is_valid_bp(const ApWindow& i, const ApWindow& j) {
  if (i.diff != j.diff) throw std::invalid_argument("BP windows must share a difference");
  if (i.diff <= 0 || i.length <= 0 || j.length <= 0) {
    throw std::invalid_argument("BP windows need positive difference and length");
  }
  const auto ii = window_sum(i, i);
  const auto ij = window_sum(i, j);
  const auto jj = window_sum(j, j);
  return disjoint(ii, ij) && disjoint(ii, jj) && disjoint(ij, jj);
}

std::optional<BpCover> bp_cover(const IntSet& a) {
  if (a.size() < 2) return std::nullopt;
  // For k >= 3, a window with difference > span meets a in at most one point,
  // so two of them cannot cover a. For k = 2 the d = 1 split is already optimal.
  const Value max_d = a.span();

  std::optional<BpCover> best;
  if (max_d >= kParallelMinSpan && !omp_in_parallel()) {
#pragma omp parallel
    {
      std::optional<BpCover> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (Value d = 1; d <= max_d; ++d) keep_better(local, best_for_difference(a, d));
#pragma omp critical(invsum_bp_cover_reduce)
      keep_better(best, local);
    }
    return best;
  }

  const auto k = static_cast<Value>(a.size());
  for (Value d = 1; d <= max_d; ++d) {
    keep_better(best, best_for_difference(a, d));
    if (best && best->total_length() == k) break;  // cannot do better; larger d loses the tie
  }
  return best;
}

std::optional<BpCover> bp_cover_within(const IntSet& a, Value budget) {
  if (a.size() < 2) return std::nullopt;
  std::optional<BpCover> found;
  for (Value d = 1; d <= a.span(); ++d) {
    const bool hit = visit_candidates(a, d, [&](const BpCover& c) {
      if (c.total_length() > budget) return false;
      found = c;
      return true;
    });
    if (hit) break;
  }
  return found;
}

}  // namespace invsum
