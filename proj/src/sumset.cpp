#include "invsum/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "invsum/kernels.hpp"

namespace invsum {

std::string to_string(SumsetEngine e) {
  switch (e) {
    case SumsetEngine::automatic: return "auto";
    case SumsetEngine::sparse: return "sparse";
    case SumsetEngine::bitset: return "bitset";
    case SumsetEngine::fft: return "fft";
  }
  return "?";
}

SumsetEngine parse_engine(const std::string& name) {
  if (name == "auto") return SumsetEngine::automatic;
  if (name == "sparse") return SumsetEngine::sparse;
  if (name == "bitset") return SumsetEngine::bitset;
  if (name == "fft") return SumsetEngine::fft;
  throw std::invalid_argument("unknown sumset engine '" + name + "'");
}

namespace {

Value checked_sum(Value x, Value y) {
  Value s = 0;
  if (__builtin_add_overflow(x, y, &s)) throw SumOverflow("sumset element exceeds 64-bit range");
  return s;
}

std::vector<Value> offsets(const IntSet& a) {
  std::vector<Value> out;
  out.reserve(a.size());
  const Value lo = a.min();
  for (Value x : a) out.push_back(x - lo);
  return out;
}

IntSet sparse_sumset(const IntSet& a, const IntSet& b) {
  std::vector<Value> sums;
  sums.reserve(a.size() * b.size());
  for (Value x : a) {
    for (Value y : b) sums.push_back(x + y);
  }
  return IntSet::from_values(std::move(sums));
}

IntSet bitset_sumset(const IntSet& a, const IntSet& b, const SumsetConfig& cfg) {
  // Shift the denser bit vector by the elements of the smaller set.
  const IntSet& small = a.size() <= b.size() ? a : b;
  const IntSet& big = a.size() <= b.size() ? b : a;
  const Value base = a.min() + b.min();
  const auto big_bits = kernels::DenseBits::from_set(big, big.min());
  const auto shifts = offsets(small);
  kernels::DenseBits out(static_cast<std::size_t>(a.span() + b.span() + 1));
  const std::size_t work = shifts.size() * big_bits.word_count();
  if (work >= cfg.parallel_min_word_ops) {
    kernels::shift_or_parallel(shifts, big_bits, out, cfg.threads);
  } else {
    kernels::shift_or_serial(shifts, big_bits, out);
  }
  return IntSet::from_values(out.positions(base));
}

IntSet fft_sumset(const IntSet& a, const IntSet& b) {
  const Value base = a.min() + b.min();
  const auto oa = offsets(a);
  const auto ob = offsets(b);
  const auto bits =
      kernels::fft_support(oa, ob, static_cast<std::size_t>(a.span() + b.span() + 1));
  return IntSet::from_values(bits.positions(base));
}

}  // namespace

SumsetEngine choose_engine(const IntSet& a, const IntSet& b, const SumsetConfig& cfg) {
  if (cfg.engine != SumsetEngine::automatic) return cfg.engine;
  const double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());
  const Value out_span = a.span() + b.span();
  const double sparse = cfg.sparse_cost_per_pair * pairs * std::max(1.0, std::log2(pairs));
  if (out_span > cfg.dense_max_span) return SumsetEngine::sparse;

  const double words = static_cast<double>(out_span) / 64.0 + 1.0;
  const double shifts = static_cast<double>(std::min(a.size(), b.size()));
  const double bitset = cfg.bitset_cost_per_word * shifts * words + words;
  const double n = std::exp2(std::ceil(std::log2(static_cast<double>(out_span) + 2.0)));
  const double fft = cfg.fft_cost_per_point * n * std::log2(n);

  if (sparse <= bitset && sparse <= fft) return SumsetEngine::sparse;
  return bitset <= fft ? SumsetEngine::bitset : SumsetEngine::fft;
}

IntSet sumset(const IntSet& a, const IntSet& b, const SumsetConfig& cfg) {
  if (a.empty() || b.empty()) throw std::invalid_argument("sumset requires nonempty sets");
  checked_sum(a.max(), b.max());
  switch (choose_engine(a, b, cfg)) {
    case SumsetEngine::bitset: return bitset_sumset(a, b, cfg);
    case SumsetEngine::fft: return fft_sumset(a, b);
    case SumsetEngine::sparse:
    case SumsetEngine::automatic: break;
  }
  return sparse_sumset(a, b);
}

SumsetStats make_stats(std::int64_t k, std::int64_t doubling, Value span) {
  SumsetStats s;
  s.k = k;
  s.doubling = doubling;
  s.deficiency_b = doubling - (3 * k - 3);
  s.b2 = doubling - (2 * k - 1);
  s.span = span;
  return s;
}

SumsetStats stats(const IntSet& a, const SumsetConfig& cfg) {
  if (a.empty()) throw std::invalid_argument("stats requires a nonempty set");
  const auto two_a = sumset(a, a, cfg);
  return make_stats(static_cast<std::int64_t>(a.size()),
                    static_cast<std::int64_t>(two_a.size()), a.span());
}

LevSmelianskyBound lev_smeliansky_bound(const IntSet& a, const IntSet& b) {
  LevSmelianskyBound r;
  if (a.size() < 2 || b.size() < 2) {
    r.reason = "both sets need at least two elements";
    return r;
  }
  auto ta = offsets(a);
  auto tb = offsets(b);
  Value g = 0;
  for (Value x : ta) g = std::gcd(g, x);
  for (Value x : tb) g = std::gcd(g, x);
  for (auto& x : ta) x /= g;
  for (auto& x : tb) x /= g;
  r.scale = g;

  auto gcd_of = [](const std::vector<Value>& v) {
    Value h = 0;
    for (Value x : v) h = std::gcd(h, x);
    return h;
  };
  // The first set must have the larger maximum and gcd 1; on a tie either
  // order satisfies the size hypothesis.
  if (tb.back() > ta.back() || (tb.back() == ta.back() && gcd_of(ta) != 1 && gcd_of(tb) == 1)) {
    std::swap(ta, tb);
    r.swapped = true;
  }
  if (gcd_of(ta) != 1) {
    r.reason = "gcd of the larger set exceeds 1 after normalization";
    return r;
  }
  r.m = ta.back();
  r.n = tb.back();
  const auto size_a = static_cast<std::int64_t>(ta.size());
  const auto size_b = static_cast<std::int64_t>(tb.size());
  const std::int64_t slack = r.m == r.n ? 3 : 2;
  r.bound = std::min<std::int64_t>(r.m + size_b, size_a + 2 * size_b - slack);
  r.applicable = true;
  return r;
}

}  // namespace invsum
