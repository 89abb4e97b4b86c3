#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "invsum/intset.hpp"

namespace invsum {

/// Sums that do not fit in Value are reported, never wrapped.
class SumOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

enum class SumsetEngine {
  automatic,
  sparse,  ///< all |A||B| sums, sorted and deduplicated
  bitset,  ///< shift-or over a bit vector spanning the result
  fft,     ///< indicator convolution via FFTW
};

std::string to_string(SumsetEngine e);
SumsetEngine parse_engine(const std::string& name);

/// Engine selection. `automatic` estimates the cost of each engine and
/// picks the cheapest; the weights below are the tuned crossover constants.
struct SumsetConfig {
  SumsetEngine engine = SumsetEngine::automatic;
  double sparse_cost_per_pair = 1.0;      // multiplied by log2(pairs)
  double bitset_cost_per_word = 0.25;     // per (shift, word) pair
  double fft_cost_per_point = 3.0;        // multiplied by log2(n)
  Value dense_max_span = Value{1} << 31;  // dense engines refuse larger spans
  std::size_t parallel_min_word_ops = std::size_t{1} << 18;
  int threads = 0;  // 0 = OpenMP default
};

/// Engine `automatic` would use for A + B.
SumsetEngine choose_engine(const IntSet& a, const IntSet& b, const SumsetConfig& cfg = {});

/// {x + y : x in a, y in b}. Throws SumOverflow if max a + max b overflows.
IntSet sumset(const IntSet& a, const IntSet& b, const SumsetConfig& cfg = {});

struct SumsetStats {
  std::int64_t k = 0;
  std::int64_t doubling = 0;      ///< |2A|
  std::int64_t deficiency_b = 0;  ///< b3 = |2A| - (3k - 3), signed
  std::int64_t b2 = 0;            ///< |2A| - (2k - 1)
  Value span = 0;

  friend bool operator==(const SumsetStats&, const SumsetStats&) = default;
};

SumsetStats make_stats(std::int64_t k, std::int64_t doubling, Value span);
SumsetStats stats(const IntSet& a, const SumsetConfig& cfg = {});

/// Outcome of the Lev–Smeliansky lower bound for |A + B|. Both sets are
/// translated to min 0, divided by gcd(A ∪ B) and ordered so that the first
/// has the larger maximum (the one carrying the gcd-1 hypothesis).
struct LevSmelianskyBound {
  bool applicable = false;
  std::int64_t bound = 0;
  bool swapped = false;  ///< roles of a and b exchanged
  Value scale = 1;       ///< common gcd divided out
  Value m = 0;           ///< max of the first set after normalization
  Value n = 0;
  std::string reason;  ///< why not applicable
};

LevSmelianskyBound lev_smeliansky_bound(const IntSet& a, const IntSet& b);

}  // namespace invsum
