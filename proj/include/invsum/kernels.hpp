#pragma once

// Low-level data-parallel kernels. Each parallel kernel has a serial
// counterpart that is kept as the reference for tests and benchmarks.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "invsum/intset.hpp"

namespace invsum::kernels {

/// Fixed-width bit vector over [0, nbits).
class DenseBits {
 public:
  DenseBits() = default;
  explicit DenseBits(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  /// Bits at (x - offset) for x in a. Requires offset <= min a.
  static DenseBits from_set(const IntSet& a, Value offset);

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t size() const noexcept { return nbits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::size_t count() const noexcept;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Set bit positions, each plus `offset`.
  std::vector<Value> positions(Value offset) const;

  friend bool operator==(const DenseBits&, const DenseBits&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// out = OR over s in shifts of (big << s). `out` must hold
/// big.size() + max(shifts) bits. Plain loop, one shift at a time.
void shift_or_serial(std::span<const Value> shifts, const DenseBits& big, DenseBits& out);

/// Same result as shift_or_serial; output words are split into blocks that
/// are filled independently by `threads` OpenMP threads (0 = runtime default).
void shift_or_parallel(std::span<const Value> shifts, const DenseBits& big, DenseBits& out,
                       int threads = 0);

/// Support of the convolution of two 0/1 indicator vectors, via FFTW.
/// `a` and `b` are the offset element lists (min 0). Exact as long as the
/// convolution counts stay far below 2^52.
DenseBits fft_support(std::span<const Value> a, std::span<const Value> b, std::size_t out_bits);

}  // namespace invsum::kernels
