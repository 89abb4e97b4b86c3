#include "invsum/kernels.hpp"

#include <fftw3.h>
#include <omp.h>

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace invsum::kernels {

DenseBits DenseBits::from_set(const IntSet& a, Value offset) {
  DenseBits bits(a.empty() ? 0 : static_cast<std::size_t>(a.max() - offset + 1));
  for (Value x : a) bits.set(static_cast<std::size_t>(x - offset));
  return bits;
}

std::size_t DenseBits::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Value> DenseBits::positions(Value offset) const {
  std::vector<Value> out;
  out.reserve(count());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      out.push_back(offset + static_cast<Value>(wi * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void shift_or_serial(std::span<const Value> shifts, const DenseBits& big, DenseBits& out) {
  const auto src = big.words();
  auto dst = out.words();
  for (Value s : shifts) {
    const auto word_shift = static_cast<std::size_t>(s >> 6);
    const unsigned bit_shift = static_cast<unsigned>(s & 63);
    for (std::size_t w = 0; w < src.size(); ++w) {
      dst[w + word_shift] |= src[w] << bit_shift;
      if (bit_shift != 0 && w + word_shift + 1 < dst.size()) {
        dst[w + word_shift + 1] |= src[w] >> (64 - bit_shift);
      }
    }
  }
}

namespace {

// Word `o` of (src << s), gathered rather than scattered so that output
// words can be produced independently.
inline std::uint64_t shifted_word(std::span<const std::uint64_t> src, std::size_t o,
                                  std::size_t word_shift, unsigned bit_shift) {
  if (o < word_shift) return 0;
  const std::size_t w = o - word_shift;
  std::uint64_t v = w < src.size() ? src[w] << bit_shift : 0;
  if (bit_shift != 0 && w >= 1 && w - 1 < src.size()) v |= src[w - 1] >> (64 - bit_shift);
  return v;
}

}  // namespace

void shift_or_parallel(std::span<const Value> shifts, const DenseBits& big, DenseBits& out,
                       int threads) {
  constexpr std::size_t kBlock = 512;
  const auto src = big.words();
  auto dst = out.words();
  const auto nblocks = static_cast<std::int64_t>((dst.size() + kBlock - 1) / kBlock);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(dst.size(), lo + kBlock);
    for (Value s : shifts) {
      const auto word_shift = static_cast<std::size_t>(s >> 6);
      const unsigned bit_shift = static_cast<unsigned>(s & 63);
      // Only output words in [word_shift, word_shift + src.size()] can change.
      const std::size_t first = std::max(lo, word_shift);
      const std::size_t last = std::min(hi, word_shift + src.size() + 1);
      for (std::size_t o = first; o < last; ++o) {
        dst[o] |= shifted_word(src, o, word_shift, bit_shift);
      }
    }
  }
}

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> fftw_buffer(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

// Plans are made once per length and kept for the life of the process; the
// new-array execute functions are safe to call concurrently.
struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

const PlanPair& plans_for(std::size_t n) {
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard lock(planner_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto r = fftw_buffer<double>(n);
  auto c = fftw_buffer<fftw_complex>(n / 2 + 1);
  PlanPair p;
  p.r2c = fftw_plan_dft_r2c_1d(static_cast<int>(n), r.get(), c.get(), FFTW_ESTIMATE);
  p.c2r = fftw_plan_dft_c2r_1d(static_cast<int>(n), c.get(), r.get(), FFTW_ESTIMATE);
  if (p.r2c == nullptr || p.c2r == nullptr) throw std::runtime_error("FFTW planning failed");
  return cache.emplace(n, p).first->second;
}

std::size_t fft_length(std::size_t n) {
  // FFTW is fastest on 2^a 3^b 5^c 7^d sizes; powers of two are good enough.
  return std::bit_ceil(std::max<std::size_t>(n, 2));
}

}  // namespace

DenseBits fft_support(std::span<const Value> a, std::span<const Value> b, std::size_t out_bits) {
  const std::size_t n = fft_length(out_bits);
  const std::size_t nc = n / 2 + 1;
  const bool same = a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());

  auto ra = fftw_buffer<double>(n);
  auto ca = fftw_buffer<fftw_complex>(nc);
  FftwBuffer<double> rb;
  FftwBuffer<fftw_complex> cb;
  if (!same) {
    rb = fftw_buffer<double>(n);
    cb = fftw_buffer<fftw_complex>(nc);
  }

  const auto& plan = plans_for(n);

  std::fill(ra.get(), ra.get() + n, 0.0);
  for (Value x : a) ra[static_cast<std::size_t>(x)] = 1.0;
  fftw_execute_dft_r2c(plan.r2c, ra.get(), ca.get());
  if (same) {
    for (std::size_t i = 0; i < nc; ++i) {
      const double re = ca[i][0], im = ca[i][1];
      ca[i][0] = re * re - im * im;
      ca[i][1] = 2.0 * re * im;
    }
  } else {
    std::fill(rb.get(), rb.get() + n, 0.0);
    for (Value x : b) rb[static_cast<std::size_t>(x)] = 1.0;
    fftw_execute_dft_r2c(plan.r2c, rb.get(), cb.get());
    for (std::size_t i = 0; i < nc; ++i) {
      const double re = ca[i][0] * cb[i][0] - ca[i][1] * cb[i][1];
      const double im = ca[i][0] * cb[i][1] + ca[i][1] * cb[i][0];
      ca[i][0] = re;
      ca[i][1] = im;
    }
  }
  fftw_execute_dft_c2r(plan.c2r, ca.get(), ra.get());

  // Unnormalized inverse: counts are scaled by n.
  const double threshold = 0.5 * static_cast<double>(n);
  DenseBits out(out_bits);
  for (std::size_t i = 0; i < out_bits; ++i) {
    if (ra[i] > threshold) out.set(i);
  }
  return out;
}

}  // namespace invsum::kernels
