#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invsum {

using Value = std::int64_t;

/// Raised by parse_set; carries the byte offset of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A finite set of non-negative integers, stored as a strictly increasing
/// sequence. Immutable after construction.
class IntSet {
 public:
  IntSet() = default;
  IntSet(std::initializer_list<Value> values);

  /// Sorts and deduplicates. Throws std::domain_error on negative input.
  static IntSet from_values(std::vector<Value> values);
  /// Elements of [0, 63] whose bits are set in `mask`.
  static IntSet from_mask(std::uint64_t mask);
  /// The interval [lo, hi].
  static IntSet interval(Value lo, Value hi);

  std::span<const Value> elements() const noexcept { return elems_; }
  const std::vector<Value>& values() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Value min() const;
  Value max() const;
  Value span() const { return max() - min(); }
  bool contains(Value x) const noexcept;
  /// |A ∩ [lo, hi]|
  std::size_t count_in(Value lo, Value hi) const noexcept;

  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  Value operator[](std::size_t i) const noexcept { return elems_[i]; }

  friend bool operator==(const IntSet&, const IntSet&) = default;
  /// Lexicographic on the element sequence.
  friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  std::vector<Value> elems_;
};

/// Affine normal form: `set` has min 0, gcd 1 and is the lexicographically
/// smaller of itself and its reflection. The original set is
/// shift + scale * (reflected ? max(set) - s : s) over s in set.
struct NormalForm {
  IntSet set;
  Value shift = 0;
  Value scale = 1;
  bool reflected = false;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Grammar: term(,term)* with term = int | int-int (inclusive). Whitespace
/// around tokens is ignored.
IntSet parse_set(std::string_view text);

/// Maximal runs of length >= 2 are rendered as ranges: "0-13,26,52".
std::string render(const IntSet& a);

/// max + min - A
IntSet reflect(const IntSet& a);

/// x -> p*x + q. Throws std::domain_error if an image is negative and
/// std::overflow_error if it does not fit.
IntSet affine_image(const IntSet& a, Value p, Value q);

NormalForm normalize(const IntSet& a);

bool affine_equivalent(const IntSet& a, const IntSet& b);

/// gcd of (x - min a) over a; 0 for singletons.
Value difference_gcd(const IntSet& a);

}  // namespace invsum
