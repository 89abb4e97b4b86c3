#pragma once

#include <compare>
#include <optional>

#include "invsum/intset.hpp"

namespace invsum {

/// {start + i*diff : 0 <= i < length}
struct ApWindow {
  Value start = 0;
  Value diff = 1;
  Value length = 1;

  Value last() const noexcept { return start + (length - 1) * diff; }
  bool contains(Value x) const noexcept;
  IntSet materialize() const;

  friend auto operator<=>(const ApWindow&, const ApWindow&) = default;
};

/// Two windows of equal difference whose sumsets I+I, I+J, J+J are pairwise
/// disjoint. By convention `i` is the window with the smaller start.
struct BpCover {
  ApWindow i;
  ApWindow j;

  Value total_length() const noexcept { return i.length + j.length; }
  Value diff() const noexcept { return i.diff; }
  bool has_singleton_part() const noexcept { return i.length == 1 || j.length == 1; }
  bool contains(Value x) const noexcept { return i.contains(x) || j.contains(x); }

  friend bool operator==(const BpCover&, const BpCover&) = default;
};

/// Shortest AP containing a: difference gcd(a - min a), from min a to max a.
/// Singletons get difference 1 and length 1.
ApWindow ap_cover(const IntSet& a);

/// Pairwise disjointness of I+I, I+J, J+J, decided from residues and
/// endpoints. Throws std::invalid_argument if the differences differ.
bool is_valid_bp(const ApWindow& i, const ApWindow& j);

/// Minimum-length valid BP containing a with both parts meeting a.
/// Ties: smallest difference, then smallest I.start, then smallest |I|.
/// Sets with fewer than two elements have no such cover.
std::optional<BpCover> bp_cover(const IntSet& a);

/// First valid cover (in order of increasing difference, then split) whose
/// length is at most `budget`.
std::optional<BpCover> bp_cover_within(const IntSet& a, Value budget);

}  // namespace invsum
