#pragma once

#include <string_view>
#include <vector>

#include "invsum/intset.hpp"

namespace invsum {

/// One residue class of a modulo d, with its extremes.
struct ResidueClass {
  Value residue = 0;
  IntSet members;
  Value lo = 0;  ///< min of the class
  Value hi = 0;  ///< max of the class

  /// Slots of the class between lo and hi: (hi - lo)/d + 1.
  Value slots(Value d) const noexcept { return (hi - lo) / d + 1; }
  /// |A_r| * d / (hi - lo + d), in (0, 1]; 1 means the class is a complete AP.
  double fullness(Value d) const noexcept;
};

struct ResidueDecomposition {
  Value modulus = 1;
  std::vector<ResidueClass> classes;  ///< nonempty classes, by residue

  /// Every class has fullness >= 1 - theta.
  bool full(double theta) const noexcept;
};

ResidueDecomposition residue_decomposition(const IntSet& a, Value d);

enum class TriangleKind { forward, backward, neither };

std::string_view to_string(TriangleKind k);

struct TriangleVerdict {
  TriangleKind kind = TriangleKind::neither;
  Value lo = 0;
  Value hi = 0;
  double theta = 0.0;
};

/// Forward: |A ∩ [lo,hi]| <= (1/2 + theta)(hi - lo), and for every integer x in
/// [lo + theta*L, hi - theta*L] the count |A ∩ [lo, x)| >= (1/2 + theta^2)(x - lo),
/// with L = hi - lo. Backward: the window's reflection lo + hi - A is forward.
/// Only A ∩ [lo, hi] is inspected. Throws std::invalid_argument for hi <= lo
/// or theta outside (0, 1/4).
TriangleVerdict triangle_profile(const IntSet& a, Value lo, Value hi, double theta);

/// Default margin used by reports.
inline constexpr double kDefaultTheta = 0.05;

}  // namespace invsum
