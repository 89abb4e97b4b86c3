#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "invsum/intset.hpp"
#include "invsum/progressions.hpp"
#include "invsum/sumset.hpp"

namespace invsum {

using Point = std::array<Value, 2>;

/// Finite subset of Z^2, kept sorted and duplicate free.
class PlanarSet {
 public:
  PlanarSet() = default;
  /// Throws std::invalid_argument on duplicate points.
  explicit PlanarSet(std::vector<Point> points);

  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  friend bool operator==(const PlanarSet&, const PlanarSet&) = default;

 private:
  std::vector<Point> points_;
};

/// "(x,y);(x,y);..."
PlanarSet parse_planar(std::string_view text);
std::string render(const PlanarSet& p);

class NotBijection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class F2Method {
  fingerprint,   ///< compare the equal-sum partitions of index pairs
  definitional,  ///< all quadruples, O(k^4)
};

/// phi(source[i]) = image[i]. True iff a1 + a2 = a3 + a4 exactly when the
/// images satisfy the same equation. Throws NotBijection if the lists have
/// different lengths or repeat an entry.
bool is_f2_isomorphism(std::span<const Value> source, std::span<const Value> image,
                       F2Method method = F2Method::fingerprint);
bool is_f2_isomorphism(std::span<const Point> source, std::span<const Value> image,
                       F2Method method = F2Method::fingerprint);
bool is_f2_isomorphism(std::span<const Value> source, std::span<const Point> image,
                       F2Method method = F2Method::fingerprint);
bool is_f2_isomorphism(std::span<const Point> source, std::span<const Point> image,
                       F2Method method = F2Method::fingerprint);

/// Pairs the i-th smallest element of a with the perm[i]-th smallest of b.
/// Throws NotBijection unless perm is a permutation of [0, |b|) and |a| = |b|.
std::vector<Value> permuted_image(const IntSet& a, const IntSet& b,
                                  std::span<const std::size_t> perm);

/// P(x0; x1, x2; b1, b2) = {x0 + i*x1 + j*x2 : 0 <= i < b1, 0 <= j < b2}.
struct F2Progression {
  Value x0 = 0;
  Value x1 = 1;
  Value x2 = 0;
  Value b1 = 1;
  Value b2 = 1;

  /// Grid points in (i, j) order, i varying slowest.
  std::vector<Point> grid() const;
  /// Image of grid() under the progression map, same order.
  std::vector<Value> image() const;
};

enum class F2Rank { one, two, invalid };

std::string_view to_string(F2Rank r);

/// invalid unless b1 >= b2 >= 1 and the grid map is an injective F2-isomorphism.
F2Rank f2_rank(const F2Progression& p);

struct TwoLinesEmbedding {
  PlanarSet points;
  std::vector<Point> image;  ///< image[i] is the image of the i-th smallest element
  Value l1 = 0;              ///< |I|
  Value l2 = 0;              ///< |J|
};

/// a ∩ I goes to row 0 and a ∩ J to row 1, by position within each window.
/// Throws std::invalid_argument if a is not inside I ∪ J or the cover is not a BP.
TwoLinesEmbedding embed_bp_as_two_lines(const BpCover& c, const IntSet& a);

/// Stats of the componentwise sumset p + p.
SumsetStats planar_sumset_stats(const PlanarSet& p);

/// The two-lines set {(i,0) : i < l1} ∪ {(j,1) : j < l2}.
PlanarSet two_lines(Value l1, Value l2);

}  // namespace invsum
