#include "invsum/structure.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace invsum {

double ResidueClass::fullness(Value d) const noexcept {
  return static_cast<double>(members.size()) * static_cast<double>(d) /
         static_cast<double>(hi - lo + d);
}

bool ResidueDecomposition::full(double theta) const noexcept {
  for (const auto& c : classes) {
    if (c.fullness(modulus) < 1.0 - theta) return false;
  }
  return true;
}

ResidueDecomposition residue_decomposition(const IntSet& a, Value d) {
  if (d < 1) throw std::invalid_argument("modulus must be positive");
  std::map<Value, std::vector<Value>> by_residue;
  for (Value x : a) by_residue[x % d].push_back(x);
  ResidueDecomposition out;
  out.modulus = d;
  for (auto& [r, xs] : by_residue) {
    ResidueClass c;
    c.residue = r;
    c.lo = xs.front();
    c.hi = xs.back();
    c.members = IntSet::from_values(std::move(xs));
    out.classes.push_back(std::move(c));
  }
  return out;
}

std::string_view to_string(TriangleKind k) {
  switch (k) {
    case TriangleKind::forward: return "forward";
    case TriangleKind::backward: return "backward";
    case TriangleKind::neither: return "neither";
  }
  return "?";
}

namespace {

// `in_window` is A ∩ [lo, hi], sorted.
bool is_forward(const std::vector<Value>& in_window, Value lo, Value hi, double theta) {
  const double len = static_cast<double>(hi - lo);
  if (static_cast<double>(in_window.size()) > (0.5 + theta) * len) return false;

  const auto x_first = static_cast<Value>(std::ceil(static_cast<double>(lo) + theta * len));
  const auto x_last = static_cast<Value>(std::floor(static_cast<double>(hi) - theta * len));
  const double slope = 0.5 + theta * theta;

  std::size_t below = 0;  // |A ∩ [lo, x)|
  for (Value x = lo; x <= x_last; ++x) {
    if (x >= x_first && static_cast<double>(below) < slope * static_cast<double>(x - lo)) {
      return false;
    }
    while (below < in_window.size() && in_window[below] <= x) ++below;
  }
  return true;
}

}  // namespace

TriangleVerdict triangle_profile(const IntSet& a, Value lo, Value hi, double theta) {
  if (hi <= lo) throw std::invalid_argument("degenerate triangle window");
  if (!(theta > 0.0 && theta < 0.25)) throw std::invalid_argument("theta must lie in (0, 1/4)");

  std::vector<Value> window;
  for (Value x : a) {
    if (x >= lo && x <= hi) window.push_back(x);
  }
  std::vector<Value> mirrored;
  mirrored.reserve(window.size());
  for (auto it = window.rbegin(); it != window.rend(); ++it) mirrored.push_back(lo + hi - *it);

  TriangleVerdict v{TriangleKind::neither, lo, hi, theta};
  if (is_forward(window, lo, hi, theta)) {
    v.kind = TriangleKind::forward;
  } else if (is_forward(mirrored, lo, hi, theta)) {
    v.kind = TriangleKind::backward;
  }
  return v;
}

}  // namespace invsum
