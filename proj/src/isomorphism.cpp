#include "invsum/isomorphism.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

namespace invsum {

PlanarSet::PlanarSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw std::invalid_argument("PlanarSet has duplicate points");
  }
}

PlanarSet parse_planar(std::string_view text) {
  std::vector<Point> pts;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  auto integer = [&] {
    skip();
    Value v = 0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
    if (ec != std::errc()) throw ParseError("malformed integer", pos);
    pos += static_cast<std::size_t>(ptr - first);
    return v;
  };
  skip();
  if (pos == text.size()) throw ParseError("empty planar literal", pos);
  for (;;) {
    expect('(');
    const Value x = integer();
    expect(',');
    const Value y = integer();
    expect(')');
    pts.push_back({x, y});
    skip();
    if (pos == text.size()) break;
    expect(';');
  }
  try {
    return PlanarSet(std::move(pts));
  } catch (const std::invalid_argument&) {
    throw ParseError("duplicate point", 0);
  }
}

std::string render(const PlanarSet& p) {
  std::string out;
  for (const auto& [x, y] : p.points()) {
    if (!out.empty()) out += ';';
    out += '(' + std::to_string(x) + ',' + std::to_string(y) + ')';
  }
  return out;
}

namespace {

inline Value add(Value x, Value y) { return x + y; }
inline Point add(const Point& x, const Point& y) { return {x[0] + y[0], x[1] + y[1]}; }

template <class T>
void require_distinct(std::span<const T> v, const char* what) {
  std::vector<T> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw NotBijection(std::string(what) + " has repeated elements");
  }
}

// Label each unordered index pair (i <= j) by the first pair with the same
// sum. Two labelings agree iff the equal-sum relations agree.
template <class T>
std::vector<std::size_t> sum_classes(std::span<const T> v) {
  const std::size_t n = v.size();
  std::vector<std::pair<T, std::size_t>> sums;
  sums.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) sums.emplace_back(add(v[i], v[j]), sums.size());
  }
  std::sort(sums.begin(), sums.end());
  std::vector<std::size_t> label(sums.size());
  for (std::size_t s = 0; s < sums.size();) {
    std::size_t e = s;
    while (e < sums.size() && sums[e].first == sums[s].first) ++e;
    const std::size_t rep = sums[s].second;  // smallest pair index in the run
    for (std::size_t t = s; t < e; ++t) label[sums[t].second] = rep;
    s = e;
  }
  return label;
}

template <class S, class T>
bool definitional(std::span<const S> src, std::span<const T> img) {
  const std::size_t n = src.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const bool lhs = add(src[a], src[b]) == add(src[c], src[d]);
          const bool rhs = add(img[a], img[b]) == add(img[c], img[d]);
          if (lhs != rhs) return false;
        }
  return true;
}

template <class S, class T>
bool check(std::span<const S> src, std::span<const T> img, F2Method method) {
  if (src.size() != img.size()) throw NotBijection("source and image sizes differ");
  require_distinct(src, "source");
  require_distinct(img, "image");
  if (method == F2Method::definitional) return definitional(src, img);
  return sum_classes(src) == sum_classes(img);
}

}  // namespace

bool is_f2_isomorphism(std::span<const Value> s, std::span<const Value> i, F2Method m) {
  return check(s, i, m);
}
bool is_f2_isomorphism(std::span<const Point> s, std::span<const Value> i, F2Method m) {
  return check(s, i, m);
}
bool is_f2_isomorphism(std::span<const Value> s, std::span<const Point> i, F2Method m) {
  return check(s, i, m);
}
bool is_f2_isomorphism(std::span<const Point> s, std::span<const Point> i, F2Method m) {
  return check(s, i, m);
}

std::vector<Value> permuted_image(const IntSet& a, const IntSet& b,
                                  std::span<const std::size_t> perm) {
  if (a.size() != b.size()) throw NotBijection("sets differ in size");
  if (perm.size() != b.size()) throw NotBijection("permutation length differs from set size");
  std::vector<bool> seen(perm.size(), false);
  std::vector<Value> out;
  out.reserve(perm.size());
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw NotBijection("not a permutation");
    seen[p] = true;
    out.push_back(b[p]);
  }
  return out;
}

std::vector<Point> F2Progression::grid() const {
  std::vector<Point> g;
  if (b1 <= 0 || b2 <= 0) return g;
  g.reserve(static_cast<std::size_t>(b1 * b2));
  for (Value i = 0; i < b1; ++i)
    for (Value j = 0; j < b2; ++j) g.push_back({i, j});
  return g;
}

std::vector<Value> F2Progression::image() const {
  std::vector<Value> out;
  for (const auto& [i, j] : grid()) out.push_back(x0 + i * x1 + j * x2);
  return out;
}

std::string_view to_string(F2Rank r) {
  switch (r) {
    case F2Rank::one: return "1";
    case F2Rank::two: return "2";
    case F2Rank::invalid: return "invalid";
  }
  return "?";
}

F2Rank f2_rank(const F2Progression& p) {
  if (p.b2 < 1 || p.b1 < p.b2) return F2Rank::invalid;
  const auto grid = p.grid();
  const auto img = p.image();
  try {
    if (!is_f2_isomorphism(std::span<const Point>(grid), std::span<const Value>(img))) {
      return F2Rank::invalid;
    }
  } catch (const NotBijection&) {
    return F2Rank::invalid;  // grid map not injective
  }
  return p.b2 > 1 ? F2Rank::two : F2Rank::one;
}

TwoLinesEmbedding embed_bp_as_two_lines(const BpCover& c, const IntSet& a) {
  if (!is_valid_bp(c.i, c.j)) throw std::invalid_argument("cover is not a bi-arithmetic progression");
  TwoLinesEmbedding e;
  e.l1 = c.i.length;
  e.l2 = c.j.length;
  e.image.reserve(a.size());
  for (Value x : a) {
    if (c.i.contains(x)) {
      e.image.push_back({(x - c.i.start) / c.i.diff, 0});
    } else if (c.j.contains(x)) {
      e.image.push_back({(x - c.j.start) / c.j.diff, 1});
    } else {
      throw std::invalid_argument("element " + std::to_string(x) + " is not covered");
    }
  }
  e.points = PlanarSet(e.image);
  return e;
}

SumsetStats planar_sumset_stats(const PlanarSet& p) {
  if (p.empty()) throw std::invalid_argument("planar_sumset_stats requires a nonempty set");
  const auto pts = p.points();
  std::vector<Point> sums;
  sums.reserve(pts.size() * (pts.size() + 1) / 2);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) sums.push_back(add(pts[i], pts[j]));
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

  Value lo = pts.front()[0], hi = lo;
  for (const auto& q : pts) {
    lo = std::min(lo, q[0]);
    hi = std::max(hi, q[0]);
  }
  return make_stats(static_cast<std::int64_t>(pts.size()),
                    static_cast<std::int64_t>(sums.size()), hi - lo);
}

PlanarSet two_lines(Value l1, Value l2) {
  std::vector<Point> pts;
  for (Value i = 0; i < l1; ++i) pts.push_back({i, 0});
  for (Value j = 0; j < l2; ++j) pts.push_back({j, 1});
  return PlanarSet(std::move(pts));
}

}  // namespace invsum
