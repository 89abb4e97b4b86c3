#include "invsum/intset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <charconv>
#include <limits>
#include <numeric>

namespace invsum {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::invalid_argument(what + " at byte " + std::to_string(offset)),
      offset_(offset) {}

IntSet::IntSet(std::initializer_list<Value> values)
    : IntSet(from_values(std::vector<Value>(values))) {}

IntSet IntSet::from_values(std::vector<Value> values) {
  if (std::adjacent_find(values.begin(), values.end(), std::greater_equal<>{}) != values.end()) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }
  if (!values.empty() && values.front() < 0) {
    throw std::domain_error("IntSet holds non-negative integers only");
  }
  IntSet s;
  s.elems_ = std::move(values);
  return s;
}

IntSet IntSet::from_mask(std::uint64_t mask) {
  IntSet s;
  s.elems_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.elems_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

IntSet IntSet::interval(Value lo, Value hi) {
  if (lo < 0 || hi < lo) {
    throw std::invalid_argument("interval requires 0 <= lo <= hi");
  }
  IntSet s;
  s.elems_.resize(static_cast<std::size_t>(hi - lo + 1));
  std::iota(s.elems_.begin(), s.elems_.end(), lo);
  return s;
}

Value IntSet::min() const {
  if (elems_.empty()) throw std::logic_error("min of empty IntSet");
  return elems_.front();
}

Value IntSet::max() const {
  if (elems_.empty()) throw std::logic_error("max of empty IntSet");
  return elems_.back();
}

bool IntSet::contains(Value x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t IntSet::count_in(Value lo, Value hi) const noexcept {
  if (hi < lo) return 0;
  auto first = std::lower_bound(elems_.begin(), elems_.end(), lo);
  auto last = std::upper_bound(first, elems_.end(), hi);
  return static_cast<std::size_t>(last - first);
}

namespace {

class SetLiteralParser {
 public:
  explicit SetLiteralParser(std::string_view text) : text_(text) {}

  IntSet parse() {
    std::vector<Value> out;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty set literal", pos_);
    for (;;) {
      skip_space();
      const std::size_t term_start = pos_;
      const Value lo = integer();
      skip_space();
      Value hi = lo;
      if (peek() == '-') {
        ++pos_;
        skip_space();
        hi = integer();
        if (hi < lo) throw ParseError("descending range", term_start);
        if (hi - lo > kMaxRange) throw ParseError("range too large", term_start);
      }
      for (Value x = lo; x <= hi; ++x) out.push_back(x);
      skip_space();
      if (pos_ == text_.size()) break;
      if (peek() != ',') throw ParseError("expected ','", pos_);
      ++pos_;
    }
    return IntSet::from_values(std::move(out));
  }

 private:
  static constexpr Value kMaxRange = Value{1} << 28;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  Value integer() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (pos_ >= text_.size() || !(*first >= '0' && *first <= '9')) {
      throw ParseError("malformed token", pos_);
    }
    Value v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError("integer out of range", pos_);
    }
    if (ec != std::errc()) throw ParseError("malformed token", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntSet parse_set(std::string_view text) { return SetLiteralParser(text).parse(); }

std::string render(const IntSet& a) {
  std::string out;
  const auto& v = a.values();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(v[i]);
    if (j > i) {
      out += '-';
      out += std::to_string(v[j]);
    }
    i = j + 1;
  }
  return out;
}

IntSet reflect(const IntSet& a) {
  if (a.empty()) return a;
  const Value pivot = a.min() + a.max();
  std::vector<Value> out;
  out.reserve(a.size());
  for (auto it = a.values().rbegin(); it != a.values().rend(); ++it) {
    out.push_back(pivot - *it);
  }
  return IntSet::from_values(std::move(out));
}

IntSet affine_image(const IntSet& a, Value p, Value q) {
  std::vector<Value> out;
  out.reserve(a.size());
  for (Value x : a) {
    Value y = 0;
    if (__builtin_mul_overflow(p, x, &y) || __builtin_add_overflow(y, q, &y)) {
      throw std::overflow_error("affine image overflows");
    }
    out.push_back(y);
  }
  return IntSet::from_values(std::move(out));
}

Value difference_gcd(const IntSet& a) {
  if (a.empty()) return 0;
  const Value lo = a.min();
  Value g = 0;
  for (Value x : a) g = std::gcd(g, x - lo);
  return g;
}

NormalForm normalize(const IntSet& a) {
  if (a.empty()) throw std::invalid_argument("normalize requires a nonempty set");
  NormalForm nf;
  nf.shift = a.min();
  const Value g = difference_gcd(a);
  nf.scale = g == 0 ? 1 : g;

  std::vector<Value> t;
  t.reserve(a.size());
  for (Value x : a) t.push_back((x - nf.shift) / nf.scale);

  const Value top = t.back();
  std::vector<Value> r;
  r.reserve(t.size());
  for (auto it = t.rbegin(); it != t.rend(); ++it) r.push_back(top - *it);

  if (r < t) {
    nf.reflected = true;
    nf.set = IntSet::from_values(std::move(r));
  } else {
    nf.set = IntSet::from_values(std::move(t));
  }
  return nf;
}

bool affine_equivalent(const IntSet& a, const IntSet& b) {
  if (a.size() != b.size()) return false;
  return normalize(a).set == normalize(b).set;
}

}  // namespace invsum
