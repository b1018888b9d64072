#include "setlab/window_set.hpp"

#include <algorithm>
#include <bit>

namespace setlab {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void check_horizon(std::size_t e) {
  if (e > kMaxHorizon) {
    throw Error("horizon " + std::to_string(e) + " exceeds the supported maximum 2^22");
  }
}

void clear_tail(std::vector<std::uint64_t>& w, std::size_t e) {
  if (e % 64 != 0 && !w.empty()) w.back() &= (std::uint64_t{1} << (e % 64)) - 1;
}

std::uint64_t word_or_zero(const std::vector<std::uint64_t>& w, std::size_t i) {
  return i < w.size() ? w[i] : 0;
}

}  // namespace

WindowSet::WindowSet(std::size_t effective, std::size_t coded)
    : effective_(effective), coded_(std::max(effective, coded)), words_(word_count(effective), 0) {
  check_horizon(effective);
}

WindowSet WindowSet::full(std::size_t effective, std::size_t coded) {
  WindowSet s(effective, coded);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  clear_tail(s.words_, effective);
  return s;
}

WindowSet WindowSet::from_members(std::size_t effective, const std::vector<std::size_t>& members,
                                  std::size_t coded) {
  WindowSet s(effective, coded);
  for (std::size_t m : members) s.insert(m);
  return s;
}

void WindowSet::insert(std::size_t i) {
  if (i >= effective_) {
    throw Error("index " + std::to_string(i) + " outside window [0," + std::to_string(effective_) + ")");
  }
  words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void WindowSet::erase(std::size_t i) {
  if (i < effective_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

std::size_t WindowSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool WindowSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> WindowSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t WindowSet::next_member(std::size_t from) const {
  if (from >= effective_) return effective_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return std::min(effective_, wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= words_.size()) return effective_;
    w = words_[wi];
  }
}

std::size_t WindowSet::next_gap(std::size_t from) const {
  if (from >= effective_) return effective_;
  std::size_t wi = from >> 6;
  std::uint64_t w = ~words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return std::min(effective_, wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= words_.size()) return effective_;
    w = ~words_[wi];
  }
}

std::optional<std::size_t> WindowSet::last_member() const {
  for (std::size_t wi = words_.size(); wi-- > 0;) {
    if (words_[wi]) return wi * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[wi]));
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> WindowSet::runs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t i = next_member(0);
  while (i < effective_) {
    std::size_t end = next_gap(i);
    out.emplace_back(i, end - i);
    i = next_member(end);
  }
  return out;
}

WindowSet WindowSet::restricted(std::size_t e) const {
  if (e >= effective_) return *this;
  WindowSet s(e, coded_);
  std::copy_n(words_.begin(), s.words_.size(), s.words_.begin());
  clear_tail(s.words_, e);
  return s;
}

WindowSet WindowSet::with_coded_horizon(std::size_t coded) const {
  WindowSet s = *this;
  s.coded_ = std::max(coded, effective_);
  return s;
}

WindowSet translate_down(const WindowSet& a, std::size_t n) {
  std::size_t e = a.effective_horizon();
  std::size_t ne = n >= e ? 0 : e - n;
  WindowSet out(ne, a.coded_horizon());
  auto& dst = out.mutable_words();
  const auto& src = a.words();
  std::size_t q = n / 64, r = n % 64;
  for (std::size_t w = 0; w < dst.size(); ++w) {
    std::uint64_t lo = word_or_zero(src, w + q) >> r;
    std::uint64_t hi = r ? word_or_zero(src, w + q + 1) << (64 - r) : 0;
    dst[w] = lo | hi;
  }
  clear_tail(dst, ne);
  return out;
}

WindowSet translate_up(const WindowSet& a, std::size_t n) {
  std::size_t ne = a.effective_horizon() + n;
  WindowSet out(ne, a.coded_horizon());
  auto& dst = out.mutable_words();
  const auto& src = a.words();
  std::size_t q = n / 64, r = n % 64;
  for (std::size_t w = q; w < dst.size(); ++w) {
    std::uint64_t lo = word_or_zero(src, w - q) << r;
    std::uint64_t hi = (r && w > q) ? word_or_zero(src, w - q - 1) >> (64 - r) : 0;
    dst[w] = lo | hi;
  }
  clear_tail(dst, ne);
  return out;
}

WindowSet dilate(const WindowSet& a, std::size_t k) {
  if (k == 0) throw Error("dilation factor must be positive");
  std::size_t e = a.effective_horizon();
  std::size_t ne = e == 0 ? 0 : k * (e - 1) + 1;
  check_horizon(ne);
  WindowSet out(ne, a.coded_horizon());
  for (std::size_t m : a.members()) out.insert(k * m);
  return out;
}

WindowSet contract(const WindowSet& a, std::size_t k) {
  if (k == 0) throw Error("contraction factor must be positive");
  std::size_t e = a.effective_horizon();
  std::size_t ne = e == 0 ? 0 : (e - 1) / k + 1;
  WindowSet out(ne, a.coded_horizon());
  for (std::size_t m = 0; m < ne; ++m) {
    if (a.contains(m * k)) out.insert(m);
  }
  return out;
}

namespace {

template <class Op>
WindowSet pointwise(const WindowSet& a, const WindowSet& b, Op op) {
  std::size_t e = std::min(a.effective_horizon(), b.effective_horizon());
  WindowSet out(e, std::max(a.coded_horizon(), b.coded_horizon()));
  auto& dst = out.mutable_words();
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = op(a.words()[w], b.words()[w]);
  clear_tail(dst, e);
  return out;
}

}  // namespace

WindowSet set_union(const WindowSet& a, const WindowSet& b) {
  return pointwise(a, b, [](std::uint64_t x, std::uint64_t y) { return x | y; });
}

WindowSet set_intersection(const WindowSet& a, const WindowSet& b) {
  return pointwise(a, b, [](std::uint64_t x, std::uint64_t y) { return x & y; });
}

WindowSet set_difference(const WindowSet& a, const WindowSet& b) {
  return pointwise(a, b, [](std::uint64_t x, std::uint64_t y) { return x & ~y; });
}

WindowSet complement(const WindowSet& a) {
  WindowSet out = WindowSet::full(a.effective_horizon(), a.coded_horizon());
  auto& dst = out.mutable_words();
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] &= ~a.words()[w];
  return out;
}

bool is_subset(const WindowSet& a, const WindowSet& b) {
  for (std::size_t w = 0; w < a.words().size(); ++w) {
    // bits past E(b) count as outside b
    if (a.words()[w] & ~word_or_zero(b.words(), w)) return false;
  }
  return true;
}

WindowSet difference_union(const WindowSet& a, const std::vector<std::size_t>& fs) {
  std::size_t e = a.effective_horizon();
  if (fs.empty()) return WindowSet(e, a.coded_horizon());
  std::size_t fmax = *std::max_element(fs.begin(), fs.end());
  std::size_t ne = fmax >= e ? 0 : e - fmax;
  WindowSet out(ne, a.coded_horizon());
  for (std::size_t f : fs) {
    WindowSet t = translate_down(a, f);
    auto& dst = out.mutable_words();
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= t.words()[w];
  }
  clear_tail(out.mutable_words(), ne);
  return out;
}

GapProfile gap_profile(const WindowSet& a, std::size_t first) {
  GapProfile p;
  std::size_t e = a.effective_horizon();
  std::size_t i = a.next_member(first);
  if (i >= e) return p;
  p.head = i;
  std::size_t max_empty = i - first;
  std::size_t last = i;
  while (i < e) {
    std::size_t end = a.next_gap(i);
    p.longest_run = std::max(p.longest_run, end - i);
    last = end - 1;
    std::size_t nxt = a.next_member(end);
    max_empty = std::max(max_empty, nxt - end);
    i = nxt;
  }
  p.covering_gap = max_empty + 1;
  p.tail_slack = e - 1 - last;
  return p;
}

std::size_t nu2(std::uint64_t n) {
  if (n == 0) throw Error("2-adic valuation of 0 is infinite");
  return static_cast<std::size_t>(std::countr_zero(n));
}

}  // namespace setlab
