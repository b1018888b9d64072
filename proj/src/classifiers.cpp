#include "setlab/classifiers.hpp"

#include <algorithm>
#include <numeric>

namespace setlab {

std::string to_string(Verdict v) {
  return v == Verdict::HoldsOnWindow ? "HoldsOnWindow" : "FailsOnWindow";
}

std::string to_string(SearchStatus s) {
  return s == SearchStatus::Found ? "Found" : "NotFoundWithinBudget";
}

namespace {

WindowVerdict holds(std::optional<Interval> iv = std::nullopt) {
  return {Verdict::HoldsOnWindow, iv, {}};
}

WindowVerdict fails(std::optional<Interval> iv, std::vector<std::size_t> elements = {}) {
  return {Verdict::FailsOnWindow, iv, std::move(elements)};
}

}  // namespace

WindowVerdict syndetic_on_window(const WindowSet& a, std::size_t n, std::size_t first) {
  if (n == 0) throw Error("syndeticity gap must be positive");
  std::size_t e = a.effective_horizon();
  if (first > e || n > e - first) throw Error("window too small");
  // Scan empty stretches in order; the first one of length >= n is the witness.
  std::size_t i = first;
  while (i < e) {
    std::size_t m = a.next_member(i);
    if (m - i >= n) return fails(Interval{i, n});
    if (m >= e) break;
    i = a.next_gap(m);
  }
  return holds();
}

WindowVerdict thick_on_window(const WindowSet& a, std::size_t l) {
  if (l == 0) throw Error("run length must be positive");
  std::optional<Interval> longest;
  for (auto [s, len] : a.runs()) {
    if (len >= l) return holds(Interval{s, len});
    if (!longest || len > longest->length) longest = Interval{s, len};
  }
  return fails(longest ? longest : Interval{0, 0});
}

WindowVerdict piecewise_syndetic_on_window(const WindowSet& a, std::size_t n, std::size_t l) {
  std::vector<std::size_t> shifts(n + 1);
  std::iota(shifts.begin(), shifts.end(), std::size_t{0});
  return thick_on_window(difference_union(a, shifts), l);
}

WindowVerdict thickly_syndetic_on_window(const WindowSet& a, std::size_t k, std::size_t n) {
  // starts holds every t with [t, t+k] inside a
  WindowSet starts = a;
  for (std::size_t s = 1; s <= k; ++s) starts = set_intersection(starts, translate_down(a, s));
  return syndetic_on_window(starts, n);
}

WindowVerdict dyadic_cover_check(const WindowSet& a, std::size_t k) {
  if (k >= 63) throw Error("dyadic size too large");
  std::size_t size = std::size_t{1} << k;
  std::size_t e = a.effective_horizon();
  if (size > e) throw Error("window too small");
  for (std::size_t s = 0; s + size <= e; s += size) {
    if (a.next_member(s) >= s + size) return fails(Interval{s, size});
  }
  return holds();
}

namespace {

bool ip_extend(const WindowSet& a, std::size_t n, std::size_t bound, std::vector<std::size_t>& chosen,
               std::vector<std::size_t>& sums) {
  if (chosen.size() == n) return true;
  std::size_t e = a.effective_horizon();
  std::size_t lo = chosen.empty() ? 1 : chosen.back() + 1;
  for (std::size_t x = lo; x <= bound && x < e; ++x) {
    if (!a.contains(x)) continue;
    bool ok = true;
    for (std::size_t s : sums) {
      if (s + x >= e || !a.contains(s + x)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::size_t old = sums.size();
    for (std::size_t i = 0; i < old; ++i) sums.push_back(sums[i] + x);
    sums.push_back(x);
    chosen.push_back(x);
    if (ip_extend(a, n, bound, chosen, sums)) return true;
    chosen.pop_back();
    sums.resize(old);
  }
  return false;
}

}  // namespace

SearchResult ip_n_member(const WindowSet& a, std::size_t n, std::size_t bound) {
  if (n == 0) throw Error("IP order must be positive");
  std::vector<std::size_t> chosen, sums;
  if (ip_extend(a, n, bound, chosen, sums)) return {SearchStatus::Found, chosen};
  return {};
}

PsShiftParameters ps_shift_parameters(std::size_t n, std::size_t l) {
  return {n * (n + 2), l / (n + 2)};
}

SearchResult ps_shift_witness(const WindowSet& a, std::size_t n, std::size_t l) {
  if (!piecewise_syndetic_on_window(a, n, l).holds()) {
    throw Error("precondition violated: set is not piecewise syndetic at the given parameters");
  }
  auto relaxed = ps_shift_parameters(n, l);
  if (relaxed.run == 0) return {};
  for (std::size_t shift = 1; shift <= n + 1; ++shift) {
    WindowSet b = set_intersection(a, translate_down(a, shift));
    if (piecewise_syndetic_on_window(b, relaxed.gap, relaxed.run).holds()) {
      return {SearchStatus::Found, {shift}};
    }
  }
  return {};
}

std::optional<std::int64_t> Polynomial::eval(std::int64_t y) const {
  __int128 acc = 0, power = 1;
  for (std::int64_t c : coefficients) {
    power *= y;
    acc += static_cast<__int128>(c) * power;
    if (power > (__int128{1} << 62) || acc > (__int128{1} << 62) || acc < -(__int128{1} << 62)) {
      return std::nullopt;
    }
  }
  return static_cast<std::int64_t>(acc);
}

SearchResult brauer_search(const WindowSet& a, const std::vector<Polynomial>& polys) {
  const auto e = static_cast<std::int64_t>(a.effective_horizon());
  for (std::int64_t y = 1; y < e; ++y) {
    if (!a.contains(static_cast<std::size_t>(y))) continue;
    std::vector<std::int64_t> offsets;
    bool feasible = true;
    for (const auto& p : polys) {
      auto v = p.eval(y);
      if (!v || *v >= e || *v <= -e) {
        feasible = false;
        break;
      }
      offsets.push_back(*v);
    }
    if (!feasible) continue;
    for (std::int64_t x = 1; x < e; ++x) {
      if (!a.contains(static_cast<std::size_t>(x))) continue;
      bool ok = true;
      for (std::int64_t off : offsets) {
        std::int64_t t = x + off;
        if (t < 0 || t >= e || !a.contains(static_cast<std::size_t>(t))) {
          ok = false;
          break;
        }
      }
      if (ok) return {SearchStatus::Found, {static_cast<std::size_t>(x), static_cast<std::size_t>(y)}};
    }
  }
  return {};
}

}  // namespace setlab
