#include "setlab/filter_conditions.hpp"

#include <algorithm>
#include <optional>

namespace setlab {

namespace {

void check_budget(const CssdBudget& budget) {
  if (budget.f_max == 0) throw Error("budget f_max must be at least 1");
  if (budget.gap_bound == 0) throw Error("budget gap_bound must be at least 1");
}

std::vector<std::size_t> members_below(const WindowSet& b, std::size_t bound) {
  std::vector<std::size_t> out;
  for (std::size_t i = b.next_member(0); i < std::min(bound, b.effective_horizon()); i = b.next_member(i + 1)) {
    out.push_back(i);
  }
  return out;
}

WindowSet multiples_of(std::size_t m, std::size_t e) {
  WindowSet s(e);
  for (std::size_t i = m; i < e; i += m) s.insert(i);
  return s;
}

// Shared driver: intersect translates of b over each F and require syndeticity on positives.
WindowVerdict check_translates(const WindowSet& b, const CssdBudget& budget, bool include_b,
                               const std::optional<std::size_t>& modulus) {
  check_budget(budget);
  if (b.empty()) throw Error("set must be nonempty on its window");
  auto pool = members_below(b, budget.f_bound);
  std::size_t e = b.effective_horizon();
  std::size_t worst = pool.empty() ? 0 : pool.back();
  // the smallest intersection window is E - max F; its positive part must fit gap_bound
  if (worst >= e || e - worst < budget.gap_bound + 1) throw Error("budget infeasible");

  std::optional<WindowSet> mult;
  if (modulus) {
    if (*modulus == 0) throw Error("modulus must be positive");
    mult = multiples_of(*modulus, e);
  }

  WindowVerdict result;
  for_each_bounded_subset(pool, budget.f_max, [&](const std::vector<std::size_t>& f) {
    WindowSet x = include_b ? b : WindowSet::full(e);
    for (std::size_t s : f) x = set_intersection(x, translate_down(b, s));
    if (mult) x = set_intersection(x, *mult);
    auto v = syndetic_on_window(x, budget.gap_bound, 1);
    if (!v.holds()) {
      result = {Verdict::FailsOnWindow, v.interval, f};
      return true;
    }
    return false;
  });
  return result;
}

// True iff bits [0, limit) contain l consecutive ones. Doubling: after each pass bit i
// survives iff [i, i + c) is all ones.
bool has_run(std::vector<std::uint64_t> m, std::size_t limit, std::size_t l) {
  if (l > limit) return false;
  std::size_t nw = (limit + 63) / 64;
  m.resize(nw);
  if (limit % 64) m.back() &= (std::uint64_t{1} << (limit % 64)) - 1;
  std::size_t c = 1;
  while (c < l) {
    std::size_t shift = std::min(c, l - c);
    std::size_t q = shift / 64, r = shift % 64;
    for (std::size_t w = 0; w < nw; ++w) {
      std::uint64_t lo = w + q < nw ? m[w + q] >> r : 0;
      std::uint64_t hi = (r && w + q + 1 < nw) ? m[w + q + 1] << (64 - r) : 0;
      m[w] &= lo | hi;
    }
    c += shift;
  }
  for (auto w : m) {
    if (w) return true;
  }
  return false;
}

// Searches F over positive non-members of b below f_bound for a thick union.
SearchResult search_thick_union(const WindowSet& b, std::size_t f_max, std::size_t l, std::size_t f_bound,
                                bool include_b) {
  if (l == 0) throw Error("run length must be positive");
  std::size_t e = b.effective_horizon();
  std::vector<std::size_t> pool;
  for (std::size_t i = 1; i < std::min(f_bound, e); ++i) {
    if (!b.contains(i)) pool.push_back(i);
  }
  std::size_t nw = b.words().size();
  std::vector<std::vector<std::uint64_t>> shifted;
  shifted.reserve(pool.size());
  for (std::size_t f : pool) {
    auto t = translate_down(b, f).words();
    t.resize(nw, 0);
    shifted.push_back(std::move(t));
  }

  // F = empty
  {
    std::vector<std::uint64_t> base = include_b ? b.words() : std::vector<std::uint64_t>(nw, 0);
    if (has_run(base, e, l)) return {SearchStatus::Found, {}};
  }
  if (f_max == 0) return {};

  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::uint64_t>> stack;
  stack.push_back(include_b ? b.words() : std::vector<std::uint64_t>(nw, 0));
  std::vector<std::uint64_t> scratch(nw);

  // Same visiting order as for_each_bounded_subset, with unions carried along the prefix.
  auto close = [&](std::size_t top) {
    const auto& acc = stack.back();
    for (std::size_t w = 0; w < nw; ++w) scratch[w] = acc[w] | shifted[top][w];
    std::size_t limit = e - pool[top];
    return has_run(scratch, limit, l);
  };
  auto dfs = [&](auto&& self, std::size_t top, std::size_t next) -> bool {
    if (chosen.size() + 2 <= f_max) {
      for (std::size_t i = next; i < top; ++i) {
        std::vector<std::uint64_t> acc = stack.back();
        for (std::size_t w = 0; w < nw; ++w) acc[w] |= shifted[i][w];
        stack.push_back(std::move(acc));
        chosen.push_back(pool[i]);
        if (self(self, top, i + 1)) return true;
        chosen.pop_back();
        stack.pop_back();
      }
    }
    if (close(top)) {
      chosen.push_back(pool[top]);
      return true;
    }
    return false;
  };
  for (std::size_t top = 0; top < pool.size(); ++top) {
    if (pool[top] + l > e) break;
    if (dfs(dfs, top, 0)) return {SearchStatus::Found, chosen};
  }
  return {};
}

}  // namespace

WindowVerdict cssd_check(const WindowSet& b, const CssdBudget& budget) {
  return check_translates(b, budget, true, std::nullopt);
}

WindowVerdict cssd_upgraded_check(const WindowSet& b, const CssdBudget& budget, std::size_t m) {
  return check_translates(b, budget, true, m);
}

WindowVerdict ds_check(const WindowSet& a, const WindowSet& b, const CssdBudget& budget) {
  if (!is_subset(b, a)) throw Error("B must be a subset of A");
  return check_translates(b, budget, false, std::nullopt);
}

SearchResult dthick_search(const WindowSet& b, std::size_t f_max, std::size_t l, std::size_t f_bound) {
  if (b == WindowSet::full(b.effective_horizon())) throw Error("set must not be the full window");
  return search_thick_union(b, f_max, l, f_bound, false);
}

SearchResult dct_search(const WindowSet& b, std::size_t f_max, std::size_t l, std::size_t f_bound) {
  return search_thick_union(b, f_max, l, f_bound, true);
}

}  // namespace setlab
