#include "setlab/symbolic.hpp"

#include <algorithm>

namespace setlab {

WindowSet pattern_return_set(const SymbolicWord& x, const Pattern& pattern) {
  std::size_t e = x.effective_horizon();
  std::size_t top = 0;
  for (auto [i, b] : pattern) {
    if (i >= e) throw Error("pattern position " + std::to_string(i) + " outside the word");
    top = std::max(top, i);
  }
  WindowSet out = WindowSet::full(e - top, x.coded_horizon());
  if (out.effective_horizon() > 0) out.erase(0);
  WindowSet not_x = complement(x);
  for (auto [i, b] : pattern) out = set_intersection(out, translate_down(b ? x : not_x, i));
  return out;
}

Pattern prefix_pattern(const SymbolicWord& x, std::size_t depth) {
  Pattern p;
  for (std::size_t i = 0; i <= depth; ++i) p.emplace_back(i, x.contains(i));
  return p;
}

std::vector<RecurrenceLevel> uniform_recurrence_levels(const SymbolicWord& x, const std::vector<std::size_t>& depths) {
  std::vector<RecurrenceLevel> out;
  for (std::size_t l : depths) {
    if (2 * (l + 1) > x.effective_horizon()) throw Error("depth " + std::to_string(l) + " too large for the window");
    WindowSet r = pattern_return_set(x, prefix_pattern(x, l));
    out.push_back({l, r, gap_profile(r, 1)});
  }
  return out;
}

std::map<std::size_t, GapProfile> uniform_recurrence_gaps(const SymbolicWord& x, const std::vector<std::size_t>& depths) {
  std::map<std::size_t, GapProfile> out;
  for (auto& level : uniform_recurrence_levels(x, depths)) out[level.depth] = level.profile;
  return out;
}

}  // namespace setlab
