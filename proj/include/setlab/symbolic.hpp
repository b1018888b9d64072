#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "setlab/window_set.hpp"

namespace setlab {

// A 0/1 word on [0, E): the indicator of a window set.
using SymbolicWord = WindowSet;

using Pattern = std::vector<std::pair<std::size_t, bool>>;

// {m >= 1 : x(m+i) = b for all (i, b) in pattern, m+i < E}; window E - max position.
WindowSet pattern_return_set(const SymbolicWord& x, const Pattern& pattern);

// Prefix of x on [0, depth] as a pattern.
Pattern prefix_pattern(const SymbolicWord& x, std::size_t depth);

// For each depth L, the set {m >= 1 : x agrees with its shift by m on [0, L]} and its gap
// profile measured on the positive part of its window.
struct RecurrenceLevel {
  std::size_t depth;
  WindowSet returns;
  GapProfile profile;
};
std::vector<RecurrenceLevel> uniform_recurrence_levels(const SymbolicWord& x, const std::vector<std::size_t>& depths);
std::map<std::size_t, GapProfile> uniform_recurrence_gaps(const SymbolicWord& x, const std::vector<std::size_t>& depths);

}  // namespace setlab
