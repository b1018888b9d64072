#pragma once

#include <cstddef>
#include <vector>

#include "setlab/classifiers.hpp"
#include "setlab/window_set.hpp"

namespace setlab {

struct CssdBudget {
  std::size_t f_max = 2;
  std::size_t f_bound = 64;
  std::size_t gap_bound = 64;
};

// The checks below treat their inputs as sets of positive integers: syndeticity of each
// intersection is measured on [1, E'), where E' is the intersection's effective horizon.
// Finite sets F are visited ordered by largest element, then lexicographically, starting
// with the empty set; the first violation is reported with F in `elements`.

WindowVerdict cssd_check(const WindowSet& b, const CssdBudget& budget);
WindowVerdict cssd_upgraded_check(const WindowSet& b, const CssdBudget& budget, std::size_t m);
WindowVerdict ds_check(const WindowSet& a, const WindowSet& b, const CssdBudget& budget);

// F is drawn from the positive non-members of b below f_bound, |F| <= f_max.
SearchResult dthick_search(const WindowSet& b, std::size_t f_max, std::size_t l, std::size_t f_bound = 64);
SearchResult dct_search(const WindowSet& b, std::size_t f_max, std::size_t l, std::size_t f_bound = 64);

// Visits every F (as above) drawn from `pool`, calling visit(F) until it returns true.
template <class Visit>
bool for_each_bounded_subset(const std::vector<std::size_t>& pool, std::size_t f_max, Visit&& visit);

}  // namespace setlab

#include "setlab/detail/subset_order.hpp"
