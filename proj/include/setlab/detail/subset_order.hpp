#pragma once

#include <cstddef>
#include <vector>

namespace setlab {

namespace detail {

// Subsets ending in pool[top]: prefixes are built from pool[0..top) in increasing order.
template <class Visit>
bool visit_with_max(const std::vector<std::size_t>& pool, std::size_t top, std::size_t f_max,
                    std::vector<std::size_t>& prefix, std::size_t next, Visit& visit) {
  if (prefix.size() + 2 <= f_max) {
    for (std::size_t i = next; i < top; ++i) {
      prefix.push_back(pool[i]);
      if (visit_with_max(pool, top, f_max, prefix, i + 1, visit)) return true;
      prefix.pop_back();
    }
  }
  prefix.push_back(pool[top]);
  bool stop = visit(static_cast<const std::vector<std::size_t>&>(prefix));
  prefix.pop_back();
  return stop;
}

}  // namespace detail

template <class Visit>
bool for_each_bounded_subset(const std::vector<std::size_t>& pool, std::size_t f_max, Visit&& visit) {
  std::vector<std::size_t> f;
  if (visit(static_cast<const std::vector<std::size_t>&>(f))) return true;
  if (f_max == 0) return false;
  for (std::size_t top = 0; top < pool.size(); ++top) {
    if (detail::visit_with_max(pool, top, f_max, f, 0, visit)) return true;
  }
  return false;
}

}  // namespace setlab
