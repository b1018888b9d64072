#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setlab/window_set.hpp"

namespace setlab {

struct Interval {
  std::size_t start = 0;
  std::size_t length = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Verdict { HoldsOnWindow, FailsOnWindow };

struct WindowVerdict {
  Verdict status = Verdict::HoldsOnWindow;
  std::optional<Interval> interval;
  std::vector<std::size_t> elements;

  bool holds() const { return status == Verdict::HoldsOnWindow; }
};

enum class SearchStatus { Found, NotFoundWithinBudget };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFoundWithinBudget;
  std::vector<std::size_t> witness;

  bool found() const { return status == SearchStatus::Found; }
};

std::string to_string(Verdict v);
std::string to_string(SearchStatus s);

// Every length-n interval inside [first, E) meets a.
WindowVerdict syndetic_on_window(const WindowSet& a, std::size_t n, std::size_t first = 0);
WindowVerdict thick_on_window(const WindowSet& a, std::size_t l);
WindowVerdict piecewise_syndetic_on_window(const WindowSet& a, std::size_t n, std::size_t l);
WindowVerdict thickly_syndetic_on_window(const WindowSet& a, std::size_t k, std::size_t n);
WindowVerdict dyadic_cover_check(const WindowSet& a, std::size_t k);

SearchResult ip_n_member(const WindowSet& a, std::size_t n, std::size_t bound);

// Relaxed parameters used for the shifted copy: gap n*(n+2), run l/(n+2).
struct PsShiftParameters {
  std::size_t gap;
  std::size_t run;
};
PsShiftParameters ps_shift_parameters(std::size_t n, std::size_t l);
SearchResult ps_shift_witness(const WindowSet& a, std::size_t n, std::size_t l);

// Integer polynomial with zero constant term: coefficients[i] multiplies y^(i+1).
struct Polynomial {
  std::vector<std::int64_t> coefficients;
  std::optional<std::int64_t> eval(std::int64_t y) const;
};

// First (x, y) in order y ascending, then x ascending, with x, y, x + p(y) in a for every p.
SearchResult brauer_search(const WindowSet& a, const std::vector<Polynomial>& polys);

}  // namespace setlab
