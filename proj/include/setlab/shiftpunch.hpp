#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "setlab/symbolic.hpp"
#include "setlab/window_set.hpp"

namespace setlab {

// Largest k with A ∩ [0, 2^k) inside supp(w), or -inf when 0 ∈ A and w(0) = 0, or a cap when
// containment holds on the whole checkable window.
struct NuValue {
  enum class Tag { MinusInfinity, Finite, AtLeastHorizonCap };
  Tag tag = Tag::MinusInfinity;
  std::size_t value = 0;  // exponent for Finite; largest checkable exponent for the cap

  static NuValue minus_infinity() { return {Tag::MinusInfinity, 0}; }
  static NuValue finite(std::size_t v) { return {Tag::Finite, v}; }
  static NuValue cap(std::size_t v) { return {Tag::AtLeastHorizonCap, v}; }
  std::string str() const;
  friend bool operator==(const NuValue&, const NuValue&) = default;
};

// a + [0, 2^k) with 2^k | a, or the whole of N0.
struct DyadicInterval {
  std::size_t start = 0;
  std::size_t log_size = 0;
  bool whole = false;

  std::size_t length() const { return std::size_t{1} << log_size; }
  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

struct PunchStep {
  std::size_t n = 0;
  std::optional<std::size_t> nu2;  // absent for n = 0 (infinite valuation)
  NuValue nu_a;
  std::optional<DyadicInterval> window;  // absent when nothing is punched
  bool alpha0 = false;

  // Window length in the original coordinates; e is used for the whole-window case.
  std::size_t window_length(std::size_t e) const;
};

struct PunchTrace {
  WindowSet input;
  std::vector<PunchStep> steps;  // steps[n] for n = 0..step_count
  WindowSet derived_b;           // window [0, step_count + 1)
  std::size_t exactness_bound = 0;

  std::size_t step_count() const { return steps.empty() ? 0 : steps.size() - 1; }
};

NuValue nu_a(const WindowSet& a, const SymbolicWord& w);

// Punch index: nullopt stands for an infinite valuation.
SymbolicWord apply_punch(const WindowSet& a, const SymbolicWord& w, std::optional<std::size_t> index);
// The punch interval [0, 2^min(nu_A(w), index)), empty for -inf.
std::optional<std::size_t> punch_length(const WindowSet& a, const SymbolicWord& w, std::optional<std::size_t> index);

// Largest N such that n + 2^nu2(n) <= e for every 1 <= n <= N.
std::size_t exactness_bound(std::size_t e);

PunchTrace run(const WindowSet& a, std::size_t steps);

// {n in [1, steps] : |W(n)| >= 2^l} on the window [0, steps + 1).
WindowSet l_set(const PunchTrace& trace, std::size_t l);

std::string trace_csv(const PunchTrace& trace);

struct TraceFailure {
  std::string assertion;  // closed_form_beta, closed_form_alpha, window_translation, window_agreement,
                          // step_recurrence, window_record, derived_bit, dyadic_shape, window_nesting
  std::vector<std::size_t> indices;
  std::string detail;
};

struct TraceReport {
  std::size_t checks = 0;
  std::vector<TraceFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Replays the run literally (shift, then punch) from A alone and compares it against the
// recorded trace and against the closed-form description built from A and the recorded windows.
TraceReport verify_trace(const PunchTrace& trace, const std::vector<std::size_t>& sample);

}  // namespace setlab
