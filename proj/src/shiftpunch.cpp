#include "setlab/shiftpunch.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace setlab {

namespace {

std::size_t floor_log2(std::size_t v) { return static_cast<std::size_t>(std::bit_width(v)) - 1; }

// 64 bits of `words` starting at bit `pos`; bits past the vector read as zero.
std::uint64_t bits_at(const std::vector<std::uint64_t>& words, std::size_t pos) {
  std::size_t q = pos / 64, r = pos % 64;
  std::uint64_t lo = q < words.size() ? words[q] >> r : 0;
  std::uint64_t hi = (r && q + 1 < words.size()) ? words[q + 1] << (64 - r) : 0;
  return lo | hi;
}

// Smallest i < limit with a(i) = 1 and w(offset + i) = 0, or limit.
std::size_t first_failure(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& w,
                          std::size_t offset, std::size_t limit) {
  for (std::size_t base = 0; base < limit; base += 64) {
    std::uint64_t bad = bits_at(a, base) & ~bits_at(w, offset + base);
    if (limit - base < 64) bad &= (std::uint64_t{1} << (limit - base)) - 1;
    if (bad) return base + static_cast<std::size_t>(std::countr_zero(bad));
  }
  return limit;
}

NuValue nu_from_failure(std::size_t f, std::size_t limit) {
  if (f >= limit) return NuValue::cap(limit == 0 ? 0 : floor_log2(limit));
  if (f == 0) return NuValue::minus_infinity();
  return NuValue::finite(floor_log2(f));
}

}  // namespace

std::string NuValue::str() const {
  switch (tag) {
    case Tag::MinusInfinity:
      return "-inf";
    case Tag::Finite:
      return std::to_string(value);
    case Tag::AtLeastHorizonCap:
      return "cap";
  }
  return "?";
}

std::size_t PunchStep::window_length(std::size_t e) const {
  if (!window) return 0;
  return window->whole ? e : window->length();
}

NuValue nu_a(const WindowSet& a, const SymbolicWord& w) {
  std::size_t limit = std::min(a.effective_horizon(), w.effective_horizon());
  return nu_from_failure(first_failure(a.words(), w.words(), 0, limit), limit);
}

std::optional<std::size_t> punch_length(const WindowSet& a, const SymbolicWord& w, std::optional<std::size_t> index) {
  NuValue nu = nu_a(a, w);
  std::size_t k = 0;
  switch (nu.tag) {
    case NuValue::Tag::MinusInfinity:
      return std::nullopt;
    case NuValue::Tag::Finite:
      k = index ? std::min(nu.value, *index) : nu.value;
      break;
    case NuValue::Tag::AtLeastHorizonCap:
      if (!index) throw Error("exactness lost: unbounded punch on a capped valuation");
      k = *index;
      break;
  }
  if (k >= 63) throw Error("exactness lost: punch interval too long");
  std::size_t len = std::size_t{1} << k;
  if (len > w.effective_horizon() || len > a.effective_horizon()) {
    throw Error("exactness lost: punch interval of length " + std::to_string(len) + " exceeds the window");
  }
  return len;
}

SymbolicWord apply_punch(const WindowSet& a, const SymbolicWord& w, std::optional<std::size_t> index) {
  auto len = punch_length(a, w, index);
  SymbolicWord out = w;
  if (!len) return out;
  for (std::size_t i = 0; i < *len; ++i) out.assign(i, a.contains(i));
  return out;
}

std::size_t exactness_bound(std::size_t e) {
  std::size_t n = 1;
  while (n < e && n + (std::size_t{1} << nu2(n)) <= e) ++n;
  return n - 1;
}

PunchTrace run(const WindowSet& a, std::size_t steps) {
  if (!a.contains(0)) throw Error("0 must belong to A (otherwise every punch removes it and B is empty)");
  const std::size_t e = a.effective_horizon();
  PunchTrace trace;
  trace.input = a;
  trace.exactness_bound = exactness_bound(e);
  if (steps > trace.exactness_bound) {
    throw Error("steps " + std::to_string(steps) + " exceed the exactness bound " +
                std::to_string(trace.exactness_bound));
  }
  // cur holds the current point in original coordinates: alpha^(n)(i) = cur(n + i).
  WindowSet cur = a;
  auto& cw = cur.mutable_words();
  const auto& aw = a.words();

  trace.steps.reserve(steps + 1);
  trace.steps.push_back({0, std::nullopt, nu_a(a, WindowSet::full(e)), DyadicInterval{0, 0, true}, true});
  for (std::size_t n = 1; n <= steps; ++n) {
    PunchStep st;
    st.n = n;
    std::size_t v = nu2(n);
    st.nu2 = v;
    std::size_t limit = e - n;
    st.nu_a = nu_from_failure(first_failure(aw, cw, n, limit), limit);
    if (st.nu_a.tag != NuValue::Tag::MinusInfinity) {
      std::size_t k = st.nu_a.tag == NuValue::Tag::Finite ? std::min(st.nu_a.value, v) : v;
      st.window = DyadicInterval{n, k, false};
      for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) {
        if (!a.contains(i)) cur.erase(n + i);
      }
    }
    st.alpha0 = cur.contains(n);
    trace.steps.push_back(st);
  }
  trace.derived_b = WindowSet(steps + 1);
  for (const auto& st : trace.steps) {
    if (st.alpha0) trace.derived_b.insert(st.n);
  }
  return trace;
}

WindowSet l_set(const PunchTrace& trace, std::size_t l) {
  std::size_t steps = trace.step_count();
  if (steps == 0 || l > floor_log2(steps)) throw Error("level exceeds log2(steps)");
  WindowSet out(steps + 1);
  for (std::size_t n = 1; n <= steps; ++n) {
    const auto& st = trace.steps[n];
    if (st.window && st.window->log_size >= l) out.insert(n);
  }
  return out;
}

std::string trace_csv(const PunchTrace& trace) {
  std::ostringstream os;
  std::size_t e = trace.input.effective_horizon();
  os << "n,nu2,nuA,wstart,wlen,alpha0\n";
  for (const auto& st : trace.steps) {
    os << st.n << ',' << (st.nu2 ? std::to_string(*st.nu2) : "cap") << ',' << st.nu_a.str() << ','
       << (st.window ? st.window->start : st.n) << ',' << st.window_length(e) << ',' << (st.alpha0 ? 1 : 0) << '\n';
  }
  return os.str();
}

namespace {

// supp of beta^(n) (include_n = false) or alpha^(n) (include_n = true) rebuilt from A and the
// recorded windows: position j >= n survives iff A(j - m) holds for every m with j in W(m).
WindowSet closed_form(const PunchTrace& trace, std::size_t n, bool include_n) {
  const WindowSet& a = trace.input;
  std::size_t e = a.effective_horizon();
  WindowSet out = translate_down(a, n);  // the m = 0 term, W(0) = N0
  std::size_t last = include_n ? n : n - 1;
  for (std::size_t m = 1; m <= last; ++m) {
    const auto& st = trace.steps[m];
    if (!st.window) continue;
    std::size_t lo = std::max(n, st.window->start);
    std::size_t hi = std::min(e, st.window->start + st.window->length());
    for (std::size_t j = lo; j < hi; ++j) {
      if (!a.contains(j - m)) out.erase(j - n);
    }
  }
  return out;
}

void fail(TraceReport& r, std::string name, std::vector<std::size_t> idx, std::string detail) {
  r.failures.push_back({std::move(name), std::move(idx), std::move(detail)});
}

bool agree_on_prefix(const WindowSet& x, const WindowSet& y, std::size_t len) {
  return x.restricted(len) == y.restricted(len);
}

}  // namespace

TraceReport verify_trace(const PunchTrace& trace, const std::vector<std::size_t>& sample) {
  TraceReport report;
  const WindowSet& a = trace.input;
  const std::size_t e = a.effective_horizon();
  const std::size_t steps = trace.step_count();
  for (std::size_t n : sample) {
    if (n > steps) throw Error("sampled step " + std::to_string(n) + " beyond the trace");
  }

  // Literal replay: alpha^(0) = 1_A, beta^(n) = shift of alpha^(n-1), alpha^(n) = punch of beta^(n).
  std::vector<SymbolicWord> alpha;
  alpha.reserve(steps + 1);
  alpha.push_back(a);
  for (std::size_t n = 1; n <= steps; ++n) {
    SymbolicWord beta = translate_down(alpha.back(), 1);
    auto len = punch_length(a, beta, nu2(n));
    const auto& st = trace.steps[n];
    ++report.checks;
    std::size_t recorded = st.window_length(e);
    if (recorded != len.value_or(0) || (st.window && (st.window->start != n || st.window->whole))) {
      fail(report, "window_record", {n},
           "replayed length " + std::to_string(len.value_or(0)) + ", recorded " + std::to_string(recorded));
    }
    alpha.push_back(apply_punch(a, beta, nu2(n)));
  }
  for (std::size_t n = 0; n <= steps; ++n) {
    ++report.checks;
    bool bit = alpha[n].contains(0);
    if (bit != trace.steps[n].alpha0 || bit != trace.derived_b.contains(n)) {
      fail(report, "derived_bit", {n}, "alpha(0) disagrees with the recorded bit or with B");
    }
  }

  // Shape of every recorded window.
  for (std::size_t n = 1; n <= steps; ++n) {
    const auto& st = trace.steps[n];
    ++report.checks;
    if (!st.nu2 || *st.nu2 != nu2(n)) fail(report, "dyadic_shape", {n}, "recorded 2-adic valuation is wrong");
    if (!st.window) continue;
    if (st.window->start % st.window->length() != 0 || st.window->log_size > nu2(n)) {
      fail(report, "dyadic_shape", {n}, "window is not dyadic or exceeds 2^nu2(n)");
    }
  }

  // Any two recorded windows are nested or disjoint.
  {
    std::vector<std::pair<std::size_t, std::size_t>> iv;  // (start, end)
    for (std::size_t n = 1; n <= steps; ++n) {
      const auto& st = trace.steps[n];
      if (st.window) iv.emplace_back(st.window->start, st.window->start + st.window_length(e));
    }
    std::sort(iv.begin(), iv.end(), [](auto x, auto y) { return x.first != y.first ? x.first < y.first : x.second > y.second; });
    std::vector<std::pair<std::size_t, std::size_t>> open;
    for (auto cur : iv) {
      while (!open.empty() && open.back().second <= cur.first) open.pop_back();
      ++report.checks;
      if (!open.empty() && open.back().second < cur.second) {
        fail(report, "window_nesting", {open.back().first, cur.first}, "windows overlap without nesting");
      }
      open.push_back(cur);
    }
  }

  // W(n) - m = W(n - m) whenever m < n and n in W(m).
  for (std::size_t m = 1; m <= steps; ++m) {
    const auto& wm = trace.steps[m];
    if (!wm.window) continue;
    std::size_t end = std::min(steps + 1, wm.window->start + wm.window_length(e));
    for (std::size_t n = m + 1; n < end; ++n) {
      ++report.checks;
      const auto& wn = trace.steps[n];
      const auto& wd = trace.steps[n - m];
      bool same = wn.window_length(e) == wd.window_length(e);
      if (wn.window && wd.window) same = same && wn.window->start - m == wd.window->start;
      if (!same) {
        fail(report, "window_translation", {m, n},
             "|W(n)| = " + std::to_string(wn.window_length(e)) + " but |W(n-m)| = " + std::to_string(wd.window_length(e)));
      }
    }
  }

  for (std::size_t n : sample) {
    // closed forms against the replay
    if (n >= 1) {
      WindowSet beta_cf = closed_form(trace, n, false);
      ++report.checks;
      if (!(beta_cf == translate_down(alpha[n - 1], 1))) {
        fail(report, "closed_form_beta", {n}, "closed-form support differs from the replayed point");
      }
    }
    WindowSet alpha_cf = n == 0 ? a : closed_form(trace, n, true);
    ++report.checks;
    if (!(alpha_cf == alpha[n])) fail(report, "closed_form_alpha", {n}, "closed-form support differs from the replayed point");

    // step recurrences on the closed forms
    if (n >= 1) {
      ++report.checks;
      if (!(apply_punch(a, closed_form(trace, n, false), nu2(n)) == alpha_cf)) {
        fail(report, "step_recurrence", {n}, "punching the closed-form beta does not give the closed-form alpha");
      }
    }
    if (n < steps) {
      ++report.checks;
      if (!(translate_down(alpha_cf, 1) == closed_form(trace, n + 1, false))) {
        fail(report, "step_recurrence", {n, n + 1}, "shifting the closed-form alpha does not give the next beta");
      }
    }

    // alpha^(i) and alpha^(m+i) agree on [0, |W(m)| - i) for i in [0, |W(m)|)
    if (n >= 1 && trace.steps[n].window) {
      std::size_t len = trace.steps[n].window_length(e);
      for (std::size_t i = 0; i < len && n + i <= steps; ++i) {
        ++report.checks;
        if (!agree_on_prefix(alpha[i], alpha[n + i], len - i)) {
          fail(report, "window_agreement", {n, i}, "points disagree inside the shifted window");
        }
      }
    }
  }
  return report;
}

}  // namespace setlab
