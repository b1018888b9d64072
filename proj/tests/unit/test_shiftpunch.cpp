#include <doctest.h>

#include <random>

#include "naive.hpp"
#include "setlab/classifiers.hpp"
#include "setlab/shiftpunch.hpp"

using namespace setlab;

namespace {

struct NaiveStep {
  std::optional<std::size_t> log_len;  // nullopt: no punch
  bool alpha0;
};

// Keeps the current point as an explicit array: drop the first bit, then overwrite the
// prefix of length 2^min(nuA, nu2(n)) with the indicator of A.
std::vector<NaiveStep> naive_run(const naive::Bits& a, std::size_t steps) {
  naive::Bits cur = a;
  std::vector<NaiveStep> out{{std::nullopt, true}};
  for (std::size_t n = 1; n <= steps; ++n) {
    cur.erase(cur.begin());
    std::size_t bad = cur.size();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (a[i] && !cur[i]) {
        bad = i;
        break;
      }
    }
    std::size_t v = naive::nu2(n);
    std::optional<std::size_t> k;
    if (bad == cur.size()) {
      k = v;
    } else if (bad > 0) {
      std::size_t lg = 0;
      while ((std::size_t{2} << lg) <= bad) ++lg;
      k = std::min(lg, v);
    }
    if (k) {
      for (std::size_t i = 0; i < (std::size_t{1} << *k); ++i) cur[i] = a[i];
    }
    out.push_back({k, cur[0]});
  }
  return out;
}

std::vector<std::size_t> all_steps(std::size_t steps) {
  std::vector<std::size_t> s;
  for (std::size_t n = 0; n <= steps; ++n) s.push_back(n);
  return s;
}

}  // namespace

TEST_CASE("nu_a") {
  CHECK(nu_a(WindowSet::from_members(8, {0, 2}), WindowSet::from_members(8, {1, 2})) == NuValue::minus_infinity());
  CHECK(nu_a(WindowSet::full(64), WindowSet::full(64)).tag == NuValue::Tag::AtLeastHorizonCap);
  auto w = WindowSet::from_members(32, {0, 1, 4});
  CHECK(nu_a(WindowSet::from_members(32, {0, 1, 4}), w).tag == NuValue::Tag::AtLeastHorizonCap);
  // 9 in A but not in the support: containment holds on [0, 8) and fails on [0, 16)
  CHECK(nu_a(WindowSet::from_members(32, {0, 1, 4, 9}), w) == NuValue::finite(3));
  CHECK(nu_a(WindowSet::from_members(32, {0, 3}), w) == NuValue::finite(1));
  CHECK(NuValue::minus_infinity().str() == "-inf");
  CHECK(NuValue::finite(4).str() == "4");
}

TEST_CASE("apply_punch") {
  auto a = WindowSet::from_members(16, {0, 2, 4, 6, 8, 10, 12, 14});
  auto w = WindowSet::full(16);
  auto p = apply_punch(a, w, 2);
  auto expect = WindowSet::full(16);
  expect.erase(1);
  expect.erase(3);
  CHECK(p == expect);
  CHECK(apply_punch(a, p, 2) == p);
  auto lost = WindowSet::from_members(16, {1, 2, 3});
  CHECK(apply_punch(a, lost, 3) == lost);  // -inf: nothing happens
  CHECK_THROWS_AS(apply_punch(a, w, 5), Error);
}

TEST_CASE("run on the full set matches the hand simulation") {
  const std::size_t e = 4096, steps = 2048;
  auto trace = run(WindowSet::full(e), steps);
  for (std::size_t n = 1; n <= steps; ++n) {
    REQUIRE(trace.steps[n].window);
    CHECK(trace.steps[n].window->length() == (std::size_t{1} << naive::nu2(n)));
  }
  CHECK(trace.derived_b == WindowSet::full(steps + 1));
  for (std::size_t l = 0; l <= 11; ++l) {
    auto s = l_set(trace, l);
    for (std::size_t n = 0; n <= steps; ++n) CHECK(s.contains(n) == (n > 0 && n % (std::size_t{1} << l) == 0));
  }
  CHECK(verify_trace(trace, {1, 2, 3, 64, 1000, 2048}).ok());
}

TEST_CASE("run agrees with a literal array replay") {
  std::mt19937_64 rng(123);
  for (int t = 0; t < 25; ++t) {
    std::size_t e = 64 + rng() % 400;
    auto bits = naive::random_bits(e, 0.3 + 0.1 * (t % 6), rng);
    bits[0] = true;
    auto a = naive::window_of(bits);
    std::size_t steps = exactness_bound(e);
    auto trace = run(a, steps);
    auto ref = naive_run(bits, steps);
    for (std::size_t n = 1; n <= steps; ++n) {
      INFO("e=" << e << " n=" << n);
      const auto& st = trace.steps[n];
      CHECK(st.window.has_value() == ref[n].log_len.has_value());
      if (st.window && ref[n].log_len) CHECK(st.window->log_size == *ref[n].log_len);
      CHECK(st.alpha0 == ref[n].alpha0);
    }
    CHECK(is_subset(trace.derived_b, a.restricted(steps + 1)));
    CHECK(trace.derived_b.contains(0));
    CHECK(verify_trace(trace, all_steps(steps)).ok());
  }
}

TEST_CASE("the trace is stable under enlarging the horizon") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    auto big_bits = naive::random_bits(2048, 0.6, rng);
    big_bits[0] = true;
    auto big = naive::window_of(big_bits);
    auto small = big.restricted(512);
    auto ts = run(small, exactness_bound(512));
    auto tb = run(big, exactness_bound(2048));
    for (std::size_t n = 1; n <= ts.step_count(); ++n) {
      CHECK(ts.steps[n].window == tb.steps[n].window);
      CHECK(ts.steps[n].alpha0 == tb.steps[n].alpha0);
    }
  }
}

TEST_CASE("run rejects bad inputs") {
  CHECK_THROWS_AS(run(WindowSet::from_members(64, {1, 2}), 8), Error);
  CHECK_THROWS_AS(run(WindowSet::full(64), 64), Error);
  for (std::size_t e : {2u, 16u, 100u, 4096u}) {
    std::size_t bound = 0;
    while (bound + 1 < e && bound + 1 + (std::size_t{1} << naive::nu2(bound + 1)) <= e) ++bound;
    CHECK(exactness_bound(e) == bound);
  }
}

TEST_CASE("verify_trace flags a corrupted window") {
  WindowSet a(256);
  for (std::size_t i = 0; i < 256; i += 2) a.insert(i);
  auto trace = run(a, 120);
  CHECK(verify_trace(trace, {1, 5, 64, 120}).ok());
  // find a long window and shrink it
  std::size_t victim = 0;
  for (std::size_t n = 1; n <= 120; ++n) {
    if (trace.steps[n].window && trace.steps[n].window->log_size >= 2) {
      victim = n;
      break;
    }
  }
  REQUIRE(victim);
  trace.steps[victim].window->log_size -= 1;
  auto report = verify_trace(trace, {victim});
  CHECK_FALSE(report.ok());
  bool named = false;
  for (const auto& f : report.failures) named = named || (f.assertion == "window_translation" || f.assertion == "window_record");
  CHECK(named);
}

TEST_CASE("level sets of the even-valuation run") {
  const std::size_t e = 1 << 12, steps = 1 << 10;
  auto bits = naive::even_nu2(e);
  bits[0] = true;
  auto trace = run(naive::window_of(bits), steps);
  auto ref = naive_run(bits, steps);
  for (std::size_t l = 0; l <= 4; ++l) {
    auto s = l_set(trace, l);
    naive::Bits expect(steps + 1);
    for (std::size_t n = 1; n <= steps; ++n) expect[n] = ref[n].log_len && *ref[n].log_len >= l;
    CHECK(naive::bits_of(s) == expect);
    CHECK(syndetic_on_window(s, *naive::covering_gap(expect, 1), 1).holds());
  }
  CHECK_THROWS_AS(l_set(trace, 11), Error);
}

TEST_CASE("trace CSV") {
  auto trace = run(WindowSet::from_members(16, {0, 1, 3}), 4);
  auto csv = trace_csv(trace);
  CHECK(csv.rfind("n,nu2,nuA,wstart,wlen,alpha0\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 6);
  CHECK(csv.find("\n0,cap,") != std::string::npos);
}
