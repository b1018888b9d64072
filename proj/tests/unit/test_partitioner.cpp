#include <doctest.h>

#include <random>

#include "naive.hpp"
#include "setlab/classifiers.hpp"
#include "setlab/filter_conditions.hpp"
#include "setlab/partitioner.hpp"

using namespace setlab;

namespace {

void check_cover(const SetPair& p, const WindowSet& a) {
  CHECK(set_intersection(p.first, p.second).empty());
  CHECK(set_union(p.first, p.second) == a);
}

}  // namespace

TEST_CASE("split_syndetic alternates members") {
  WindowSet ev(16);
  for (std::size_t i = 0; i < 16; i += 2) ev.insert(i);
  auto p = split_syndetic(ev);
  CHECK(p.first.members() == std::vector<std::size_t>{0, 4, 8, 12});
  CHECK(p.second.members() == std::vector<std::size_t>{2, 6, 10, 14});

  auto q = split_syndetic(WindowSet::full(10));
  CHECK(gap_profile(q.first).covering_gap <= 2u);
  CHECK(gap_profile(q.second).covering_gap <= 2u);
  CHECK_THROWS_AS(split_syndetic(WindowSet(10)), Error);
}

TEST_CASE("split_syndetic at most doubles the covering gap") {
  std::mt19937_64 rng(1);
  int done = 0;
  while (done < 100) {
    auto bits = naive::random_bits(64 + rng() % 500, 0.35, rng);
    auto a = naive::window_of(bits);
    auto g = gap_profile(a).covering_gap;
    if (!g || *g > 8) continue;
    ++done;
    auto p = split_syndetic(a);
    check_cover(p, a);
    CHECK(*gap_profile(p.first).covering_gap <= 2 * *g);
    CHECK(*gap_profile(p.second).covering_gap <= 2 * *g);
  }
}

TEST_CASE("split_thick_greedy") {
  const std::size_t e = 1024;
  auto p = split_thick_greedy(WindowSet::full(e), e / 4);
  check_cover(p, WindowSet::full(e));
  CHECK(thick_on_window(p.first, e / 8).holds());
  CHECK(thick_on_window(p.second, e / 8).holds());

  ThickSchedule t;
  for (std::size_t i = 0, s = 4; i < 7; ++i, s *= 2) t.blocks.push_back({s, s + (std::size_t{2} << i)});
  auto sched = generate({t, e});
  auto q = split_thick_greedy(sched, 128);
  check_cover(q, sched);
  CHECK(thick_on_window(q.first, 64).holds());
  CHECK(thick_on_window(q.second, 64).holds());

  WindowSet single(64);
  for (std::size_t i = 10; i < 30; ++i) single.insert(i);
  auto r = split_thick_greedy(single, 20);
  CHECK(r.first.members().front() == 10);
  CHECK(r.first.members().back() == 19);
  CHECK(r.second.members().front() == 20);
  CHECK(r.second.members().back() == 29);

  CHECK_THROWS_AS(split_thick_greedy(single, 21), Error);
  CHECK_THROWS_AS(split_thick_greedy(single, 1), Error);
}

TEST_CASE("split_thick_greedy keeps runs up to half the bound on random thick sets") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    std::size_t e = 512 + rng() % 512;
    std::size_t l_max = 2 + rng() % 40;
    auto bits = naive::random_bits(e, 0.5, rng);
    // plant a few runs of length l_max or more
    for (int k = 0; k < 3; ++k) {
      std::size_t s = rng() % (e - l_max - 8);
      for (std::size_t i = s; i < s + l_max + rng() % 8; ++i) bits[i] = true;
    }
    auto a = naive::window_of(bits);
    auto p = split_thick_greedy(a, l_max);
    check_cover(p, a);
    for (std::size_t n = 1; n <= l_max / 2; ++n) {
      CHECK(thick_on_window(p.first, n).holds());
      CHECK(thick_on_window(p.second, n).holds());
    }
  }
}

TEST_CASE("split_greedy with a custom selector") {
  // chunks of exactly `level` members, levels 1, 2, 3, ...
  ChunkSelector count = [](const WindowSet& a, std::size_t cursor, std::size_t level) -> std::optional<std::size_t> {
    std::size_t m = cursor;
    for (std::size_t i = 0; i < level; ++i) {
      m = a.next_member(m);
      if (m >= a.effective_horizon()) return std::nullopt;
      ++m;
    }
    return m;
  };
  auto a = WindowSet::full(12);
  auto p = split_greedy(a, [](std::size_t j) { return j; }, count);
  // chunks {0} {1,2} {3,4,5} {6..9}, remainder {10,11}
  CHECK(p.first.members() == std::vector<std::size_t>{0, 3, 4, 5, 10, 11});
  CHECK(p.second.members() == std::vector<std::size_t>{1, 2, 6, 7, 8, 9});
}

TEST_CASE("rotation_partition_pair") {
  CHECK_THROWS_AS(rotation_partition_pair(Rational(408, 577), 1 << 10), Error);
  const std::size_t h = 1 << 10;
  for (auto alpha : {frac(golden_convergent(h * h)), frac(sqrt_convergent(2, h * h))}) {
    auto p = rotation_partition_pair(alpha, h);
    WindowSet positives = WindowSet::full(h);
    positives.erase(0);
    check_cover(p, positives);
    CHECK(gap_profile(p.first, 1).covering_gap <= 4u);
    CHECK(gap_profile(p.second, 1).covering_gap <= 4u);
    // 1 - alpha swaps the two intervals
    auto swapped = rotation_partition_pair(Rational(alpha.denominator - alpha.numerator, alpha.denominator), h);
    CHECK(swapped.first == p.second);
    CHECK(swapped.second == p.first);
  }
  auto g = rotation_partition_pair(frac(golden_convergent(h * h)), h);
  CHECK(cssd_check(g.first, {1, 16, 64}).holds());
  CHECK(cssd_check(g.second, {1, 16, 64}).holds());
}
