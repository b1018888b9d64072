#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "setlab/family_algebra.hpp"
#include "setlab/family_lab.hpp"

using namespace setlab;

namespace {

// Families as explicit sets of bitmasks, operations read straight off their definitions.
using Fam = std::set<Subset>;

Fam as_set(const FiniteFamily& f) {
  auto m = f.members();
  return Fam(m.begin(), m.end());
}

Fam naive_dual(const Fam& f, unsigned n) {
  Fam out;
  for (Subset b = 0; b < (Subset{1} << n); ++b) {
    bool meets = true;
    for (Subset a : f) meets = meets && (a & b);
    if (meets) out.insert(b);
  }
  return out;
}

Fam naive_meet(const Fam& f, const Fam& g) {
  if (f.empty()) return g;
  if (g.empty()) return f;
  Fam out;
  for (Subset a : f) {
    for (Subset b : g) out.insert(a & b);
  }
  return out;
}

// A - n inside {1..n}: element i + n of A becomes i.
Subset naive_shift(Subset a, unsigned k, unsigned n) {
  Subset out = 0;
  for (unsigned i = 1; i + k <= n; ++i) {
    if (a & (Subset{1} << (i + k - 1))) out |= Subset{1} << (i - 1);
  }
  return out;
}

Subset naive_translate(Subset a, const Fam& f, unsigned n) {
  Subset out = 0;
  for (unsigned k = 1; k < n; ++k) {
    if (f.count(naive_shift(a, k, n))) out |= Subset{1} << (k - 1);
  }
  return out;
}

Fam naive_sum(const Fam& f, const Fam& g, unsigned n) {
  Fam out;
  for (Subset b = 0; b < (Subset{1} << n); ++b) {
    if (f.count(naive_translate(b, g, n))) out.insert(b);
  }
  return out;
}

bool naive_filter(const Fam& f) {
  for (Subset a : f) {
    for (Subset b : f) {
      if (!f.count(a & b)) return false;
    }
  }
  return true;
}

bool naive_pr(const Fam& f, unsigned n) {
  for (Subset a = 0; a < (Subset{1} << n); ++a) {
    for (Subset b = 0; b < (Subset{1} << n); ++b) {
      if (f.count(a | b) && !f.count(a) && !f.count(b)) return false;
    }
  }
  return true;
}

Subset mask(std::initializer_list<unsigned> elems) {
  Subset m = 0;
  for (unsigned e : elems) m |= Subset{1} << (e - 1);
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("upward closure") {
  CHECK(upward_closure(4, {mask({1, 2})}).size() == 4);
  CHECK(upward_closure(4, {}).empty());
  auto f = upward_closure(4, {mask({1}), mask({2})});
  CHECK(f.size() == 12);
  CHECK(family_str(f) == "up{{1},{2}}");
  CHECK(family_str(FiniteFamily(3)) == "empty");
  CHECK(subset_str(mask({1, 3})) == "{1,3}");
  CHECK(all_upward_closed_families(4).size() == 168);
  CHECK(all_upward_closed_families(3).size() == 20);
}

TEST_CASE("dual") {
  CHECK(dual(upward_closure(4, {mask({1, 2})})) == upward_closure(4, {mask({1}), mask({2})}));
  CHECK(dual(FiniteFamily(4)) == FiniteFamily::power_set(4));
  CHECK(dual(FiniteFamily::power_set(4)) == FiniteFamily(4));
  for (const auto& f : all_upward_closed_families(4)) {
    CHECK(dual(dual(f)) == f);
    CHECK(as_set(dual(f)) == naive_dual(as_set(f), 4));
  }
}

TEST_CASE("meet") {
  auto p = FiniteFamily::power_set(4);
  auto f = upward_closure(4, {mask({1, 2})}), g = upward_closure(4, {mask({2, 3})});
  CHECK(meet(f, p) == p);
  CHECK(meet(FiniteFamily(4), f) == f);
  CHECK(meet(f, g) == upward_closure(4, {mask({2})}));
  auto all = all_upward_closed_families(4);
  std::vector<Fam> sets;
  for (const auto& x : all) sets.push_back(as_set(x));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); j += 3) CHECK(as_set(meet(all[i], all[j])) == naive_meet(sets[i], sets[j]));
  }
}

TEST_CASE("translation by a family") {
  auto d1 = FiniteFamily::delta(4, 1);
  for (Subset a = 0; a < 16; ++a) CHECK(translate_set_by_family(a, d1) == naive_shift(a, 1, 4));
  CHECK(translate_set_by_family(mask({3, 4}), upward_closure(4, {mask({1})})) == mask({2, 3}));
  for (const auto& f : all_upward_closed_families(4)) {
    if (is_proper(f)) CHECK(translate_set_by_family(0, f) == 0);
    for (Subset a = 0; a < 16; ++a) CHECK(translate_set_by_family(a, f) == naive_translate(a, as_set(f), 4));
  }
}

TEST_CASE("sum") {
  CHECK(sum(FiniteFamily::delta(4, 1), FiniteFamily::delta(4, 2)) == FiniteFamily::delta(4, 3));
  auto p = FiniteFamily::power_set(4);
  // B - P is {1..N-1}, so F + P is everything exactly when F holds {1..N-1}
  for (const auto& f : all_upward_closed_families(4)) {
    CHECK((sum(f, p) == p) == f.contains(mask({1, 2, 3})));
  }
  CHECK(sum(FiniteFamily::delta(4, 4), p).empty());
  auto all = all_upward_closed_families(4);
  for (std::size_t i = 0; i < all.size(); i += 2) {
    for (std::size_t j = 0; j < all.size(); j += 5) {
      CHECK(as_set(sum(all[i], all[j])) == naive_sum(as_set(all[i]), as_set(all[j]), 4));
    }
  }
  // with a boundary, two proper families can sum to nothing: {N} - n is never {N}
  auto top = upward_closure(4, {mask({1, 2, 3, 4})});
  CHECK(is_proper(top));
  CHECK(sum(top, top).empty());
}

TEST_CASE("classification flags") {
  for (unsigned k = 1; k <= 4; ++k) CHECK(classify_family(FiniteFamily::delta(4, k)).is_ultrafilter);
  auto p = classify_family(FiniteFamily::power_set(4));
  CHECK(p.is_filter);
  CHECK(p.is_partition_regular);
  for (const auto& f : all_upward_closed_families(4)) {
    auto flags = classify_family(f);
    auto s = as_set(f);
    CHECK(flags.is_filter == naive_filter(s));
    CHECK(flags.is_partition_regular == naive_pr(s, 4));
    if (flags.is_translation_invariant) CHECK(flags.is_idempotent);
    CHECK(flags.is_ultrafilter == (is_proper(f) && naive_filter(s) && s == naive_dual(s, 4)));
    CHECK(is_maximal_proper_filter(f) == flags.is_ultrafilter);
  }
  // the majority family is self-dual without being a filter
  auto maj = upward_closure(3, {mask({1, 2}), mask({1, 3}), mask({2, 3})});
  CHECK(dual(maj) == maj);
  CHECK_FALSE(is_filter(maj));
  CHECK_FALSE(is_ultrafilter(maj));
  CHECK_FALSE(is_partition_regular(maj));
}

TEST_CASE("greedy FS chains") {
  // filter generated by the tails {m..7}, m <= 2, on {1..8}
  auto f = upward_closure(8, {mask({2, 3, 4, 5, 6, 7})});
  auto full = f.full_subset();
  auto r = extract_fs_chain(f, full, 3);
  REQUIRE(r.found());
  // the proof's greedy step: x = least element of A ∩ (A - F), then A <- A ∩ (A - x)
  std::vector<std::size_t> expect;
  Subset cur = full;
  while (expect.size() < 3) {
    Subset cand = cur & naive_translate(cur, as_set(f), 8);
    if (!cand) break;
    unsigned x = 1;
    while (!(cand & (Subset{1} << (x - 1)))) ++x;
    expect.push_back(x);
    cur &= naive_shift(cur, x, 8);
  }
  CHECK(r.witness == expect);
  // finite sums of the chain stay inside A
  for (Subset pick = 1; pick < (Subset{1} << r.witness.size()); ++pick) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (pick & (Subset{1} << i)) total += r.witness[i];
    }
    if (total <= 8) CHECK((full & (Subset{1} << (total - 1))));
  }

  auto odds = mask({1, 3, 5, 7});
  auto g = upward_closure(8, {odds});
  auto c = extract_fs_chain(g, odds, 4);
  CHECK(c.witness.size() <= 1);

  auto zero = extract_fs_chain(f, full, 0);
  CHECK(zero.found());
  CHECK(zero.witness.empty());
  CHECK_THROWS_AS(extract_fs_chain(FiniteFamily::power_set(4), 1, 2), Error);
  CHECK_THROWS_AS(extract_fs_chain(f, mask({1}), 2), Error);
}

TEST_CASE("exhaustive lab transcript is frozen") {
  auto report = run_exhaustive_lab(4);
  CHECK(report.families == 168);
  CHECK(lab_transcript(report) == read_file(std::string(SETLAB_TEST_DATA_DIR) + "/family_lab_n4.txt"));
  for (const char* name : {"double_dual", "dual_extremes", "pr_iff_dual_is_filter", "cap_with_dual_is_pr",
                           "dual_of_cap_with_dual_is_filter", "maximal_filter_iff_pr_filter",
                           "pr_filter_implies_self_dual", "translate_meet_containment", "translate_monotone",
                           "sum_monotone", "meet_of_sums", "meet_preserves_idempotent",
                           "meet_preserves_translation_invariance", "translation_invariant_implies_idempotent"}) {
    INFO(name);
    REQUIRE(report.find(name));
    CHECK(report.find(name)->holds());
  }
  REQUIRE(report.find("self_dual_implies_pr_filter"));
  CHECK(report.find("self_dual_implies_pr_filter")->violations == 8);
}

TEST_CASE("sampled lab transcript is frozen") {
  auto report = run_sampled_lab(6, 40, 200000, 20240611);
  CHECK(lab_transcript(report) == read_file(std::string(SETLAB_TEST_DATA_DIR) + "/family_lab_n6_sampled.txt"));
}
