#include "setlab/partitioner.hpp"

#include "setlab/classifiers.hpp"

namespace setlab {

namespace {

void require_exact_cover(const SetPair& p, const WindowSet& a) {
  if (!set_intersection(p.first, p.second).empty() || !(set_union(p.first, p.second) == a)) {
    throw Error("partition is not an exact cover of the input");
  }
}

}  // namespace

SetPair split_syndetic(const WindowSet& a) {
  if (a.empty()) throw Error("set must be nonempty on its window");
  SetPair out{WindowSet(a.effective_horizon(), a.coded_horizon()), WindowSet(a.effective_horizon(), a.coded_horizon())};
  bool to_first = true;
  for (std::size_t m = a.next_member(0); m < a.effective_horizon(); m = a.next_member(m + 1)) {
    (to_first ? out.first : out.second).insert(m);
    to_first = !to_first;
  }
  require_exact_cover(out, a);
  return out;
}

SetPair split_greedy(const WindowSet& a, const std::function<std::size_t(std::size_t)>& levels,
                     const ChunkSelector& select) {
  const std::size_t e = a.effective_horizon();
  SetPair out{WindowSet(e, a.coded_horizon()), WindowSet(e, a.coded_horizon())};
  std::size_t cursor = 0;
  for (std::size_t j = 1; cursor < e; ++j) {
    auto end = select(a, cursor, levels(j));
    if (!end) break;
    if (*end <= cursor || *end > e) throw Error("chunk selector returned an invalid chunk");
    WindowSet& half = (j % 2 == 1) ? out.first : out.second;
    for (std::size_t m = a.next_member(cursor); m < *end; m = a.next_member(m + 1)) half.insert(m);
    cursor = *end;
  }
  for (std::size_t m = a.next_member(cursor); m < e; m = a.next_member(m + 1)) out.first.insert(m);
  require_exact_cover(out, a);
  return out;
}

ChunkSelector run_chunk_selector() {
  return [](const WindowSet& a, std::size_t cursor, std::size_t level) -> std::optional<std::size_t> {
    if (level == 0) return std::nullopt;
    const std::size_t e = a.effective_horizon();
    std::size_t start = a.next_member(cursor);
    while (start < e) {
      std::size_t gap = a.next_gap(start);
      if (gap - start >= level) return start + level;
      start = a.next_member(gap);
    }
    return std::nullopt;
  };
}

SetPair split_thick_greedy(const WindowSet& a, std::size_t l_max) {
  if (l_max < 2) throw Error("run length bound must be at least 2");
  if (!thick_on_window(a, l_max).holds()) throw Error("set has no run of length " + std::to_string(l_max));
  const std::size_t h = l_max / 2;
  return split_greedy(a, [h](std::size_t j) { return h + (j - 1) / 2; }, run_chunk_selector());
}

SetPair rotation_partition_pair(const Rational& alpha, std::size_t horizon) {
  GeneratorSpec low{RotationReturns{alpha, Rational(0), {{Rational(0), Rational(1, 2)}}}, horizon};
  GeneratorSpec high{RotationReturns{alpha, Rational(0), {{Rational(1, 2), Rational(1)}}}, horizon};
  SetPair out{generate(low), generate(high)};
  WindowSet positives = WindowSet::full(horizon, horizon);
  positives.erase(0);
  require_exact_cover(out, positives);
  return out;
}

}  // namespace setlab
