#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "setlab/generators.hpp"
#include "setlab/window_set.hpp"

namespace setlab {

struct SetPair {
  WindowSet first;
  WindowSet second;
};

// Members in increasing order go alternately to the first and second half.
SetPair split_syndetic(const WindowSet& a);

// Given the cursor and a level N, returns the end (exclusive) of the earliest chunk
// A ∩ [cursor, end) that belongs to the N-th compact family of the chain, or nullopt.
using ChunkSelector = std::function<std::optional<std::size_t>(const WindowSet& a, std::size_t cursor,
                                                               std::size_t level)>;

// Greedy splitting along a chain of compact families: chunk j is taken at level levels(j)
// (j = 1, 2, ...) starting where chunk j-1 ended; odd chunks go to the first half, even
// chunks to the second. Stops at the first level with no chunk; the remainder joins the first half.
SetPair split_greedy(const WindowSet& a, const std::function<std::size_t(std::size_t)>& levels,
                     const ChunkSelector& select);

// Chunk ends at the end of the earliest length-N run of A at or after the cursor.
ChunkSelector run_chunk_selector();

// Level schedule h, h, h+1, h+1, ... with h = floor(l_max / 2); requires a run of length l_max.
SetPair split_thick_greedy(const WindowSet& a, std::size_t l_max);

// {n : frac(n alpha) in (0, 1/2)} and {n : frac(n alpha) in (1/2, 1)} on [1, horizon).
SetPair rotation_partition_pair(const Rational& alpha, std::size_t horizon);

}  // namespace setlab
