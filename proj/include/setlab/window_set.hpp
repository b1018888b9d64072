#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace setlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the text readers; the CLI maps it to its own exit code.
struct ParseError : Error {
  using Error::Error;
};

inline constexpr std::size_t kMaxHorizon = std::size_t{1} << 22;

// Subset of N0 known exactly on [0, E). H is the horizon the set was coded at.
class WindowSet {
 public:
  WindowSet() = default;
  explicit WindowSet(std::size_t effective, std::size_t coded = 0);

  static WindowSet full(std::size_t effective, std::size_t coded = 0);
  static WindowSet from_members(std::size_t effective, const std::vector<std::size_t>& members,
                                std::size_t coded = 0);

  std::size_t effective_horizon() const { return effective_; }
  std::size_t coded_horizon() const { return coded_; }

  bool contains(std::size_t i) const {
    return i < effective_ && ((words_[i >> 6] >> (i & 63)) & 1u);
  }
  void insert(std::size_t i);
  void erase(std::size_t i);
  void assign(std::size_t i, bool value) { value ? insert(i) : erase(i); }

  std::size_t count() const;
  bool empty() const;
  std::vector<std::size_t> members() const;
  // Least member >= from, or E if none.
  std::size_t next_member(std::size_t from) const;
  // Least non-member >= from, or E if none.
  std::size_t next_gap(std::size_t from) const;
  std::optional<std::size_t> last_member() const;

  // Maximal runs of consecutive members as (start, length), increasing.
  std::vector<std::pair<std::size_t, std::size_t>> runs() const;

  // Same membership, window cut down to min(E, e).
  WindowSet restricted(std::size_t e) const;
  WindowSet with_coded_horizon(std::size_t coded) const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }

  // Membership and window equality; the coded horizon is metadata.
  friend bool operator==(const WindowSet& a, const WindowSet& b) {
    return a.effective_ == b.effective_ && a.words_ == b.words_;
  }

 private:
  std::size_t effective_ = 0;
  std::size_t coded_ = 0;
  std::vector<std::uint64_t> words_;
};

WindowSet translate_down(const WindowSet& a, std::size_t n);
WindowSet translate_up(const WindowSet& a, std::size_t n);
WindowSet dilate(const WindowSet& a, std::size_t k);
WindowSet contract(const WindowSet& a, std::size_t k);

WindowSet set_union(const WindowSet& a, const WindowSet& b);
WindowSet set_intersection(const WindowSet& a, const WindowSet& b);
WindowSet set_difference(const WindowSet& a, const WindowSet& b);
WindowSet complement(const WindowSet& a);
bool is_subset(const WindowSet& a, const WindowSet& b);

// Union of translate_down(a, f) over f in fs; empty fs gives the empty set.
WindowSet difference_union(const WindowSet& a, const std::vector<std::size_t>& fs);

struct GapProfile {
  std::optional<std::size_t> covering_gap;
  std::size_t longest_run = 0;
  std::optional<std::size_t> head;
  std::optional<std::size_t> tail_slack;
};

// Statistics on [first, E). first = 1 measures a set of positive integers.
GapProfile gap_profile(const WindowSet& a, std::size_t first = 0);

std::size_t nu2(std::uint64_t n);

}  // namespace setlab
