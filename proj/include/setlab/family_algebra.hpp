#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "setlab/classifiers.hpp"

namespace setlab {

// Subset of the ground set {1..N}: bit i-1 stands for element i.
using Subset = std::uint32_t;

constexpr unsigned kMaxGroundSize = 16;

// Collection of subsets of {1..N}, stored as a bitmap indexed by subset mask.
class FiniteFamily {
 public:
  FiniteFamily() = default;
  explicit FiniteFamily(unsigned ground_size);  // the empty family

  static FiniteFamily power_set(unsigned n);
  // All supersets of `a`.
  static FiniteFamily principal(unsigned n, Subset a);
  // {A : k in A}
  static FiniteFamily delta(unsigned n, unsigned k);
  // Reads the bitmap of a family on n <= 6 from a single word.
  static FiniteFamily from_word(unsigned n, std::uint64_t bits);

  unsigned ground_size() const { return n_; }
  Subset full_subset() const { return n_ == 0 ? 0 : static_cast<Subset>((std::uint64_t{1} << n_) - 1); }
  std::size_t subset_count() const { return std::size_t{1} << n_; }

  bool contains(Subset a) const { return (bits_[a >> 6] >> (a & 63)) & 1; }
  void insert(Subset a);
  void erase(Subset a);

  std::size_t size() const;
  bool empty() const;
  std::vector<Subset> members() const;
  std::vector<Subset> minimal_members() const;
  bool is_upward_closed() const;
  // Bitmap word 0; the whole family when n <= 6.
  std::uint64_t word() const { return bits_.empty() ? 0 : bits_[0]; }
  const std::vector<std::uint64_t>& words() const { return bits_; }

  friend bool operator==(const FiniteFamily&, const FiniteFamily&) = default;

 private:
  unsigned n_ = 0;
  std::vector<std::uint64_t> bits_ = std::vector<std::uint64_t>(1, 0);
};

bool is_subfamily(const FiniteFamily& f, const FiniteFamily& g);

FiniteFamily upward_closure(unsigned n, const std::vector<Subset>& generators);

FiniteFamily dual(const FiniteFamily& f);

// {A ∩ B : A in F, B in G}, with the empty family acting as the identity.
FiniteFamily meet(const FiniteFamily& f, const FiniteFamily& g);

// A - n = {m in {1..N} : m + n in A}, truncated at the boundary.
Subset translate_subset(Subset a, unsigned n);

// A - F = {n in {1..N-1} : A - n in F}
Subset translate_set_by_family(Subset a, const FiniteFamily& f);

// F + G = {B : B - G in F}
FiniteFamily sum(const FiniteFamily& f, const FiniteFamily& g);

// {B - m : B in F}; not upward closed in general.
FiniteFamily family_translate(const FiniteFamily& f, unsigned m);

bool is_proper(const FiniteFamily& f);
bool is_filter(const FiniteFamily& f);
bool is_partition_regular(const FiniteFamily& f);
bool is_idempotent(const FiniteFamily& f);
bool is_translation_invariant(const FiniteFamily& f);
bool is_ultrafilter(const FiniteFamily& f);
// Proper filter with no proper filter strictly above it.
bool is_maximal_proper_filter(const FiniteFamily& f);

struct FamilyFlags {
  bool is_filter = false;
  bool is_partition_regular = false;
  bool is_idempotent = false;
  bool is_translation_invariant = false;
  bool is_ultrafilter = false;
};

FamilyFlags classify_family(const FiniteFamily& f);

// Greedy finite-sums chain inside A: x_{j+1} = min(A_j ∩ (A_j - F)), A_{j+1} = A_j ∩ (A_j - x_{j+1}).
// F must be a proper filter containing A.
SearchResult extract_fs_chain(const FiniteFamily& f, Subset a, std::size_t k);

// All upward-closed families on {1..n}, n <= 4, in increasing bitmap order.
std::vector<FiniteFamily> all_upward_closed_families(unsigned n);

// "{1,3}"
std::string subset_str(Subset a);
// Minimal members, e.g. "up{{1,2},{3}}"; "empty" and "up{{}}" for the extremes.
std::string family_str(const FiniteFamily& f);

}  // namespace setlab
