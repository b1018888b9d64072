#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace setlab {

struct IdentityTally {
  std::string name;
  std::string statement;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::string first_violation;  // empty when nothing failed

  bool holds() const { return violations == 0; }
};

struct LabReport {
  unsigned ground_size = 0;
  std::string mode;  // "exhaustive" or "sampled"
  std::size_t families = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityTally> identities;

  const IdentityTally* find(const std::string& name) const;
};

// Every upward-closed family on {1..n}, n <= 4; binary identities over all ordered pairs.
LabReport run_exhaustive_lab(unsigned n);

// Random upward-closed families on {1..n}, n <= 6, plus the extreme and principal families.
// Binary identities run over all pairs of the sample; four-family identities over `quads` draws.
LabReport run_sampled_lab(unsigned n, std::size_t samples, std::size_t quads, std::uint64_t seed);

// Deterministic line-oriented transcript; this is the format frozen under tests/data.
std::string lab_transcript(const LabReport& report);

}  // namespace setlab
