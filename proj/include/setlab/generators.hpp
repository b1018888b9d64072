#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "setlab/window_set.hpp"

namespace setlab {

struct Rational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  static Rational parse(const std::string& text);  // "p/q" or "p"
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);

// Open interval (lo, hi) of the circle [0, 1).
struct RationalInterval {
  Rational lo;
  Rational hi;
};

struct RotationReturns {
  Rational alpha;
  Rational x0;
  std::vector<RationalInterval> intervals;
};
struct Beatty {
  Rational alpha;
};
struct EvenNu2 {};
struct Chacon {};
struct DyadicBlocks {
  std::size_t k = 2;
  // residue required in block [2^n, 2^(n+1)) is block_parity_rule[n mod size]
  std::vector<std::size_t> block_parity_rule;
};
struct Block {
  std::size_t start = 0;  // half-open [start, end)
  std::size_t end = 0;
};
struct ResidueThickUnion {
  std::vector<std::size_t> moduli;
  std::vector<std::size_t> residues;
  // block j is assigned to modulus j mod moduli.size()
  std::vector<Block> schedule;
};
struct FsSet {
  std::vector<std::size_t> generators;
};
struct ThickSchedule {
  std::vector<Block> blocks;
};

using GeneratorVariant =
    std::variant<RotationReturns, Beatty, EvenNu2, Chacon, DyadicBlocks, ResidueThickUnion, FsSet, ThickSchedule>;

struct GeneratorSpec {
  GeneratorVariant variant;
  std::size_t horizon = 0;
};

std::string variant_name(const GeneratorVariant& v);

WindowSet generate(const GeneratorSpec& spec);

// The two-block-parity set: evens on [2^n, 2^(n+1)) for even n, odds for odd n.
DyadicBlocks two_block_parity_preset();

// Chacon word over {0,1} from seed "0" under 0 -> 0010, 1 -> 1, cut to `length`.
std::string chacon_word(std::size_t length);

// Continued-fraction convergent p/q of sqrt(n) (n not a square) with q >= min_denominator.
Rational sqrt_convergent(std::uint64_t n, std::int64_t min_denominator);
// Convergent of the golden ratio with denominator >= min_denominator.
Rational golden_convergent(std::int64_t min_denominator);
// Fractional part.
Rational frac(const Rational& r);

// The 20 rotation return sets used as a fixed dynamically syndetic battery:
// five irrational surrogates times four open intervals, base point 0, times n >= 1.
struct BatteryMember {
  std::string name;
  GeneratorSpec spec;
};
std::vector<BatteryMember> rotation_battery(std::size_t horizon);

GeneratorSpec geometric_residue_union(std::vector<std::size_t> moduli, std::vector<std::size_t> residues,
                                      std::size_t horizon);

}  // namespace setlab
