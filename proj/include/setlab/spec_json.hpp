#pragma once

#include <string>

#include "setlab/generators.hpp"

namespace setlab {

// JSON document with "variant" (the variant name), "horizon", and the variant's own fields.
// Rationals are written as {"numerator": p, "denominator": q}; the reader also takes "p/q".
// Intervals are [lo, hi] pairs of rationals; blocks are half-open [start, end] pairs.
std::string spec_to_json(const GeneratorSpec& spec);
GeneratorSpec spec_from_json(const std::string& text);
GeneratorSpec read_spec_file(const std::string& path);

}  // namespace setlab
