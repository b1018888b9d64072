#pragma once

#include <string>

#include "setlab/window_set.hpp"

namespace setlab {

// Two-line text form:
//   H=<coded> E=<effective>
//   members: n1 n2 ...      or      runs: a1-b1 a2-b2 ...   (inclusive bounds)
// The writer picks whichever listing is shorter; the reader accepts both.
std::string to_text(const WindowSet& a);
WindowSet parse_set_text(const std::string& text);

WindowSet read_set_file(const std::string& path);
void write_set_file(const std::string& path, const WindowSet& a);

}  // namespace setlab
