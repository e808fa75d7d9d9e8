#pragma once

#include <cstdint>
#include <vector>

#include "cpda/combinatorics.hpp"
#include "cpda/pda.hpp"

namespace cpda {

// A PDA whose columns carry r-subset labels and whose ordinary symbols are
// each designated to a relay shared by all columns containing the symbol.
struct CpdaScheme {
  PdaArray array;
  std::vector<UserLabel> labels;       // one per column
  std::vector<int> relay_of_symbol;    // index s-1 holds the relay of symbol s
  int h = 0;
  int r = 0;
};

struct CpdaReport {
  PdaReport pda;
  bool is_valid = false;
  std::vector<std::uint64_t> per_relay_loads;  // index i-1 holds |S_i|
  bool loads_equal = false;
  std::vector<Violation> violations;  // label and relay designation problems
};

// Validates the PDA conditions plus the C-PDA labeling: labels are distinct
// r-subsets of [h], every symbol's columns share a relay, and the designated
// relay lies in that intersection. Structural problems are reported as
// violations, not thrown.
CpdaReport check_cpda(const CpdaScheme& scheme, int h, int r);

// Assigns each symbol the smallest relay common to all columns containing
// it. Throws EmptyIntersection if some symbol has no common relay.
std::vector<int> derive_relay_map(const PdaArray& array,
                                  const std::vector<UserLabel>& labels);

}  // namespace cpda
