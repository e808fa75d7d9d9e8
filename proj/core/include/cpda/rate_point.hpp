#pragma once

#include <string>

#include "cpda/rational.hpp"

namespace cpda {

// An exact (M/N, R, F) triple with provenance. h/r/n_files are 0 when the
// point is network- or library-agnostic (e.g. shared-link parameters).
struct RatePoint {
  std::string scheme;
  int h = 0;
  int r = 0;
  int n_files = 0;
  Rat memory_ratio;     // M/N
  Rat rate;             // R
  Int subpacketization; // F
};

}  // namespace cpda
