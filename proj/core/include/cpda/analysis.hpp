#pragma once

#include <string>

#include "cpda/rate_point.hpp"
#include "cpda/rational.hpp"

namespace cpda {

struct BoundPoint {
  int h = 0;
  int r = 0;
  int n_files = 0;
  Rat memory_ratio;
  Rat lower_bound;
  // Maximizing cut parameters, smallest t then smallest l on ties.
  int t = 0;
  int l = 0;
};

// Cut-set lower bound: max over t in [r..h], l in [1..min(N, C(t,r))] of
// (1/t)(l - l*M/ceil(N/l)), clamped at zero. M is absolute memory.
BoundPoint cutset_bound(int h, int r, int n_files, const Rat& m);

// Transformed-MAN rate/subpacketization on its memory grid
// M in {j*N/K~ : j = 0..K~}; OffGrid elsewhere.
RatePoint rate_tr(int h, int r, int n_files, const Rat& m);

// The same closed form evaluated at arbitrary memory, no grid check.
Rat rate_tr_formula(int h, int r, const Rat& memory_ratio);

// Closed-form low-subpacketization points: variant 1 at M/N = 1/q, variant 2
// at M/N = (q-1)/q.
RatePoint rate_lsub(int variant, int h, int r, int n_files, const Rat& m);

struct OptimalRate {
  RatePoint point;
  BoundPoint bound;
  bool equals_cutset = false;
};

// Optimal rate (1/r)(1 - M/N) for M/N >= (K-h+r-1)/K, with the cut-set
// bound evaluated alongside; OffRegion below the threshold.
OptimalRate optimal_rate_large_mem(int h, int r, int n_files, const Rat& m);

// CSV comparison over M/N = 1/q and (q-1)/q for q in [q_lo..q_hi], exact
// cells plus decimal convenience columns. Asserts the rate-ratio brackets
// and the strict corner-point gap for 2 <= r < h.
std::string compare_table(int h, int r, int n_files, int q_lo, int q_hi);

}  // namespace cpda
