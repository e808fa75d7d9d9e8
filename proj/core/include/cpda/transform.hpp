#pragma once

#include <cstdint>
#include <vector>

#include "cpda/cpda.hpp"
#include "cpda/pda.hpp"
#include "cpda/rate_point.hpp"
#include "cpda/rational.hpp"
#include "cpda/resolvable.hpp"

namespace cpda {

// Input of Transformation 1: a base PDA with one column per parallel class.
struct TransformSpec {
  PdaArray base;
  int h = 0;
  int r = 0;
  ParallelClassPartition partition;
};

// Either the scheme itself (when its per-relay loads are already equal) or h
// relay-shifted replicas whose summed loads are equal by construction.
struct BalancedScheme {
  std::vector<CpdaScheme> replicas;
  std::int64_t subpacketization = 0;
};

enum class ReducePolicy { kDropTrailing };

// Blows a (K~, F~, Z~, S~) base PDA up to a (C(h,r), rF~, rZ~, hS~) C-PDA.
// Row (i,j) of column T copies the base cell at (j, delta(T)), offsetting
// ordinary symbols by (T[i]-1)*S~; symbol block l belongs to relay l.
CpdaScheme transform_to_cpda(const TransformSpec& spec);

// Deletes trailing columns down to k_target and compacts symbol ids.
PdaArray reduce_columns_to(const PdaArray& array, int k_target,
                           ReducePolicy policy = ReducePolicy::kDropTrailing);

struct LsubResult {
  CpdaScheme scheme;
  RatePoint achieved;   // measured from the final array
  Rat rate_bound;       // closed-form guarantee the scheme must not exceed
  Int f_bound;          // closed-form subpacketization cap
};

// Low-subpacketization pipelines: grid PDA, column reduction to
// K~ = C(h-1,r-1), then Transformation 1. Variant 1 serves M/N = 1/q,
// variant 2 serves M/N = (q-1)/q.
LsubResult build_lsub1(int h, int r, int q,
                       const ParallelClassPartition& partition);
LsubResult build_lsub2(int h, int r, int q,
                       const ParallelClassPartition& partition);

// Equalizes per-relay loads by h-fold replication under the cyclic relay
// shifts; schemes that are already balanced pass through unchanged.
BalancedScheme balance_by_replication(const CpdaScheme& scheme, int h);

}  // namespace cpda
