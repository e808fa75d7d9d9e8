#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpda/cpda.hpp"
#include "cpda/pda.hpp"
#include "cpda/resolvable.hpp"
#include "cpda/simulator.hpp"
#include "cpda/transform.hpp"

namespace cpda {

// Interchange format: {"f", "k", "s", "rows", optional "labels", optional
// "relay_of_symbol"}. Keys serialize alphabetically, so round-trips are
// byte-stable. Stars are the string "*", ordinary symbols integers.

std::string pda_to_json(const PdaArray& array);
std::string cpda_to_json(const CpdaScheme& scheme);

struct LoadedArray {
  PdaArray array;
  std::optional<std::vector<UserLabel>> labels;
  std::optional<std::vector<int>> relay_of_symbol;
};

LoadedArray parse_pda_json(const std::string& text);

// Requires labels; derives the relay map when the field is absent. h is
// inferred as the largest labeled relay, r as the label size.
CpdaScheme parse_cpda_json(const std::string& text);

std::string partition_to_json(const ParallelClassPartition& partition);
ParallelClassPartition parse_partition_json(const std::string& text);

// Replicated schemes: {"base_f", "replicas", "subpacketization"}.
std::string balanced_to_json(const BalancedScheme& scheme);
BalancedScheme parse_balanced_json(const std::string& text);

// Simulation report: {"F", "M_over_N", "all_decoded", "max_rate",
// "per_relay_bits"}.
std::string report_to_json(const RoundReport& report);

}  // namespace cpda
