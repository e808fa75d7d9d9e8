#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cpda/cpda.hpp"
#include "cpda/rational.hpp"
#include "cpda/transform.hpp"

namespace cpda {

struct NetworkInstance {
  int h = 0;
  int r = 0;
  int n_files = 0;
  std::int64_t file_bits = 0;
  std::vector<std::vector<std::uint8_t>> library;  // one entry per file
  std::uint64_t seed = 0;
};

// Deterministic pseudo-random library; identical seeds give identical bytes.
NetworkInstance make_library(int n_files, std::int64_t file_bits,
                             std::uint64_t seed);

struct Demand {
  std::map<UserLabel, int> request;  // user -> requested file in [1..N]
};

struct CodedPacket {
  int replica = 1;
  Entry symbol = 0;
  std::vector<std::uint8_t> bytes;
};

// Cached subpackets of one user, keyed by (file, subpacket index) where the
// subpacket index runs 1-based over the effective subpacketization
// (replica-major under replication).
struct UserCache {
  std::map<std::pair<int, int>, std::vector<std::uint8_t>> subpackets;
  std::int64_t bits = 0;

  std::vector<std::pair<int, int>> index() const;
  std::vector<std::uint8_t> raw_bytes() const;
};

using CacheContents = std::map<UserLabel, UserCache>;

struct Delivery {
  std::map<int, std::vector<CodedPacket>> relay_payloads;
  std::map<int, std::int64_t> per_relay_bits;
};

struct RoundReport {
  bool all_decoded = false;
  Rat max_relay_rate;
  std::vector<Rat> per_relay_rates;        // index relay-1
  std::vector<std::int64_t> per_relay_bits;
  std::int64_t f_effective = 0;
  Rat memory_ratio;
  int demands_run = 0;
  std::vector<std::string> failures;  // offending (demand, user) notes
};

struct DemandPolicy {
  enum class Kind { kExhaustive, kRandom, kFixed };
  Kind kind = Kind::kExhaustive;
  int count = 0;           // random draws
  std::uint64_t seed = 0;  // random draws
  Demand fixed;
};

// Placement: user T caches subpacket j of every file iff row j is a star at
// T's column. Under replication the j-th row of replica i maps to subpacket
// (i-1)*F + j of a file split into h*F pieces.
CacheContents place(const BalancedScheme& scheme, const NetworkInstance& net);
CacheContents place(const CpdaScheme& scheme, const NetworkInstance& net);

// Delivery: one coded packet per (replica, ordinary symbol), the XOR of the
// demanded subpackets at the symbol's occurrences, routed to its relay.
Delivery deliver(const BalancedScheme& scheme, const NetworkInstance& net,
                 const Demand& demand);
Delivery deliver(const CpdaScheme& scheme, const NetworkInstance& net,
                 const Demand& demand);

// Reconstructs the user's requested file from its cache plus the payloads of
// the relays in its label. Throws MissingPacket when a needed packet is not
// at any connected relay, CacheMiss when an XOR-out constituent is uncached.
std::vector<std::uint8_t> decode(const BalancedScheme& scheme,
                                 const NetworkInstance& net,
                                 const Demand& demand, const UserLabel& user,
                                 const Delivery& delivery,
                                 const UserCache& cache);
std::vector<std::uint8_t> decode(const CpdaScheme& scheme,
                                 const NetworkInstance& net,
                                 const Demand& demand, const UserLabel& user,
                                 const Delivery& delivery,
                                 const UserCache& cache);

// Full protocol over a demand set; asserts demand-oblivious per-relay bit
// counts and reports the measured worst-case per-relay rate.
RoundReport run_round(const BalancedScheme& scheme, const NetworkInstance& net,
                      const DemandPolicy& policy);
RoundReport run_round(const CpdaScheme& scheme, const NetworkInstance& net,
                      const DemandPolicy& policy);

}  // namespace cpda
