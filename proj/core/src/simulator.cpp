#include "cpda/simulator.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cpda {

namespace {

// Shared per-round geometry: effective subpacketization, sizes, per-replica
// column lookup.
struct Geometry {
  int h = 0;
  int num_replicas = 0;
  int rows = 0;              // F of one replica
  std::int64_t f_effective = 0;
  std::int64_t subpacket_bytes = 0;
  std::vector<std::map<UserLabel, int>> column_of;  // per replica
};

Geometry make_geometry(const BalancedScheme& scheme,
                       const NetworkInstance& net) {
  require(!scheme.replicas.empty(), ErrorCode::ShapeMismatch,
          "scheme has no replicas");
  const CpdaScheme& first = scheme.replicas.front();
  require(first.h >= 1, ErrorCode::ParamOutOfRange, "scheme h not set");
  require(net.n_files >= 1 &&
              net.library.size() == static_cast<std::size_t>(net.n_files),
          ErrorCode::ShapeMismatch, "library does not match n_files");

  Geometry geo;
  geo.h = first.h;
  geo.num_replicas = static_cast<int>(scheme.replicas.size());
  geo.rows = first.array.num_rows();
  geo.f_effective = static_cast<std::int64_t>(geo.num_replicas) * geo.rows;
  require(scheme.subpacketization == geo.f_effective,
          ErrorCode::ShapeMismatch,
          "subpacketization does not match replica count");
  require(net.file_bits > 0 && net.file_bits % 8 == 0,
          ErrorCode::DivisibilityError, "file size must be whole bytes");
  std::int64_t file_bytes = net.file_bits / 8;
  require(file_bytes % geo.f_effective == 0, ErrorCode::DivisibilityError,
          "file bytes must be divisible by the subpacketization",
          std::to_string(file_bytes) + " / " +
              std::to_string(geo.f_effective));
  geo.subpacket_bytes = file_bytes / geo.f_effective;

  for (const auto& replica : scheme.replicas) {
    require(replica.array.num_rows() == geo.rows &&
                replica.array.num_cols() == first.array.num_cols() &&
                replica.h == geo.h,
            ErrorCode::ShapeMismatch, "replicas disagree on shape");
    std::map<UserLabel, int> cols;
    for (int c = 0; c < replica.array.num_cols(); ++c)
      cols.emplace(replica.labels[static_cast<std::size_t>(c)], c);
    require(static_cast<int>(cols.size()) == replica.array.num_cols(),
            ErrorCode::LabelMismatch, "duplicate labels in a replica");
    geo.column_of.push_back(std::move(cols));
  }
  // Replicas must shuffle one common user set.
  for (const auto& cols : geo.column_of)
    for (const auto& [label, col] : geo.column_of.front())
      require(cols.count(label) == 1, ErrorCode::LabelMismatch,
              "replicas disagree on the user set", label.to_string());
  return geo;
}

const std::vector<std::uint8_t>& file_of(const NetworkInstance& net, int d) {
  require(d >= 1 && d <= net.n_files, ErrorCode::ParamOutOfRange,
          "file index out of range", std::to_string(d));
  return net.library[static_cast<std::size_t>(d) - 1];
}

// Subpacket (i-1)*F + j of file d, as a copy.
std::vector<std::uint8_t> subpacket(const NetworkInstance& net,
                                    const Geometry& geo, int d,
                                    int global_row) {
  const auto& bytes = file_of(net, d);
  auto begin = bytes.begin() + static_cast<std::ptrdiff_t>(
                                   global_row * geo.subpacket_bytes);
  return std::vector<std::uint8_t>(begin, begin + geo.subpacket_bytes);
}

void xor_into(std::vector<std::uint8_t>& acc,
              const std::vector<std::uint8_t>& other) {
  require(acc.size() == other.size(), ErrorCode::ShapeMismatch,
          "XOR operands of unequal size");
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= other[i];
}

int demanded(const Demand& demand, const UserLabel& user, int n_files) {
  auto it = demand.request.find(user);
  require(it != demand.request.end(), ErrorCode::NotMember,
          "demand does not cover user", user.to_string());
  require(it->second >= 1 && it->second <= n_files,
          ErrorCode::ParamOutOfRange, "demanded file out of range",
          user.to_string());
  return it->second;
}

std::string demand_to_string(const Demand& demand) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& [user, d] : demand.request) {
    if (!first) out << ' ';
    first = false;
    out << user.to_string() << "->" << d;
  }
  out << ')';
  return out.str();
}

BalancedScheme as_balanced(const CpdaScheme& scheme) {
  return BalancedScheme{{scheme}, scheme.array.num_rows()};
}

}  // namespace

std::vector<std::pair<int, int>> UserCache::index() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(subpackets.size());
  for (const auto& [key, bytes] : subpackets) out.push_back(key);
  return out;
}

std::vector<std::uint8_t> UserCache::raw_bytes() const {
  std::vector<std::uint8_t> out;
  for (const auto& [key, bytes] : subpackets)
    out.insert(out.end(), bytes.begin(), bytes.end());
  return out;
}

NetworkInstance make_library(int n_files, std::int64_t file_bits,
                             std::uint64_t seed) {
  require(n_files >= 1, ErrorCode::ParamOutOfRange, "need at least one file");
  require(file_bits > 0 && file_bits % 8 == 0, ErrorCode::DivisibilityError,
          "file_bits must be a positive multiple of 8");
  NetworkInstance net;
  net.n_files = n_files;
  net.file_bits = file_bits;
  net.seed = seed;
  // Raw engine words, not a distribution: byte streams must be identical
  // across standard libraries.
  std::mt19937_64 engine(seed);
  std::uint64_t word = 0;
  int available = 0;
  net.library.resize(static_cast<std::size_t>(n_files));
  for (auto& file : net.library) {
    file.resize(static_cast<std::size_t>(file_bits / 8));
    for (auto& byte : file) {
      if (available == 0) {
        word = engine();
        available = 8;
      }
      byte = static_cast<std::uint8_t>(word & 0xff);
      word >>= 8;
      --available;
    }
  }
  return net;
}

CacheContents place(const BalancedScheme& scheme, const NetworkInstance& net) {
  Geometry geo = make_geometry(scheme, net);
  CacheContents caches;
  for (const auto& [user, col0] : geo.column_of.front()) caches[user] = {};

  for (int ri = 0; ri < geo.num_replicas; ++ri) {
    const CpdaScheme& replica = scheme.replicas[static_cast<std::size_t>(ri)];
    for (auto& [user, cache] : caches) {
      int col = geo.column_of[static_cast<std::size_t>(ri)].at(user);
      for (int j = 0; j < geo.rows; ++j) {
        if (!replica.array.is_star(j, col)) continue;
        int global_row = ri * geo.rows + j;
        for (int d = 1; d <= net.n_files; ++d) {
          cache.subpackets.emplace(std::make_pair(d, global_row + 1),
                                   subpacket(net, geo, d, global_row));
          cache.bits += geo.subpacket_bytes * 8;
        }
      }
    }
  }
  return caches;
}

CacheContents place(const CpdaScheme& scheme, const NetworkInstance& net) {
  return place(as_balanced(scheme), net);
}

Delivery deliver(const BalancedScheme& scheme, const NetworkInstance& net,
                 const Demand& demand) {
  Geometry geo = make_geometry(scheme, net);
  Delivery delivery;
  for (int relay = 1; relay <= geo.h; ++relay) {
    delivery.relay_payloads[relay];
    delivery.per_relay_bits[relay] = 0;
  }

  for (int ri = 0; ri < geo.num_replicas; ++ri) {
    const CpdaScheme& replica = scheme.replicas[static_cast<std::size_t>(ri)];
    auto occurrences = replica.array.occurrences();
    for (Entry s = 1; s <= replica.array.symbol_count(); ++s) {
      CodedPacket packet;
      packet.replica = ri + 1;
      packet.symbol = s;
      packet.bytes.assign(static_cast<std::size_t>(geo.subpacket_bytes), 0);
      for (const auto& [j, col] : occurrences[static_cast<std::size_t>(s) -
                                              1]) {
        const UserLabel& user = replica.labels[static_cast<std::size_t>(col)];
        int d = demanded(demand, user, net.n_files);
        xor_into(packet.bytes, subpacket(net, geo, d, ri * geo.rows + j));
      }
      int relay = replica.relay_of_symbol[static_cast<std::size_t>(s) - 1];
      delivery.per_relay_bits[relay] += geo.subpacket_bytes * 8;
      delivery.relay_payloads[relay].push_back(std::move(packet));
    }
  }
  return delivery;
}

Delivery deliver(const CpdaScheme& scheme, const NetworkInstance& net,
                 const Demand& demand) {
  return deliver(as_balanced(scheme), net, demand);
}

std::vector<std::uint8_t> decode(const BalancedScheme& scheme,
                                 const NetworkInstance& net,
                                 const Demand& demand, const UserLabel& user,
                                 const Delivery& delivery,
                                 const UserCache& cache) {
  Geometry geo = make_geometry(scheme, net);
  int d_user = demanded(demand, user, net.n_files);
  std::vector<std::uint8_t> out(
      static_cast<std::size_t>(net.file_bits / 8));

  auto cached = [&](int d, int global_row) -> const std::vector<std::uint8_t>& {
    auto it = cache.subpackets.find({d, global_row + 1});
    require(it != cache.subpackets.end(), ErrorCode::CacheMiss,
            "subpacket not in cache",
            "file " + std::to_string(d) + ", piece " +
                std::to_string(global_row + 1));
    return it->second;
  };

  for (int ri = 0; ri < geo.num_replicas; ++ri) {
    const CpdaScheme& replica = scheme.replicas[static_cast<std::size_t>(ri)];
    auto it = geo.column_of[static_cast<std::size_t>(ri)].find(user);
    require(it != geo.column_of[static_cast<std::size_t>(ri)].end(),
            ErrorCode::NotMember, "user not in scheme", user.to_string());
    int col = it->second;
    auto occurrences = replica.array.occurrences();

    for (int j = 0; j < geo.rows; ++j) {
      int global_row = ri * geo.rows + j;
      std::vector<std::uint8_t> piece;
      Entry e = replica.array.at(j, col);
      if (e == kStar) {
        piece = cached(d_user, global_row);
      } else {
        // Fetch the symbol's packet from a relay this user is connected to.
        const CodedPacket* packet = nullptr;
        for (int relay : user.elems) {
          auto payload = delivery.relay_payloads.find(relay);
          if (payload == delivery.relay_payloads.end()) continue;
          for (const auto& candidate : payload->second)
            if (candidate.replica == ri + 1 && candidate.symbol == e) {
              packet = &candidate;
              break;
            }
          if (packet) break;
        }
        require(packet != nullptr, ErrorCode::MissingPacket,
                "no connected relay carries the needed packet",
                "symbol " + std::to_string(e) + " for user " +
                    user.to_string());
        piece = packet->bytes;
        for (const auto& [j2, col2] :
             occurrences[static_cast<std::size_t>(e) - 1]) {
          if (col2 == col) continue;
          require(replica.array.is_star(j2, col),
                  ErrorCode::CacheMiss,
                  "constituent subpacket is not starred at this user",
                  "symbol " + std::to_string(e));
          const UserLabel& other =
              replica.labels[static_cast<std::size_t>(col2)];
          int d_other = demanded(demand, other, net.n_files);
          xor_into(piece, cached(d_other, ri * geo.rows + j2));
        }
      }
      std::copy(piece.begin(), piece.end(),
                out.begin() + static_cast<std::ptrdiff_t>(
                                  global_row * geo.subpacket_bytes));
    }
  }
  return out;
}

std::vector<std::uint8_t> decode(const CpdaScheme& scheme,
                                 const NetworkInstance& net,
                                 const Demand& demand, const UserLabel& user,
                                 const Delivery& delivery,
                                 const UserCache& cache) {
  return decode(as_balanced(scheme), net, demand, user, delivery, cache);
}

namespace {

std::vector<Demand> demand_list(const Geometry& geo, int n_files,
                                const DemandPolicy& policy) {
  std::vector<UserLabel> users;
  for (const auto& [user, col] : geo.column_of.front()) users.push_back(user);

  std::vector<Demand> demands;
  switch (policy.kind) {
    case DemandPolicy::Kind::kFixed:
      demands.push_back(policy.fixed);
      break;
    case DemandPolicy::Kind::kRandom: {
      require(policy.count >= 1, ErrorCode::ParamOutOfRange,
              "random demand count must be positive");
      std::mt19937_64 engine(policy.seed);
      for (int i = 0; i < policy.count; ++i) {
        Demand demand;
        for (const auto& user : users)
          demand.request[user] =
              1 + static_cast<int>(engine() %
                                   static_cast<std::uint64_t>(n_files));
        demands.push_back(std::move(demand));
      }
      break;
    }
    case DemandPolicy::Kind::kExhaustive: {
      std::vector<int> odometer(users.size(), 1);
      while (true) {
        Demand demand;
        for (std::size_t i = 0; i < users.size(); ++i)
          demand.request[users[i]] = odometer[i];
        demands.push_back(std::move(demand));
        std::size_t pos = 0;
        while (pos < odometer.size() && odometer[pos] == n_files)
          odometer[pos++] = 1;
        if (pos == odometer.size()) break;
        ++odometer[pos];
      }
      break;
    }
  }
  return demands;
}

}  // namespace

RoundReport run_round(const BalancedScheme& scheme, const NetworkInstance& net,
                      const DemandPolicy& policy) {
  Geometry geo = make_geometry(scheme, net);
  RoundReport report;
  report.f_effective = geo.f_effective;
  report.memory_ratio = Rat(scheme.replicas.front().array.star_count(0),
                            scheme.replicas.front().array.num_rows());
  report.all_decoded = true;

  CacheContents caches = place(scheme, net);
  std::vector<Demand> demands = demand_list(geo, net.n_files, policy);
  bool first_demand = true;

  for (const auto& demand : demands) {
    Delivery delivery = deliver(scheme, net, demand);

    std::vector<std::int64_t> bits(static_cast<std::size_t>(geo.h), 0);
    for (const auto& [relay, count] : delivery.per_relay_bits)
      bits[static_cast<std::size_t>(relay) - 1] = count;
    if (first_demand) {
      report.per_relay_bits = bits;
      first_demand = false;
    } else {
      // Payload sizes are per-symbol, so they cannot depend on the demand.
      require(bits == report.per_relay_bits, ErrorCode::ConstructionInvalid,
              "per-relay bit counts vary across demands");
    }

    for (const auto& [user, cache] : caches) {
      std::vector<std::uint8_t> decoded;
      try {
        decoded = decode(scheme, net, demand, user, delivery, cache);
      } catch (const CpdaError& error) {
        report.all_decoded = false;
        report.failures.push_back(demand_to_string(demand) + " " +
                                  user.to_string() + ": " + error.what());
        continue;
      }
      int d = demanded(demand, user, net.n_files);
      if (decoded != file_of(net, d)) {
        report.all_decoded = false;
        report.failures.push_back(demand_to_string(demand) + " " +
                                  user.to_string() + ": byte mismatch");
      }
    }
    ++report.demands_run;
  }

  report.per_relay_rates.reserve(static_cast<std::size_t>(geo.h));
  Rat max_rate = 0;
  for (std::int64_t bits : report.per_relay_bits) {
    Rat rate(bits, net.file_bits);
    report.per_relay_rates.push_back(rate);
    max_rate = std::max(max_rate, rate);
  }
  report.max_relay_rate = max_rate;
  return report;
}

RoundReport run_round(const CpdaScheme& scheme, const NetworkInstance& net,
                      const DemandPolicy& policy) {
  return run_round(as_balanced(scheme), net, policy);
}

}  // namespace cpda
