#include "cpda/cpda.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <utility>

namespace cpda {

namespace {

// Sorted intersection of the labels of the given occurrence columns.
std::vector<int> common_relays(
    const std::vector<std::pair<int, int>>& occurrences,
    const std::vector<UserLabel>& labels) {
  std::vector<int> common;
  bool first = true;
  for (const auto& [row, col] : occurrences) {
    const auto& elems = labels[static_cast<std::size_t>(col)].elems;
    if (first) {
      common = elems;
      first = false;
      continue;
    }
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), elems.begin(),
                          elems.end(), std::back_inserter(next));
    common = std::move(next);
    if (common.empty()) break;
  }
  return common;
}

}  // namespace

CpdaReport check_cpda(const CpdaScheme& scheme, int h, int r) {
  require(h >= 1 && r >= 1 && r <= h, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  CpdaReport report;
  report.pda = check_pda(scheme.array);
  report.per_relay_loads.assign(static_cast<std::size_t>(h), 0);

  const PdaArray& array = scheme.array;
  int k = array.num_cols();

  bool labels_usable = static_cast<int>(scheme.labels.size()) == k;
  if (!labels_usable) {
    report.violations.push_back(
        {ViolationKind::LabelMismatch, -1, -1, -1, -1, 0,
         "label count " + std::to_string(scheme.labels.size()) +
             " does not match column count " + std::to_string(k)});
  } else {
    std::set<UserLabel> seen;
    for (int c = 0; c < k; ++c) {
      const UserLabel& label = scheme.labels[static_cast<std::size_t>(c)];
      if (label.size() != r || label.elems.empty() ||
          label.elems.back() > h) {
        report.violations.push_back(
            {ViolationKind::LabelMismatch, -1, c, -1, -1, 0,
             "column label " + label.to_string() +
                 " is not an r-subset of [h]"});
        labels_usable = false;
      } else if (!seen.insert(label).second) {
        report.violations.push_back(
            {ViolationKind::LabelMismatch, -1, c, -1, -1, 0,
             "duplicate column label " + label.to_string()});
      }
    }
  }

  bool relay_map_ok =
      static_cast<int>(scheme.relay_of_symbol.size()) == array.symbol_count();
  if (!relay_map_ok)
    report.violations.push_back(
        {ViolationKind::BadRelayAssignment, -1, -1, -1, -1, 0,
         "relay map has " + std::to_string(scheme.relay_of_symbol.size()) +
             " entries for " + std::to_string(array.symbol_count()) +
             " symbols"});

  auto occurrences = array.occurrences();
  for (Entry s = 1; s <= array.symbol_count(); ++s) {
    const auto& occ = occurrences[static_cast<std::size_t>(s) - 1];
    if (occ.empty()) continue;  // flagged by check_pda
    std::vector<int> common;
    if (labels_usable) {
      common = common_relays(occ, scheme.labels);
      if (common.empty()) {
        report.violations.push_back(
            {ViolationKind::EmptyIntersection, -1, -1, -1, -1, s,
             "columns of symbol " + std::to_string(s) + " share no relay"});
        continue;
      }
    }
    if (!relay_map_ok) continue;
    int relay = scheme.relay_of_symbol[static_cast<std::size_t>(s) - 1];
    bool in_common =
        !labels_usable ||
        std::binary_search(common.begin(), common.end(), relay);
    if (relay < 1 || relay > h || !in_common) {
      report.violations.push_back(
          {ViolationKind::BadRelayAssignment, -1, -1, -1, -1, s,
           "symbol " + std::to_string(s) + " designated to relay " +
               std::to_string(relay) + " outside its common label set"});
      continue;
    }
    ++report.per_relay_loads[static_cast<std::size_t>(relay) - 1];
  }

  report.loads_equal =
      std::all_of(report.per_relay_loads.begin(), report.per_relay_loads.end(),
                  [&](std::uint64_t v) {
                    return v == report.per_relay_loads.front();
                  });
  report.is_valid = report.pda.is_valid && report.violations.empty();
  return report;
}

std::vector<int> derive_relay_map(const PdaArray& array,
                                  const std::vector<UserLabel>& labels) {
  require(static_cast<int>(labels.size()) == array.num_cols(),
          ErrorCode::ShapeMismatch, "one label per column required");
  auto occurrences = array.occurrences();
  std::vector<int> relays;
  relays.reserve(static_cast<std::size_t>(array.symbol_count()));
  for (Entry s = 1; s <= array.symbol_count(); ++s) {
    const auto& occ = occurrences[static_cast<std::size_t>(s) - 1];
    if (occ.empty()) {  // missing symbol, left for check_pda to report
      relays.push_back(1);
      continue;
    }
    auto common = common_relays(occ, labels);
    require(!common.empty(), ErrorCode::EmptyIntersection,
            "symbol has no common relay", "symbol " + std::to_string(s));
    relays.push_back(common.front());
  }
  return relays;
}

}  // namespace cpda
