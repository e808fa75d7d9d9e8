#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpda/constructions.hpp"
#include "cpda/cpda.hpp"
#include "cpda/resolvable.hpp"
#include "cpda/transform.hpp"
#include "support/oracles.hpp"

using namespace cpda;

namespace {

CpdaScheme table_one() {
  PdaArray base = man_pda({3, 1});
  return transform_to_cpda({base, 4, 2, parallel_classes(4, 2)});
}

}  // namespace

TEST_CASE("check_cpda accepts the worked 6x6 scheme with loads 3,3,3,3") {
  CpdaScheme scheme = table_one();
  auto report = check_cpda(scheme, 4, 2);
  CHECK(report.is_valid);
  CHECK(report.pda.is_valid);
  CHECK(report.per_relay_loads == std::vector<std::uint64_t>{3, 3, 3, 3});
  CHECK(report.loads_equal);
  CHECK(cpda::testing::oracle_cpda_labels_ok(scheme.array, scheme.labels));
}

TEST_CASE("reordering labels can break the intersection condition") {
  CpdaScheme scheme = table_one();
  // swapping the labels of columns 2 and 3 hands symbol 1's two columns the
  // complementary labels {1,2} and {3,4}
  std::swap(scheme.labels[1], scheme.labels[2]);
  auto report = check_cpda(scheme, 4, 2);
  CHECK(!report.is_valid);
  bool saw = false;
  for (const auto& v : report.violations)
    saw = saw || v.kind == ViolationKind::EmptyIntersection;
  CHECK(saw);
  CHECK(!cpda::testing::oracle_cpda_labels_ok(scheme.array, scheme.labels));
}

TEST_CASE("swapping whole classes of labels keeps the condition intact") {
  CpdaScheme scheme = table_one();
  // classes swap wholesale: each symbol's columns still share a relay, only
  // the designated relay map goes stale
  std::swap(scheme.labels[0], scheme.labels[2]);
  std::swap(scheme.labels[1], scheme.labels[3]);
  CHECK(cpda::testing::oracle_cpda_labels_ok(scheme.array, scheme.labels));
  auto report = check_cpda(scheme, 4, 2);
  CHECK(!report.is_valid);
  bool saw = false;
  for (const auto& v : report.violations)
    saw = saw || v.kind == ViolationKind::BadRelayAssignment;
  CHECK(saw);
  scheme.relay_of_symbol = derive_relay_map(scheme.array, scheme.labels);
  CHECK(check_cpda(scheme, 4, 2).is_valid);
}

TEST_CASE("check_cpda flags wrong label shapes") {
  CpdaScheme scheme = table_one();
  scheme.labels[1] = UserLabel({1, 2, 3});
  auto report = check_cpda(scheme, 4, 2);
  CHECK(!report.is_valid);
  bool saw = false;
  for (const auto& v : report.violations)
    saw = saw || v.kind == ViolationKind::LabelMismatch;
  CHECK(saw);
}

TEST_CASE("check_cpda flags duplicate labels") {
  CpdaScheme scheme = table_one();
  scheme.labels[1] = scheme.labels[0];
  auto report = check_cpda(scheme, 4, 2);
  CHECK(!report.is_valid);
}

TEST_CASE("check_cpda flags a relay outside the intersection") {
  CpdaScheme scheme = table_one();
  scheme.relay_of_symbol[0] = 4;  // symbol 1 lives under columns {1,2},{1,3}
  auto report = check_cpda(scheme, 4, 2);
  CHECK(!report.is_valid);
  bool saw = false;
  for (const auto& v : report.violations)
    saw = saw || v.kind == ViolationKind::BadRelayAssignment;
  CHECK(saw);
}

TEST_CASE("check_cpda flags a relay map of the wrong size") {
  CpdaScheme scheme = table_one();
  scheme.relay_of_symbol.pop_back();
  auto report = check_cpda(scheme, 4, 2);
  CHECK(!report.is_valid);
}

TEST_CASE("derive_relay_map picks a member of every intersection") {
  CpdaScheme scheme = table_one();
  auto derived = derive_relay_map(scheme.array, scheme.labels);
  REQUIRE(derived.size() == 12);
  auto occ = scheme.array.occurrences();
  for (int s = 1; s <= 12; ++s) {
    for (auto [row, col] : occ[static_cast<std::size_t>(s - 1)])
      CHECK(scheme.labels[static_cast<std::size_t>(col)].contains(
          derived[static_cast<std::size_t>(s - 1)]));
  }
}

TEST_CASE("derive_relay_map rejects unlabelable arrays") {
  CpdaScheme scheme = table_one();
  std::swap(scheme.labels[1], scheme.labels[2]);
  CHECK_THROWS_AS(derive_relay_map(scheme.array, scheme.labels), CpdaError);
  try {
    derive_relay_map(scheme.array, scheme.labels);
  } catch (const CpdaError& e) {
    CHECK(e.code() == ErrorCode::EmptyIntersection);
  }
}

TEST_CASE("per-relay loads count symbols, not occurrences") {
  CpdaScheme scheme = cutset_array_b(5, 2);
  auto report = check_cpda(scheme, 5, 2);
  CHECK(report.is_valid);
  CHECK(report.per_relay_loads ==
        std::vector<std::uint64_t>{1, 1, 1, 1, 1});
}
