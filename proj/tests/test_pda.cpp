#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cpda/constructions.hpp"
#include "cpda/pda.hpp"
#include "support/oracles.hpp"

using namespace cpda;

namespace {
constexpr Entry S = kStar;
}

TEST_CASE("PdaArray construction validates shape and symbol range") {
  CHECK_NOTHROW(PdaArray(2, 2, 1, {S, 1, 1, S}));
  CHECK_THROWS_AS(PdaArray(2, 2, 1, {S, 1, 1}), CpdaError);
  CHECK_THROWS_AS(PdaArray(2, 2, 1, {S, 2, 2, S}), CpdaError);
  CHECK_THROWS_AS(PdaArray(2, 2, 1, {S, -3, 1, S}), CpdaError);
  CHECK_THROWS_AS(PdaArray(0, 2, 0, {}), CpdaError);
}

TEST_CASE("check_pda accepts the worked 4x6 example") {
  // the (6,4,2,4) array B of the cut-set construction, checked by hand
  PdaArray array = PdaArray::from_rows(
      {
          {2, 3, 4, S, S, S},
          {1, S, S, 3, 4, S},
          {S, 1, S, 2, S, 4},
          {S, S, 1, S, 2, 3},
      },
      4);
  auto report = check_pda(array);
  CHECK(report.is_valid);
  CHECK(report.z == 2);
  CHECK(report.s == 4);
  REQUIRE(report.g_regular.has_value());
  CHECK(*report.g_regular == 3);
}

TEST_CASE("check_pda flags C1 violations") {
  PdaArray array =
      PdaArray::from_rows({{S, 1}, {1, S}, {S, 2}, {2, S}}, 2);
  auto report = check_pda(array);
  CHECK(report.is_valid);

  PdaArray uneven = PdaArray::from_rows({{S, 1}, {S, 2}, {2, 1}}, 2);
  report = check_pda(uneven);
  CHECK(!report.is_valid);
  bool saw = false;
  for (const auto& v : report.violations)
    saw = saw || v.kind == ViolationKind::StarCountMismatch;
  CHECK(saw);
}

TEST_CASE("check_pda flags missing symbols") {
  PdaArray gap = PdaArray::from_rows({{S, 1}, {1, S}}, 2);
  auto report = check_pda(gap);
  CHECK(!report.is_valid);
  bool saw = false;
  for (const auto& v : report.violations) {
    if (v.kind == ViolationKind::MissingSymbol) {
      saw = true;
      CHECK(v.symbol == 2);
    }
  }
  CHECK(saw);
}

TEST_CASE("check_pda flags C3 violations with both positions") {
  PdaArray repeat = PdaArray::from_rows({{1, 1}, {S, S}}, 1);
  auto report = check_pda(repeat);
  CHECK(!report.is_valid);
  REQUIRE(!report.violations.empty());
  CHECK(report.violations[0].kind == ViolationKind::RepeatedInLine);

  PdaArray cross = PdaArray::from_rows({{1, 2}, {2, 1}}, 2);
  report = check_pda(cross);
  CHECK(!report.is_valid);
  bool saw = false;
  for (const auto& v : report.violations)
    if (v.kind == ViolationKind::MissingStarPair) {
      saw = true;
      CHECK(v.row1 != v.row2);
      CHECK(v.col1 != v.col2);
    }
  CHECK(saw);
}

TEST_CASE("g_regular reported only for regular arrays with symbols") {
  PdaArray all_star = PdaArray::from_rows({{S, S}}, 0);
  auto report = check_pda(all_star);
  CHECK(report.is_valid);
  CHECK(!report.g_regular.has_value());

  PdaArray irregular = PdaArray::from_rows(
      {{S, 1, 2}, {1, S, 3}, {2, 3, S}, {4, 5, 6}}, 6);
  // symbols 1..3 occur twice, 4..6 once; C1 and C3 still hold
  report = check_pda(irregular);
  CHECK(report.is_valid);
  CHECK(!report.g_regular.has_value());
}

TEST_CASE("check_pda agrees with the brute-force oracle on random arrays") {
  std::mt19937_64 rng(7123);
  for (int round = 0; round < 120; ++round) {
    int k = 2 + cpda::testing::rng_below(rng, 6);
    PdaArray array = cpda::testing::random_base_pda(k, rng);
    std::string why;
    bool oracle = cpda::testing::oracle_pda_valid(array, &why);
    auto report = check_pda(array);
    CHECK_MESSAGE(report.is_valid == oracle, "round ", round, ": ", why);
    CHECK(report.is_valid);
  }
}

TEST_CASE("corrupted arrays fail both checker and oracle") {
  std::mt19937_64 rng(99);
  int agreements = 0;
  for (int round = 0; round < 120; ++round) {
    int k = 3 + cpda::testing::rng_below(rng, 4);
    PdaArray array = cpda::testing::random_base_pda(k, rng);
    if (array.symbol_count() == 0) continue;
    // overwrite one random cell with a random ordinary symbol
    std::vector<Entry> cells;
    for (int i = 0; i < array.num_rows(); ++i)
      for (int c = 0; c < array.num_cols(); ++c)
        cells.push_back(array.at(i, c));
    std::size_t pos = static_cast<std::size_t>(cpda::testing::rng_below(
        rng, static_cast<int>(cells.size())));
    Entry replacement =
        1 + cpda::testing::rng_below(rng, array.symbol_count());
    if (cells[pos] == replacement) continue;
    cells[pos] = replacement;
    PdaArray mutated(array.num_rows(), array.num_cols(),
                     array.symbol_count(), std::move(cells));
    bool oracle = cpda::testing::oracle_pda_valid(mutated);
    CHECK(check_pda(mutated).is_valid == oracle);
    ++agreements;
  }
  CHECK(agreements > 50);
}

TEST_CASE("delete_columns renumbers survivors in order") {
  PdaArray array = PdaArray::from_rows({{S, 1, 2}, {1, S, 3}, {2, 3, S}}, 3);
  PdaArray cut = delete_columns(array, {0});
  CHECK(cut.num_cols() == 2);
  CHECK(cut.symbol_count() == 3);  // all symbols survive in columns 2,3
  CHECK(check_pda(cut).is_valid);

  PdaArray cut2 = delete_columns(array, {1, 2});
  // only column 1 remains, symbols 1 and 2 survive
  CHECK(cut2.num_cols() == 1);
  CHECK(cut2.symbol_count() == 2);
  CHECK(cut2.at(1, 0) == 1);
  CHECK(cut2.at(2, 0) == 2);
}

TEST_CASE("delete_columns drops vanished symbols entirely") {
  PdaArray array = PdaArray::from_rows({{1, S}, {S, 2}}, 2);
  PdaArray cut = delete_columns(array, {1});
  CHECK(cut.symbol_count() == 1);
  CHECK(cut.at(0, 0) == 1);
  CHECK(cut.is_star(1, 0));
}

TEST_CASE("occurrences indexes positions by symbol") {
  PdaArray array = PdaArray::from_rows({{S, 1}, {1, S}}, 1);
  auto occ = array.occurrences();
  REQUIRE(occ.size() == 1);
  REQUIRE(occ[0].size() == 2);
  CHECK(occ[0][0] == std::pair<int, int>{0, 1});
  CHECK(occ[0][1] == std::pair<int, int>{1, 0});
}

TEST_CASE("scheme_params reports exact memory and rate") {
  PdaArray array = man_pda({3, 1});
  RatePoint point = scheme_params(array, 6);
  CHECK(point.memory_ratio == Rat(1, 3));
  CHECK(point.rate == Rat(1));
  CHECK(point.subpacketization == 3);
}
