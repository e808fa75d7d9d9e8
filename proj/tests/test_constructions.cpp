#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cpda/constructions.hpp"
#include "cpda/cpda.hpp"
#include "support/oracles.hpp"

using namespace cpda;

namespace {
constexpr Entry S = kStar;
}

TEST_CASE("man_pda reproduces the K=3 t=1 array") {
  PdaArray expected =
      PdaArray::from_rows({{S, 1, 2}, {1, S, 3}, {2, 3, S}}, 3);
  CHECK(man_pda({3, 1}) == expected);
}

TEST_CASE("man_pda parameter tuples over K <= 8") {
  for (int k = 1; k <= 8; ++k)
    for (int t = 0; t <= k; ++t) {
      PdaArray array = man_pda({k, t});
      auto report = check_pda(array);
      CHECK(report.is_valid);
      CHECK(array.num_cols() == k);
      CHECK(array.num_rows() == static_cast<int>(binomial_u64(k, t)));
      CHECK(report.z == static_cast<int>(binomial_u64(k - 1, t - 1)));
      CHECK(report.s == static_cast<int>(binomial_u64(k, t + 1)));
      if (report.s > 0) {
        REQUIRE(report.g_regular.has_value());
        CHECK(*report.g_regular == t + 1);
      } else {
        CHECK(!report.g_regular.has_value());
      }
    }
}

TEST_CASE("man_pda edge parameters") {
  PdaArray full = man_pda({4, 4});  // caches everything, one all-star row
  CHECK(full.num_rows() == 1);
  CHECK(full.symbol_count() == 0);
  CHECK(check_pda(full).is_valid);

  PdaArray empty = man_pda({4, 0});  // no cache, one row of distinct symbols
  CHECK(empty.num_rows() == 1);
  CHECK(empty.symbol_count() == 4);
  for (int c = 0; c < 4; ++c) CHECK(empty.at(0, c) == c + 1);
}

TEST_CASE("man_pda rejects bad parameters") {
  CHECK_THROWS_AS(man_pda({0, 0}), CpdaError);
  CHECK_THROWS_AS(man_pda({3, 4}), CpdaError);
  CHECK_THROWS_AS(man_pda({3, -1}), CpdaError);
}

TEST_CASE("lemma1_pda reproduces the q=2 m=1 array") {
  PdaArray expected = PdaArray::from_rows({{S, 2, S, 1}, {1, S, 2, S}}, 2);
  CHECK(lemma1_pda({2, 1}) == expected);
}

TEST_CASE("lemma1_pda parameter tuples") {
  for (int q = 2; q <= 4; ++q)
    for (int m = 1; m <= 3; ++m) {
      if (std::pow(q, m) > 10000) continue;
      PdaArray array = lemma1_pda({q, m});
      auto report = check_pda(array);
      CHECK(report.is_valid);
      CHECK(array.num_cols() == (m + 1) * q);
      int f = 1;
      for (int i = 0; i < m; ++i) f *= q;
      CHECK(array.num_rows() == f);
      CHECK(report.z == f / q);
      CHECK(report.s == f * (q - 1));
      REQUIRE(report.g_regular.has_value());
      CHECK(*report.g_regular == m + 1);
    }
}

TEST_CASE("lemma2_pda parameter tuples") {
  for (int q = 2; q <= 4; ++q)
    for (int m = 1; m <= 3; ++m) {
      if ((q - 1) * std::pow(q, m) > 10000) continue;
      PdaArray array = lemma2_pda({q, m});
      auto report = check_pda(array);
      CHECK(report.is_valid);
      CHECK(array.num_cols() == (m + 1) * q);
      int f = q - 1;
      for (int i = 0; i < m; ++i) f *= q;
      CHECK(array.num_rows() == f);
      CHECK(report.z == f - f / (q - 1) / q * (q - 1));
      CHECK(report.s == f / (q - 1));
      REQUIRE(report.g_regular.has_value());
      CHECK(*report.g_regular == (q - 1) * (m + 1));
    }
}

TEST_CASE("grid constructions reject bad parameters") {
  CHECK_THROWS_AS(lemma1_pda({1, 1}), CpdaError);
  CHECK_THROWS_AS(lemma1_pda({2, 0}), CpdaError);
  CHECK_THROWS_AS(lemma2_pda({1, 2}), CpdaError);
  CHECK_THROWS_AS(lemma2_pda({3, 0}), CpdaError);
}

TEST_CASE("cutset_array_b reproduces the h=4 r=2 array") {
  CpdaScheme scheme = cutset_array_b(4, 2);
  PdaArray expected = PdaArray::from_rows(
      {
          {2, 3, 4, S, S, S},
          {1, S, S, 3, 4, S},
          {S, 1, S, 2, S, 4},
          {S, S, 1, S, 2, 3},
      },
      4);
  CHECK(scheme.array == expected);
  REQUIRE(scheme.labels.size() == 6);
  CHECK(scheme.labels[0].elems == std::vector<int>{1, 2});
  CHECK(scheme.labels[5].elems == std::vector<int>{3, 4});
  CHECK(scheme.relay_of_symbol == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("cutset_array_b parameters and loads over h <= 8") {
  for (int h = 2; h <= 8; ++h)
    for (int r = 1; r <= h; ++r) {
      CpdaScheme scheme = cutset_array_b(h, r);
      auto report = check_cpda(scheme, h, r);
      CHECK(report.is_valid);
      CHECK(scheme.array.num_cols() == static_cast<int>(binomial_u64(h, r)));
      CHECK(scheme.array.num_rows() ==
            static_cast<int>(binomial_u64(h, r - 1)));
      CHECK(report.pda.z ==
            static_cast<int>(binomial_u64(h, r - 1)) - r);
      CHECK(report.pda.s == h);
      for (auto load : report.per_relay_loads) CHECK(load == 1);
      CHECK(report.loads_equal);
      CHECK(cpda::testing::oracle_cpda_labels_ok(scheme.array,
                                                 scheme.labels));
    }
}

TEST_CASE("cutset_array_b rejects bad parameters") {
  CHECK_THROWS_AS(cutset_array_b(0, 1), CpdaError);
  CHECK_THROWS_AS(cutset_array_b(4, 5), CpdaError);
  CHECK_THROWS_AS(cutset_array_b(4, 0), CpdaError);
}
