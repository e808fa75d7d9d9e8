#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cpda/combinatorics.hpp"
#include "cpda/resolvable.hpp"
#include "support/oracles.hpp"

using namespace cpda;

TEST_CASE("binomial matches Pascal recursion") {
  std::vector<std::vector<Int>> pascal(21, std::vector<Int>(21, 0));
  for (int n = 0; n <= 20; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
  }
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial_u64(30, 15) == 155117520u);
}

TEST_CASE("k_subsets is exhaustive, lexicographic and deduplicated") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      auto subsets = k_subsets(n, k);
      CHECK(subsets.size() == binomial_u64(n, k));
      for (std::size_t i = 0; i + 1 < subsets.size(); ++i)
        CHECK(subsets[i].elems < subsets[i + 1].elems);
      for (const auto& sub : subsets) CHECK(sub.size() == k);
    }
  auto two_of_four = k_subsets(4, 2);
  CHECK(two_of_four[0].elems == std::vector<int>{1, 2});
  CHECK(two_of_four[5].elems == std::vector<int>{3, 4});
}

TEST_CASE("subset rank and unrank are mutual inverses") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      auto subsets = k_subsets(n, k);
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        CHECK(subset_rank(n, subsets[i]) == i + 1);
        CHECK(subset_unrank(n, k, i + 1) == subsets[i]);
      }
    }
}

TEST_CASE("UserLabel validates sortedness and range") {
  CHECK(UserLabel({1, 3, 4}).element(2) == 3);
  CHECK(UserLabel({1, 3, 4}).position_of(4) == 3);
  CHECK(UserLabel({1, 3, 4}).contains(3));
  CHECK(!UserLabel({1, 3, 4}).contains(2));
  CHECK_THROWS_AS(UserLabel({3, 1}), CpdaError);
  CHECK_THROWS_AS(UserLabel({1, 1}), CpdaError);
  CHECK_THROWS_AS(UserLabel({0, 2}), CpdaError);
  CHECK_THROWS_AS(UserLabel({1, 3}).position_of(2), CpdaError);
}

TEST_CASE("ceil_div") {
  CHECK(ceil_div(10, 3) == 4);
  CHECK(ceil_div(9, 3) == 3);
  CHECK(ceil_div(1, 5) == 1);
  CHECK(ceil_div(Int(10), Int(4)) == 3);
}

TEST_CASE("enumerate_users and user rank round-trip") {
  for (int h = 2; h <= 7; ++h)
    for (int r = 1; r <= h; ++r) {
      auto users = enumerate_users(h, r);
      CHECK(users.size() == binomial_u64(h, r));
      for (std::size_t i = 0; i < users.size(); ++i) {
        CHECK(user_rank(h, users[i]) == i + 1);
        CHECK(user_unrank(h, r, i + 1) == users[i]);
      }
    }
}

TEST_CASE("parallel_classes passes the partition oracle for r | h") {
  for (int h = 2; h <= 10; ++h)
    for (int r = 1; r <= h; ++r) {
      if (h % r != 0) continue;
      auto partition = parallel_classes(h, r);
      std::string why;
      CHECK_MESSAGE(
          cpda::testing::oracle_partition_valid(h, r, partition.classes(),
                                                &why),
          "h=", h, " r=", r, ": ", why);
      CHECK(partition.num_classes() ==
            static_cast<int>(binomial_u64(h - 1, r - 1)));
    }
}

TEST_CASE("parallel_classes rejects r not dividing h") {
  CHECK_THROWS_AS(parallel_classes(5, 2), CpdaError);
  try {
    parallel_classes(5, 2);
  } catch (const CpdaError& e) {
    CHECK(e.code() == ErrorCode::NotResolvable);
  }
}

TEST_CASE("partition constructor rejects broken inputs") {
  auto classes = parallel_classes(4, 2).classes();
  CHECK_NOTHROW(ParallelClassPartition(4, 2, classes));

  auto missing = classes;
  missing.pop_back();
  CHECK_THROWS_AS(ParallelClassPartition(4, 2, missing), CpdaError);

  auto duplicated = classes;
  duplicated[0][1] = duplicated[0][0];
  CHECK_THROWS_AS(ParallelClassPartition(4, 2, duplicated), CpdaError);

  auto overlapping = classes;
  overlapping[1] = overlapping[0];
  CHECK_THROWS_AS(ParallelClassPartition(4, 2, overlapping), CpdaError);
}

TEST_CASE("class_of and concatenated_labels agree") {
  auto partition = parallel_classes(6, 2);
  auto flat = partition.concatenated_labels();
  CHECK(flat.size() == binomial_u64(6, 2));
  std::size_t pos = 0;
  for (int c = 1; c <= partition.num_classes(); ++c)
    for (int i = 0; i < 3; ++i) CHECK(partition.class_of(flat[pos++]) == c);
  CHECK_THROWS_AS(partition.class_of(UserLabel({1, 2, 3})), CpdaError);
}

TEST_CASE("delta_shift is a bijection with the stated inverse") {
  for (int h = 2; h <= 8; ++h)
    for (int i = 1; i <= h; ++i) {
      std::vector<char> hit(static_cast<std::size_t>(h) + 1, 0);
      for (int t = 1; t <= h; ++t) {
        int shifted = delta_shift(i, t, h);
        CHECK(shifted >= 1);
        CHECK(shifted <= h);
        CHECK(!hit[static_cast<std::size_t>(shifted)]);
        hit[static_cast<std::size_t>(shifted)] = 1;
        CHECK(delta_shift_inverse(i, shifted, h) == t);
      }
      CHECK(delta_shift(1, i, h) == i);  // identity at i = 1
    }
}

TEST_CASE("shift_label keeps labels sorted subsets") {
  UserLabel label({2, 4});
  UserLabel shifted = shift_label(label, 2, 4);  // elements +1 mod 4
  CHECK(shifted.elems == std::vector<int>{1, 3});
  CHECK(shift_label(label, 1, 4) == label);
}

TEST_CASE("random partitions from the oracle helper stay valid") {
  std::mt19937_64 rng(20240815);
  for (int round = 0; round < 25; ++round) {
    int h = 2 * (1 + cpda::testing::rng_below(rng, 4));
    int r = 2;
    auto partition = cpda::testing::random_partition(h, r, rng);
    std::string why;
    CHECK_MESSAGE(cpda::testing::oracle_partition_valid(
                      h, r, partition.classes(), &why),
                  why);
  }
}
