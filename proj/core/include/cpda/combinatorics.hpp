#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cpda/errors.hpp"
#include "cpda/rational.hpp"

namespace cpda {

// A sorted r-subset of [h], 1-based elements. Used both as a user label in a
// combination network and as a generic subset handle in the constructions.
struct UserLabel {
  std::vector<int> elems;

  UserLabel() = default;
  explicit UserLabel(std::vector<int> e);

  int size() const { return static_cast<int>(elems.size()); }

  // i-th smallest element, i in [1..r].
  int element(int i) const;

  // Position of element j within the subset (inverse of element);
  // throws NotMember when j is not present.
  int position_of(int j) const;

  bool contains(int j) const;

  std::string to_string() const;

  auto operator<=>(const UserLabel&) const = default;
};

// Exact binomial coefficient; 0 outside the triangle.
Int binomial(int n, int k);

// Narrow variant for index arithmetic at desk scale.
std::uint64_t binomial_u64(int n, int k);

// All k-subsets of [n] in lexicographic order.
std::vector<UserLabel> k_subsets(int n, int k);

// 1-based lexicographic rank of a k-subset of [n]; inverse of subset_unrank.
std::uint64_t subset_rank(int n, const UserLabel& subset);
UserLabel subset_unrank(int n, int k, std::uint64_t rank);

inline Int ceil_div(const Int& a, const Int& b) { return (a + b - 1) / b; }
inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace cpda
