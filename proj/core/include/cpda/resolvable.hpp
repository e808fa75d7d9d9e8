#pragma once

#include <map>
#include <vector>

#include "cpda/combinatorics.hpp"

namespace cpda {

// All C(h,r) user labels of an (h,r)-combination network, lexicographic.
std::vector<UserLabel> enumerate_users(int h, int r);

// 1-based lexicographic rank among the labels of enumerate_users(h, r).
std::uint64_t user_rank(int h, const UserLabel& label);
UserLabel user_unrank(int h, int r, std::uint64_t rank);

// Partition of all r-subsets of [h] into C(h-1,r-1) parallel classes, each a
// perfect partition of [h]. Only exists when r divides h.
class ParallelClassPartition {
 public:
  // Validates the parallel-class conditions and the exactly-once cover;
  // throws NotResolvable when they fail.
  ParallelClassPartition(int h, int r,
                         std::vector<std::vector<UserLabel>> classes);

  int h() const { return h_; }
  int r() const { return r_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<UserLabel>>& classes() const {
    return classes_;
  }

  // delta(T): 1-based index of the class containing T.
  int class_of(const UserLabel& label) const;

  // Labels in class-major order: class 1's members, then class 2's, ...
  std::vector<UserLabel> concatenated_labels() const;

 private:
  int h_;
  int r_;
  std::vector<std::vector<UserLabel>> classes_;
  std::map<UserLabel, int> class_index_;
};

// Deterministic parallel classes for r | h: round-robin 1-factorization for
// r = 2, integral-flow Baranyai construction otherwise. Classes are
// canonicalized (members sorted, classes ordered by smallest member).
ParallelClassPartition parallel_classes(int h, int r);

// Cyclic relay shift used for load balancing: t -> t+i-1 reduced into [h].
int delta_shift(int i, int t, int h);
int delta_shift_inverse(int i, int t, int h);

// Label with every element shifted by delta_i and re-sorted.
UserLabel shift_label(const UserLabel& label, int i, int h);

}  // namespace cpda
