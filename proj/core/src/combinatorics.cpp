#include "cpda/combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace cpda {

UserLabel::UserLabel(std::vector<int> e) : elems(std::move(e)) {
  require(std::is_sorted(elems.begin(), elems.end()) &&
              std::adjacent_find(elems.begin(), elems.end()) == elems.end(),
          ErrorCode::LabelMismatch, "subset elements must be strictly increasing",
          to_string());
  require(elems.empty() || elems.front() >= 1, ErrorCode::LabelMismatch,
          "subset elements are 1-based", to_string());
}

int UserLabel::element(int i) const {
  require(i >= 1 && i <= size(), ErrorCode::ParamOutOfRange,
          "element index out of range");
  return elems[static_cast<std::size_t>(i) - 1];
}

int UserLabel::position_of(int j) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), j);
  require(it != elems.end() && *it == j, ErrorCode::NotMember,
          "element not in subset", std::to_string(j) + " vs " + to_string());
  return static_cast<int>(it - elems.begin()) + 1;
}

bool UserLabel::contains(int j) const {
  return std::binary_search(elems.begin(), elems.end(), j);
}

std::string UserLabel::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out << ',';
    out << elems[i];
  }
  out << '}';
  return out.str();
}

Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_u64(int n, int k) {
  return static_cast<std::uint64_t>(int_to_i64(binomial(n, k)));
}

std::vector<UserLabel> k_subsets(int n, int k) {
  require(n >= 0 && k >= 0, ErrorCode::ParamOutOfRange, "negative n or k");
  std::vector<UserLabel> out;
  if (k > n) return out;
  out.reserve(binomial_u64(n, k));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(UserLabel(cur));
    // Advance to the next subset in lexicographic order.
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::uint64_t subset_rank(int n, const UserLabel& subset) {
  int k = subset.size();
  require(k <= n && (k == 0 || subset.elems.back() <= n),
          ErrorCode::ParamOutOfRange, "subset not within [n]");
  // Count subsets that precede lexicographically: those agreeing on a prefix
  // and then taking a smaller element.
  std::uint64_t rank = 1;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < subset.elems[static_cast<std::size_t>(i)]; ++v)
      rank += binomial_u64(n - v, k - i - 1);
    prev = subset.elems[static_cast<std::size_t>(i)];
  }
  return rank;
}

UserLabel subset_unrank(int n, int k, std::uint64_t rank) {
  require(rank >= 1 && rank <= binomial_u64(n, k), ErrorCode::ParamOutOfRange,
          "subset rank out of range");
  std::vector<int> elems;
  elems.reserve(static_cast<std::size_t>(k));
  std::uint64_t remaining = rank - 1;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    int v = prev + 1;
    while (true) {
      std::uint64_t block = binomial_u64(n - v, k - i - 1);
      if (remaining < block) break;
      remaining -= block;
      ++v;
    }
    elems.push_back(v);
    prev = v;
  }
  return UserLabel(std::move(elems));
}

}  // namespace cpda
