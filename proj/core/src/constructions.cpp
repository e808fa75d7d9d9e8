#include "cpda/constructions.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "cpda/combinatorics.hpp"

namespace cpda {

namespace {

int checked_int(std::uint64_t value, const char* what) {
  require(value <= static_cast<std::uint64_t>(
                       std::numeric_limits<std::int32_t>::max()),
          ErrorCode::ParamOutOfRange, "construction too large", what);
  return static_cast<int>(value);
}

std::uint64_t pow_u64(int base, int exp, const char* what) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    require(result <= std::numeric_limits<std::uint64_t>::max() /
                          static_cast<std::uint64_t>(base),
            ErrorCode::ParamOutOfRange, "construction too large", what);
    result *= static_cast<std::uint64_t>(base);
  }
  return result;
}

// Grid rows are vectors in Z_q^m, lexicographic with coordinate 0 major.
std::vector<int> unpack_vector(std::uint64_t index, int q, int m) {
  std::vector<int> f(static_cast<std::size_t>(m));
  for (int j = m - 1; j >= 0; --j) {
    f[static_cast<std::size_t>(j)] =
        static_cast<int>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return f;
}

std::uint64_t pack_vector(const std::vector<int>& f, int q) {
  std::uint64_t index = 0;
  for (int coord : f)
    index = index * static_cast<std::uint64_t>(q) +
            static_cast<std::uint64_t>(coord);
  return index;
}

std::string first_violation(const std::vector<Violation>& violations) {
  return violations.empty() ? std::string("none")
                            : to_string(violations.front().kind) + ": " +
                                  violations.front().detail;
}

void require_built(const PdaReport& report, int z, int s,
                   std::optional<int> g, const char* family) {
  bool ok = report.is_valid && report.z == z && report.s == s &&
            report.g_regular == g;
  require(ok, ErrorCode::ConstructionInvalid,
          std::string(family) + " failed self-validation",
          first_violation(report.violations));
}

}  // namespace

PdaArray man_pda(const ManParams& p) {
  int k = p.num_users;
  int t = p.t;
  require(k >= 1 && t >= 0 && t <= k, ErrorCode::ParamOutOfRange,
          "need K >= 1 and 0 <= t <= K");
  int f = checked_int(binomial_u64(k, t), "man rows");
  int s = checked_int(binomial_u64(k, t + 1), "man symbols");

  auto rows = k_subsets(k, t);
  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(f) * static_cast<std::size_t>(k));
  for (const auto& subset : rows) {
    for (int user = 1; user <= k; ++user) {
      if (subset.contains(user)) {
        cells.push_back(kStar);
        continue;
      }
      std::vector<int> merged = subset.elems;
      merged.insert(std::upper_bound(merged.begin(), merged.end(), user),
                    user);
      cells.push_back(static_cast<Entry>(
          subset_rank(k, UserLabel(std::move(merged)))));
    }
  }

  PdaArray array(f, k, s, std::move(cells));
  int z = checked_int(binomial_u64(k - 1, t - 1), "man stars");
  require_built(check_pda(array), z, s,
                s > 0 ? std::optional<int>(t + 1) : std::nullopt, "man_pda");
  return array;
}

PdaArray lemma1_pda(const GridParams& p) {
  int q = p.q;
  int m = p.m;
  require(q >= 2 && m >= 1, ErrorCode::ParamOutOfRange,
          "need q >= 2 and m >= 1");
  int f = checked_int(pow_u64(q, m, "lemma1 rows"), "lemma1 rows");
  int k = checked_int(static_cast<std::uint64_t>(q) *
                          static_cast<std::uint64_t>(m + 1),
                      "lemma1 columns");
  int s = checked_int(static_cast<std::uint64_t>(f) *
                          static_cast<std::uint64_t>(q - 1),
                      "lemma1 symbols");

  // Symbol (v, sum) with sum != Σv mod q, ranked v-major then sum ascending.
  auto symbol_id = [&](const std::vector<int>& v, int sum) {
    std::uint64_t v_index = pack_vector(v, q);
    int sigma = std::accumulate(v.begin(), v.end(), 0) % q;
    int offset = sum - (sigma < sum ? 1 : 0);
    return static_cast<Entry>(v_index * static_cast<std::uint64_t>(q - 1) +
                              static_cast<std::uint64_t>(offset) + 1);
  };

  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(f) * static_cast<std::size_t>(k));
  for (std::uint64_t row = 0; row < static_cast<std::uint64_t>(f); ++row) {
    std::vector<int> vec = unpack_vector(row, q, m);
    int sigma = std::accumulate(vec.begin(), vec.end(), 0) % q;
    for (int i = 0; i <= m; ++i) {
      for (int u = 0; u < q; ++u) {
        if (i < m) {
          if (vec[static_cast<std::size_t>(i)] == u) {
            cells.push_back(kStar);
          } else {
            std::vector<int> swapped = vec;
            swapped[static_cast<std::size_t>(i)] = u;
            cells.push_back(symbol_id(swapped, sigma));
          }
        } else {
          cells.push_back(sigma == u ? kStar : symbol_id(vec, u));
        }
      }
    }
  }

  PdaArray array(f, k, s, std::move(cells));
  require_built(check_pda(array), f / q, s, m + 1, "lemma1_pda");
  return array;
}

PdaArray lemma2_pda(const GridParams& p) {
  int q = p.q;
  int m = p.m;
  require(q >= 2 && m >= 1, ErrorCode::ParamOutOfRange,
          "need q >= 2 and m >= 1");
  std::uint64_t grid = pow_u64(q, m, "lemma2 rows");
  int f = checked_int(grid * static_cast<std::uint64_t>(q - 1),
                      "lemma2 rows");
  int k = checked_int(static_cast<std::uint64_t>(q) *
                          static_cast<std::uint64_t>(m + 1),
                      "lemma2 columns");
  int s = checked_int(grid, "lemma2 symbols");

  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(f) * static_cast<std::size_t>(k));
  for (int e = 1; e <= q - 1; ++e) {
    for (std::uint64_t fi = 0; fi < grid; ++fi) {
      std::vector<int> vec = unpack_vector(fi, q, m);
      int sigma = std::accumulate(vec.begin(), vec.end(), 0) % q;
      for (int i = 0; i <= m; ++i) {
        for (int u = 0; u < q; ++u) {
          if (i < m) {
            if (vec[static_cast<std::size_t>(i)] != u) {
              cells.push_back(kStar);
            } else {
              std::vector<int> bumped = vec;
              bumped[static_cast<std::size_t>(i)] = (u + e) % q;
              cells.push_back(static_cast<Entry>(pack_vector(bumped, q) + 1));
            }
          } else {
            cells.push_back((sigma + e) % q != u
                                ? kStar
                                : static_cast<Entry>(fi + 1));
          }
        }
      }
    }
  }

  PdaArray array(f, k, s, std::move(cells));
  int z = checked_int(static_cast<std::uint64_t>(q - 1) *
                          static_cast<std::uint64_t>(q - 1) * (grid / q),
                      "lemma2 stars");
  require_built(check_pda(array), z, s, (q - 1) * (m + 1), "lemma2_pda");
  return array;
}

CpdaScheme cutset_array_b(int h, int r) {
  require(h >= 1 && r >= 1 && r <= h, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  auto row_subsets = k_subsets(h, r - 1);
  auto col_labels = k_subsets(h, r);
  int f = static_cast<int>(row_subsets.size());
  int k = static_cast<int>(col_labels.size());

  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(f) * static_cast<std::size_t>(k));
  for (const auto& sj : row_subsets) {
    for (const auto& t : col_labels) {
      bool contained = std::includes(t.elems.begin(), t.elems.end(),
                                     sj.elems.begin(), sj.elems.end());
      if (!contained) {
        cells.push_back(kStar);
        continue;
      }
      std::vector<int> rest;
      std::set_difference(t.elems.begin(), t.elems.end(), sj.elems.begin(),
                          sj.elems.end(), std::back_inserter(rest));
      cells.push_back(static_cast<Entry>(rest.front()));
    }
  }

  CpdaScheme scheme;
  scheme.array = PdaArray(f, k, h, std::move(cells));
  scheme.labels = std::move(col_labels);
  scheme.relay_of_symbol.resize(static_cast<std::size_t>(h));
  std::iota(scheme.relay_of_symbol.begin(), scheme.relay_of_symbol.end(), 1);
  scheme.h = h;
  scheme.r = r;

  CpdaReport report = check_cpda(scheme, h, r);
  bool ok = report.is_valid && report.pda.z == f - r && report.pda.s == h &&
            report.loads_equal && report.per_relay_loads.front() == 1;
  require(ok, ErrorCode::ConstructionInvalid,
          "cutset_array_b failed self-validation",
          first_violation(report.violations.empty() ? report.pda.violations
                                                    : report.violations));
  return scheme;
}

}  // namespace cpda
