#include "cpda/transform.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "cpda/constructions.hpp"

namespace cpda {

namespace {

std::string first_violation(const CpdaReport& report) {
  const auto& list =
      report.violations.empty() ? report.pda.violations : report.violations;
  return list.empty() ? std::string("none")
                      : to_string(list.front().kind) + ": " +
                            list.front().detail;
}

}  // namespace

CpdaScheme transform_to_cpda(const TransformSpec& spec) {
  int h = spec.h;
  int r = spec.r;
  require(spec.partition.h() == h && spec.partition.r() == r,
          ErrorCode::ShapeMismatch, "partition does not match (h, r)");
  std::uint64_t k_tilde = binomial_u64(h - 1, r - 1);
  require(static_cast<std::uint64_t>(spec.base.num_cols()) == k_tilde,
          ErrorCode::ShapeMismatch,
          "base must have one column per parallel class",
          std::to_string(spec.base.num_cols()) + " vs " +
              std::to_string(k_tilde));

  PdaReport base_report = check_pda(spec.base);
  require(base_report.is_valid, ErrorCode::MalformedArray,
          "base array violates the PDA conditions");

  int f_tilde = spec.base.num_rows();
  int s_tilde = spec.base.symbol_count();
  require(static_cast<std::int64_t>(h) * s_tilde <=
              std::numeric_limits<Entry>::max(),
          ErrorCode::ParamOutOfRange, "transformed symbol range too large");

  std::vector<UserLabel> labels = spec.partition.concatenated_labels();
  int k = static_cast<int>(labels.size());
  int f = r * f_tilde;

  std::vector<Entry> cells(static_cast<std::size_t>(f) *
                           static_cast<std::size_t>(k));
  for (int col = 0; col < k; ++col) {
    const UserLabel& label = labels[static_cast<std::size_t>(col)];
    int base_col = spec.partition.class_of(label) - 1;
    for (int i = 1; i <= r; ++i) {
      Entry offset = static_cast<Entry>((label.element(i) - 1) * s_tilde);
      for (int j = 0; j < f_tilde; ++j) {
        Entry e = spec.base.at(j, base_col);
        int row = (i - 1) * f_tilde + j;
        cells[static_cast<std::size_t>(row) * static_cast<std::size_t>(k) +
              static_cast<std::size_t>(col)] =
            e == kStar ? kStar : static_cast<Entry>(e + offset);
      }
    }
  }

  CpdaScheme scheme;
  scheme.array = PdaArray(f, k, h * s_tilde, std::move(cells));
  scheme.labels = std::move(labels);
  scheme.relay_of_symbol.reserve(static_cast<std::size_t>(h) *
                                 static_cast<std::size_t>(s_tilde));
  for (Entry s = 1; s <= h * s_tilde; ++s)
    scheme.relay_of_symbol.push_back((s - 1) / s_tilde + 1);
  scheme.h = h;
  scheme.r = r;

  CpdaReport report = check_cpda(scheme, h, r);
  bool loads_ok =
      report.loads_equal &&
      (s_tilde == 0 ||
       report.per_relay_loads.front() == static_cast<std::uint64_t>(s_tilde));
  bool ok = report.is_valid && report.pda.z == r * base_report.z &&
            report.pda.s == h * s_tilde && loads_ok;
  require(ok, ErrorCode::ConstructionInvalid,
          "transformed array failed self-validation", first_violation(report));
  return scheme;
}

PdaArray reduce_columns_to(const PdaArray& array, int k_target,
                           ReducePolicy policy) {
  require(policy == ReducePolicy::kDropTrailing, ErrorCode::ParamOutOfRange,
          "unknown reduction policy");
  require(k_target >= 1 && k_target <= array.num_cols(),
          ErrorCode::ParamOutOfRange, "column target out of range",
          std::to_string(k_target));
  if (k_target == array.num_cols()) return array;
  std::set<int> drop;
  for (int col = k_target; col < array.num_cols(); ++col) drop.insert(col);
  return delete_columns(array, drop);
}

namespace {

LsubResult build_lsub(int variant, int h, int r, int q,
                      const ParallelClassPartition& partition) {
  require(q >= 2, ErrorCode::ParamOutOfRange, "need q >= 2");
  require(r >= 1 && r <= h && h % r == 0, ErrorCode::NotResolvable,
          "need r | h");
  require(partition.h() == h && partition.r() == r, ErrorCode::ShapeMismatch,
          "partition does not match (h, r)");

  int k_tilde = static_cast<int>(binomial_u64(h - 1, r - 1));
  int m_plus_1 = ceil_div(k_tilde, q);
  require(m_plus_1 >= 2, ErrorCode::DegenerateParams,
          "grid PDA needs ceil(K~/q) >= 2",
          "K~=" + std::to_string(k_tilde) + ", q=" + std::to_string(q));
  GridParams grid{q, m_plus_1 - 1};

  PdaArray base = variant == 1 ? lemma1_pda(grid) : lemma2_pda(grid);
  PdaArray reduced = reduce_columns_to(base, k_tilde);
  if (variant == 2)
    require(reduced.symbol_count() == base.symbol_count(),
            ErrorCode::ConstructionInvalid,
            "column reduction deleted symbols of the lemma2 family");

  LsubResult result{transform_to_cpda({reduced, h, r, partition}), {}, {}, {}};
  const PdaArray& array = result.scheme.array;

  result.achieved.scheme = variant == 1 ? "lsub1" : "lsub2";
  result.achieved.h = h;
  result.achieved.r = r;
  result.achieved.n_files = 0;
  result.achieved.memory_ratio = Rat(array.star_count(0), array.num_rows());
  result.achieved.rate =
      Rat(array.symbol_count(), static_cast<std::int64_t>(array.num_rows()) * h);
  result.achieved.subpacketization = array.num_rows();

  result.rate_bound = variant == 1
                          ? Rat(q - 1, r)
                          : Rat(1, static_cast<std::int64_t>(r) * (q - 1));
  Int power = 1;
  for (int i = 0; i < m_plus_1 - 1; ++i) power *= q;
  result.f_bound = (variant == 1 ? Int(r) : Int(r) * (q - 1)) * power;

  require(result.achieved.rate <= result.rate_bound &&
              result.achieved.subpacketization <= result.f_bound,
          ErrorCode::ConstructionInvalid,
          "pipeline exceeded its closed-form guarantees");
  return result;
}

}  // namespace

LsubResult build_lsub1(int h, int r, int q,
                       const ParallelClassPartition& partition) {
  return build_lsub(1, h, r, q, partition);
}

LsubResult build_lsub2(int h, int r, int q,
                       const ParallelClassPartition& partition) {
  return build_lsub(2, h, r, q, partition);
}

BalancedScheme balance_by_replication(const CpdaScheme& scheme, int h) {
  require(!scheme.labels.empty(), ErrorCode::ShapeMismatch,
          "scheme has no column labels");
  int r = scheme.labels.front().size();
  CpdaReport report = check_cpda(scheme, h, r);
  require(report.is_valid, ErrorCode::MalformedArray,
          "scheme violates the C-PDA conditions", first_violation(report));

  if (report.loads_equal)
    return BalancedScheme{{scheme}, scheme.array.num_rows()};

  int s = scheme.array.symbol_count();
  BalancedScheme balanced;
  balanced.replicas.reserve(static_cast<std::size_t>(h));
  for (int i = 1; i <= h; ++i) {
    CpdaScheme replica = scheme;
    for (auto& label : replica.labels) label = shift_label(label, i, h);
    for (auto& relay : replica.relay_of_symbol)
      relay = delta_shift(i, relay, h);
    balanced.replicas.push_back(std::move(replica));
  }
  balanced.subpacketization =
      static_cast<std::int64_t>(h) * scheme.array.num_rows();

  std::vector<std::uint64_t> summed(static_cast<std::size_t>(h), 0);
  for (const auto& replica : balanced.replicas) {
    CpdaReport rep = check_cpda(replica, h, r);
    require(rep.is_valid, ErrorCode::ConstructionInvalid,
            "shifted replica failed validation", first_violation(rep));
    for (int j = 0; j < h; ++j)
      summed[static_cast<std::size_t>(j)] +=
          rep.per_relay_loads[static_cast<std::size_t>(j)];
  }
  for (std::uint64_t load : summed)
    require(load == static_cast<std::uint64_t>(s),
            ErrorCode::ConstructionInvalid,
            "replication did not equalize relay loads");
  return balanced;
}

}  // namespace cpda
