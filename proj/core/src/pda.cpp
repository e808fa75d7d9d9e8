#include "cpda/pda.hpp"

#include <algorithm>
#include <sstream>

namespace cpda {

PdaArray::PdaArray(int num_rows, int num_cols, int symbol_count,
                   std::vector<Entry> cells)
    : num_rows_(num_rows),
      num_cols_(num_cols),
      symbol_count_(symbol_count),
      cells_(std::move(cells)) {
  require(num_rows_ >= 1 && num_cols_ >= 1, ErrorCode::MalformedArray,
          "array must have at least one row and one column");
  require(symbol_count_ >= 0, ErrorCode::MalformedArray,
          "negative symbol count");
  require(cells_.size() == static_cast<std::size_t>(num_rows_) *
                               static_cast<std::size_t>(num_cols_),
          ErrorCode::MalformedArray, "cell count does not match shape");
  for (Entry e : cells_) {
    require(e >= 0 && e <= symbol_count_, ErrorCode::MalformedArray,
            "symbol id outside [1..S]", std::to_string(e));
  }
}

PdaArray PdaArray::from_rows(const std::vector<std::vector<Entry>>& rows,
                             int symbol_count) {
  require(!rows.empty(), ErrorCode::MalformedArray, "no rows");
  std::size_t width = rows.front().size();
  std::vector<Entry> cells;
  cells.reserve(rows.size() * width);
  for (const auto& row : rows) {
    require(row.size() == width, ErrorCode::MalformedArray,
            "rows have unequal lengths");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return PdaArray(static_cast<int>(rows.size()), static_cast<int>(width),
                  symbol_count, std::move(cells));
}

int PdaArray::star_count(int col) const {
  int count = 0;
  for (int row = 0; row < num_rows_; ++row)
    if (is_star(row, col)) ++count;
  return count;
}

std::vector<std::vector<std::pair<int, int>>> PdaArray::occurrences() const {
  std::vector<std::vector<std::pair<int, int>>> occ(
      static_cast<std::size_t>(symbol_count_));
  for (int row = 0; row < num_rows_; ++row)
    for (int col = 0; col < num_cols_; ++col)
      if (Entry e = at(row, col); e != kStar)
        occ[static_cast<std::size_t>(e) - 1].emplace_back(row, col);
  return occ;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::StarCountMismatch: return "StarCountMismatch";
    case ViolationKind::MissingSymbol: return "MissingSymbol";
    case ViolationKind::RepeatedInLine: return "RepeatedInLine";
    case ViolationKind::MissingStarPair: return "MissingStarPair";
    case ViolationKind::LabelMismatch: return "LabelMismatch";
    case ViolationKind::EmptyIntersection: return "EmptyIntersection";
    case ViolationKind::BadRelayAssignment: return "BadRelayAssignment";
  }
  return "Unknown";
}

PdaReport check_pda(const PdaArray& array) {
  PdaReport report;
  report.s = array.symbol_count();

  // C1: equal star count in every column.
  report.z = array.star_count(0);
  for (int col = 1; col < array.num_cols(); ++col) {
    int z = array.star_count(col);
    if (z != report.z) {
      Violation v{ViolationKind::StarCountMismatch, -1, 0, -1, col, 0, ""};
      std::ostringstream detail;
      detail << "column " << col << " has " << z << " stars, column 0 has "
             << report.z;
      v.detail = detail.str();
      report.violations.push_back(std::move(v));
    }
  }

  auto occ = array.occurrences();

  // C2: every symbol id occurs.
  for (int s = 1; s <= array.symbol_count(); ++s) {
    if (occ[static_cast<std::size_t>(s) - 1].empty()) {
      report.violations.push_back({ViolationKind::MissingSymbol, -1, -1, -1,
                                   -1, s,
                                   "symbol " + std::to_string(s) +
                                       " never occurs"});
    }
  }

  // C3: any two occurrences of one symbol sit in distinct rows and columns
  // and see stars at the crossing positions.
  for (int s = 1; s <= array.symbol_count(); ++s) {
    const auto& positions = occ[static_cast<std::size_t>(s) - 1];
    for (std::size_t a = 0; a < positions.size(); ++a) {
      for (std::size_t b = a + 1; b < positions.size(); ++b) {
        auto [r1, c1] = positions[a];
        auto [r2, c2] = positions[b];
        if (r1 == r2 || c1 == c2) {
          report.violations.push_back({ViolationKind::RepeatedInLine, r1, c1,
                                       r2, c2, s,
                                       "symbol repeats in one row or column"});
          continue;
        }
        if (!array.is_star(r1, c2) || !array.is_star(r2, c1)) {
          report.violations.push_back({ViolationKind::MissingStarPair, r1, c1,
                                       r2, c2, s,
                                       "crossing entries are not both stars"});
        }
      }
    }
  }

  report.is_valid = report.violations.empty();

  if (array.symbol_count() > 0) {
    std::size_t g = occ[0].size();
    bool regular = g > 0;
    for (const auto& positions : occ)
      if (positions.size() != g) regular = false;
    if (regular) report.g_regular = static_cast<int>(g);
  }
  return report;
}

PdaArray delete_columns(const PdaArray& array, const std::set<int>& cols) {
  require(static_cast<int>(cols.size()) < array.num_cols(),
          ErrorCode::ParamOutOfRange, "cannot delete every column");
  for (int col : cols)
    require(col >= 0 && col < array.num_cols(), ErrorCode::ParamOutOfRange,
            "column index out of range", std::to_string(col));

  std::vector<int> keep;
  for (int col = 0; col < array.num_cols(); ++col)
    if (!cols.count(col)) keep.push_back(col);

  // Stable renumbering: surviving symbols keep their relative order.
  std::vector<Entry> remap(static_cast<std::size_t>(array.symbol_count()) + 1,
                           kStar);
  Entry next = 0;
  for (int s = 1; s <= array.symbol_count(); ++s) {
    bool survives = false;
    for (int row = 0; row < array.num_rows() && !survives; ++row)
      for (int col : keep)
        if (array.at(row, col) == s) {
          survives = true;
          break;
        }
    if (survives) remap[static_cast<std::size_t>(s)] = ++next;
  }

  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(array.num_rows()) * keep.size());
  for (int row = 0; row < array.num_rows(); ++row)
    for (int col : keep) {
      Entry e = array.at(row, col);
      cells.push_back(e == kStar ? kStar : remap[static_cast<std::size_t>(e)]);
    }
  return PdaArray(array.num_rows(), static_cast<int>(keep.size()), next,
                  std::move(cells));
}

RatePoint scheme_params(const PdaArray& array, int n_files) {
  RatePoint point;
  point.scheme = "shared-link";
  point.n_files = n_files;
  point.memory_ratio = Rat(array.star_count(0), array.num_rows());
  point.rate = Rat(array.symbol_count(), array.num_rows());
  point.subpacketization = array.num_rows();
  return point;
}

}  // namespace cpda
