#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cpda/errors.hpp"
#include "cpda/rate_point.hpp"

namespace cpda {

// Grid cell: kStar marks a cached subpacket, positive values are ordinary
// symbol ids in [1..S].
using Entry = std::int32_t;
inline constexpr Entry kStar = 0;

// Immutable F x K array over {*} u [S]. Construction enforces shape and id
// range; whether the array actually satisfies the placement-delivery
// conditions is the business of check_pda.
class PdaArray {
 public:
  // Placeholder 1x1 all-star array, meant to be overwritten.
  PdaArray() : PdaArray(1, 1, 0, {kStar}) {}

  // cells is row-major with num_rows * num_cols entries.
  PdaArray(int num_rows, int num_cols, int symbol_count,
           std::vector<Entry> cells);

  static PdaArray from_rows(const std::vector<std::vector<Entry>>& rows,
                            int symbol_count);

  int num_rows() const { return num_rows_; }
  int num_cols() const { return num_cols_; }
  int symbol_count() const { return symbol_count_; }

  Entry at(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) *
                      static_cast<std::size_t>(num_cols_) +
                  static_cast<std::size_t>(col)];
  }
  bool is_star(int row, int col) const { return at(row, col) == kStar; }

  // Stars in one column; the PDA condition C1 demands this be constant.
  int star_count(int col) const;

  // (row, col) positions of each ordinary symbol, indexed s-1, positions in
  // row-major order.
  std::vector<std::vector<std::pair<int, int>>> occurrences() const;

  bool operator==(const PdaArray&) const = default;

 private:
  int num_rows_;
  int num_cols_;
  int symbol_count_;
  std::vector<Entry> cells_;
};

enum class ViolationKind {
  StarCountMismatch,   // C1
  MissingSymbol,       // C2
  RepeatedInLine,      // C3-a: same symbol twice in a row or column
  MissingStarPair,     // C3-b: 2x2 subarray not of the s-*/*-s shape
  LabelMismatch,       // C-PDA labels are not distinct r-subsets of [h]
  EmptyIntersection,   // C-PDA symbol whose column labels share no relay
  BadRelayAssignment,  // designated relay outside the label intersection
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // Entry pair for C3 violations; -1 where not applicable.
  int row1 = -1;
  int col1 = -1;
  int row2 = -1;
  int col2 = -1;
  int symbol = 0;  // offending symbol (or relay count carrier), 0 if n/a
  std::string detail;
};

struct PdaReport {
  bool is_valid = false;
  int z = 0;  // stars per column (column 0's count when C1 fails)
  int s = 0;
  // Present iff S >= 1 and every ordinary symbol occurs exactly g times.
  std::optional<int> g_regular;
  std::vector<Violation> violations;
};

// Validates conditions C1, C2 and C3 and derives (Z, S, g).
PdaReport check_pda(const PdaArray& array);

// Removes the given 0-based columns. Symbols whose every occurrence is
// deleted vanish; surviving ids are renumbered to [1..S'] preserving their
// relative order.
PdaArray delete_columns(const PdaArray& array, const std::set<int>& cols);

// Shared-link scheme parameters of a valid PDA: M/N = Z/F, R = S/F, exact.
RatePoint scheme_params(const PdaArray& array, int n_files);

}  // namespace cpda
