#include "cpda/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "cpda/combinatorics.hpp"
#include "cpda/errors.hpp"

namespace cpda {

namespace {

void require_memory_range(int n_files, const Rat& m) {
  require(n_files >= 1, ErrorCode::ParamOutOfRange, "need N >= 1");
  require(m >= 0 && m <= n_files, ErrorCode::ParamOutOfRange,
          "memory must satisfy 0 <= M <= N", rat_to_string(m));
}

}  // namespace

BoundPoint cutset_bound(int h, int r, int n_files, const Rat& m) {
  require(h >= 1 && r >= 1 && r <= h, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  require_memory_range(n_files, m);

  BoundPoint point;
  point.h = h;
  point.r = r;
  point.n_files = n_files;
  point.memory_ratio = m / n_files;

  Rat best;
  bool first = true;
  for (int t = r; t <= h; ++t) {
    Int choose = binomial(t, r);
    int l_max = choose < n_files ? static_cast<int>(int_to_i64(choose))
                                 : n_files;
    for (int l = 1; l <= l_max; ++l) {
      int chunk = (n_files + l - 1) / l;  // ceil(N/l)
      Rat term = (Rat(l) - Rat(l) * m / chunk) / t;
      if (first || term > best) {
        best = term;
        point.t = t;
        point.l = l;
        first = false;
      }
    }
  }
  point.lower_bound = std::max(best, Rat(0));
  return point;
}

Rat rate_tr_formula(int h, int r, const Rat& memory_ratio) {
  Int k = binomial(h, r);
  Int k_tilde = binomial(h - 1, r - 1);
  return Rat(k) * (Rat(1) - memory_ratio) /
         (Rat(h) * (Rat(1) + Rat(k_tilde) * memory_ratio));
}

RatePoint rate_tr(int h, int r, int n_files, const Rat& m) {
  require(h >= 1 && r >= 1 && r <= h, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  require(h % r == 0, ErrorCode::NotResolvable, "r must divide h");
  require_memory_range(n_files, m);

  Int k_tilde = binomial(h - 1, r - 1);
  Rat j_exact = m * Rat(k_tilde) / n_files;  // KMr/(Nh)
  require(rat_den(j_exact) == 1, ErrorCode::OffGrid,
          "memory is not a multiple of N/K~", rat_to_string(m));
  Int j = rat_num(j_exact);

  RatePoint point;
  point.scheme = "tr";
  point.h = h;
  point.r = r;
  point.n_files = n_files;
  point.memory_ratio = m / n_files;
  point.rate = rate_tr_formula(h, r, point.memory_ratio);
  point.subpacketization =
      Int(r) * binomial(static_cast<int>(int_to_i64(k_tilde)),
                        static_cast<int>(int_to_i64(j)));
  return point;
}

RatePoint rate_lsub(int variant, int h, int r, int n_files, const Rat& m) {
  require(variant == 1 || variant == 2, ErrorCode::ParamOutOfRange,
          "variant must be 1 or 2");
  require(h >= 1 && r >= 1 && r <= h, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  require(h % r == 0, ErrorCode::NotResolvable, "r must divide h");
  require_memory_range(n_files, m);

  Rat mu = m / n_files;
  Rat grid = variant == 1 ? mu : Rat(1) - mu;  // must equal 1/q
  require(grid > 0 && rat_num(grid) == 1 && rat_den(grid) >= 2,
          ErrorCode::OffGrid,
          variant == 1 ? "memory ratio is not 1/q for integer q >= 2"
                       : "memory ratio is not (q-1)/q for integer q >= 2",
          rat_to_string(mu));
  Int q_int = rat_den(grid);
  int q = static_cast<int>(int_to_i64(q_int));

  Int k_tilde = binomial(h - 1, r - 1);
  Int exponent_count = ceil_div(k_tilde, Int(q));  // ceil(K~/q) = m+1
  require(exponent_count >= 2, ErrorCode::DegenerateParams,
          "grid PDA needs ceil(K~/q) >= 2");

  Int power = 1;
  std::int64_t reps = int_to_i64(exponent_count) - 1;
  for (std::int64_t i = 0; i < reps; ++i) power *= q;

  RatePoint point;
  point.scheme = variant == 1 ? "lsub1" : "lsub2";
  point.h = h;
  point.r = r;
  point.n_files = n_files;
  point.memory_ratio = mu;
  point.rate = variant == 1 ? Rat(q - 1, r)
                            : Rat(1, static_cast<std::int64_t>(r) * (q - 1));
  point.subpacketization =
      (variant == 1 ? Int(r) : Int(r) * (q - 1)) * power;
  return point;
}

OptimalRate optimal_rate_large_mem(int h, int r, int n_files, const Rat& m) {
  require(h >= 1 && r >= 1 && r <= h, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  require_memory_range(n_files, m);

  Int k = binomial(h, r);
  Rat mu = m / n_files;
  Rat corner = Rat(k - h + r - 1) / Rat(k);
  require(mu >= corner, ErrorCode::OffRegion,
          "memory below the optimality region",
          rat_to_string(mu) + " < " + rat_to_string(corner));

  OptimalRate result;
  result.point.scheme = "optimal";
  result.point.h = h;
  result.point.r = r;
  result.point.n_files = n_files;
  result.point.memory_ratio = mu;
  result.point.rate = (Rat(1) - mu) / r;
  result.point.subpacketization = binomial(h, r - 1);
  result.bound = cutset_bound(h, r, n_files, m);
  result.equals_cutset = result.bound.lower_bound == result.point.rate;
  return result;
}

namespace {

std::string decimal(const Rat& value) { return rat_to_decimal(value, 6); }

struct Cell {
  bool present = false;
  Rat value;
};

std::string show(const Cell& cell) {
  return cell.present ? rat_to_string(cell.value) : std::string();
}

std::string show_decimal(const Cell& cell) {
  return cell.present ? decimal(cell.value) : std::string();
}

}  // namespace

std::string compare_table(int h, int r, int n_files, int q_lo, int q_hi) {
  require(h >= 1 && r >= 1 && r <= h, ErrorCode::ParamOutOfRange,
          "need 1 <= r <= h");
  require(n_files >= 1, ErrorCode::ParamOutOfRange, "need N >= 1");
  require(q_lo >= 2, ErrorCode::ParamOutOfRange, "grid starts at q = 2");

  Int k = binomial(h, r);
  Int k_tilde = binomial(h - 1, r - 1);
  Rat corner = Rat(k - h + r - 1) / Rat(k);

  std::ostringstream out;
  out << "m_over_n,scheme,r_lsub,f_lsub,r_tr,f_tr,ratio,cutset,r_opt,"
         "r_lsub_dec,r_tr_dec,ratio_dec,cutset_dec,r_opt_dec\n";

  auto emit_row = [&](const std::string& mu_text, const std::string& name,
                      const Cell& r_lsub, const std::string& f_lsub,
                      const Cell& r_tr, const std::string& f_tr,
                      const Cell& ratio, const Cell& cut, const Cell& opt) {
    out << mu_text << ',' << name << ',' << show(r_lsub) << ',' << f_lsub
        << ',' << show(r_tr) << ',' << f_tr << ',' << show(ratio) << ','
        << show(cut) << ',' << show(opt) << ',' << show_decimal(r_lsub) << ','
        << show_decimal(r_tr) << ',' << show_decimal(ratio) << ','
        << show_decimal(cut) << ',' << show_decimal(opt) << '\n';
  };

  for (int q = q_lo; q <= q_hi; ++q) {
    for (int variant : {1, 2}) {
      Rat mu = variant == 1 ? Rat(1, q) : Rat(q - 1, q);
      Rat m = mu * n_files;

      Cell lsub;
      std::string f_lsub;
      if (h % r == 0) {
        try {
          RatePoint point = rate_lsub(variant, h, r, n_files, m);
          lsub = {true, point.rate};
          f_lsub = point.subpacketization.str();
        } catch (const CpdaError&) {
        }
      }

      Cell tr;
      std::string f_tr;
      if (h % r == 0) {
        try {
          RatePoint point = rate_tr(h, r, n_files, m);
          tr = {true, point.rate};
          f_tr = point.subpacketization.str();
        } catch (const CpdaError&) {
        }
      }

      Cell ratio;
      if (lsub.present && tr.present && lsub.value > 0) {
        ratio = {true, tr.value / lsub.value};
        // Rate-ratio bracket: KMr/(KMr+Nh) <= R_TR/R_LSub <= 1.
        Rat lower = Rat(k_tilde) * mu / (Rat(1) + Rat(k_tilde) * mu);
        require(ratio.value >= lower && ratio.value <= 1,
                ErrorCode::ConstructionInvalid,
                "rate ratio escaped its bracket", rat_to_string(ratio.value));
      }

      Cell cut{true, cutset_bound(h, r, n_files, m).lower_bound};
      Cell opt;
      if (mu >= corner)
        opt = {true, optimal_rate_large_mem(h, r, n_files, m).point.rate};

      emit_row(rat_to_string(mu), variant == 1 ? "lsub1" : "lsub2", lsub,
               f_lsub, tr, f_tr, ratio, cut, opt);
    }
  }

  if (q_lo <= q_hi) {
    // Large-memory corner: the transformed-MAN closed form sits strictly
    // above the optimal rate there for 2 <= r < h.
    Rat m_corner = corner * n_files;
    Rat tr_corner = rate_tr_formula(h, r, corner);
    Rat opt_corner = (Rat(1) - corner) / r;
    if (r >= 2 && r < h)
      require(tr_corner > opt_corner, ErrorCode::ConstructionInvalid,
              "corner-point gap is not strict");
    Cell cut{true, cutset_bound(h, r, n_files, m_corner).lower_bound};
    emit_row(rat_to_string(corner), "corner", Cell{}, "",
             Cell{true, tr_corner}, "", Cell{}, cut, Cell{true, opt_corner});
  }
  return out.str();
}

}  // namespace cpda
