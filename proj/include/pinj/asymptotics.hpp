#pragma once

#include <vector>

#include "pinj/counting.hpp"
#include "pinj/numbers.hpp"

namespace pinj {

// One row per ground-set size. Flags are recomputed exact predicates.
struct GrowthRow {
  int n = 0;
  Rational t_ratio;   // |T_n| / |T_{n-1}|
  Rational is_ratio;  // |IS_n| / |IS_{n-1}|
  // growth normalized by the next factorial step
  Rational t_growth_normalized;   // |T_{n+1}| / ((n+2) |T_n|)
  Rational is_growth_normalized;  // |IS_{n+1}| / ((n+2) |IS_n|)
  Rational nilpotent_fraction;    // |T_n| / |IS_n|

  bool ratio_bounds_t_ok = false;   // n+1 <= t_ratio <= 2n-1, strict for n > 2
  bool ratio_bounds_is_ok = false;  // n+1 < is_ratio < 2n
  bool insertion_recount_t_ok = false;   // |T_n| recomputed by point insertion
  bool insertion_recount_is_ok = false;  // |IS_n| likewise
  bool normalized_growth_ok = false;     // both normalized ratios >= 1
  bool fraction_below_one_ok = false;    // nilpotent fraction < 1
};

struct GrowthReport {
  int n_max = 0;
  std::vector<GrowthRow> rows;  // n = 2 .. n_max
  // index after which each normalized-growth sequence is non-increasing
  int t_growth_burn_in = 0;
  int is_growth_burn_in = 0;
  // smallest n from which the nilpotent fraction strictly decreases
  int fraction_decreasing_from = 0;
  bool all_ok = false;
};

GrowthReport growth_report(int n_max);
GrowthReport growth_report(const CountContext& ctx, int n_max);

// Unimodality of the nilpotent-by-defect and rank-class sequences: strict
// monotonicity inside the open ranges, peak indices, and boundary ties
// reported separately. For n > 10000 the near-peak ratio band is checked
// with exact integer arithmetic.
struct UnimodalityReport {
  int n = 0;
  int lah_peak = 0;  // smallest argmax of the nilpotent-by-defect sequence
  int rank_peak = 0;  // smallest argmax of the rank-class sequence
  bool lah_ranges_ok = false;
  bool rank_ranges_ok = false;
  std::vector<int> lah_ties;   // k with equal neighbours at the boundary
  std::vector<int> rank_ties;
  bool band_checked = false;   // only for n > 10000
  bool ratio_band_ok = false;  // |R_{n,k+1}/R_{n,k} - 1| < n^{-1/4} on the band
  bool peak_ratio_ok = false;  // R at the peak within 2x of R on the band
  int band_lo = 0, band_hi = 0;
};

UnimodalityReport unimodality_report(int n);

// Rank counts modulo m.
struct ModReport {
  int n = 0;
  int m = 1;
  std::vector<BigInt> f;              // residue class totals
  std::vector<Rational> proportions;  // f_p / |IS_n|
  Rational max_abs_deviation;         // from the uniform 1/m
};

ModReport mod_distribution(int n, int m);
ModReport mod_distribution(const CountContext& ctx, int n, int m);

}  // namespace pinj
