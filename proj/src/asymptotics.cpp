#include "pinj/asymptotics.hpp"

#include <algorithm>

#include "pinj/errors.hpp"

namespace pinj {

GrowthReport growth_report(const CountContext& ctx, int n_max) {
  if (n_max < 2) throw Error("growth report needs n_max >= 2");
  if (ctx.n_max() < n_max + 1)
    throw SizeMismatch("context too small; need n_max >= n_max + 1");

  GrowthReport report;
  report.n_max = n_max;
  report.rows.reserve(n_max - 1);
  bool all_ok = true;

  for (int n = 2; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    const BigInt& t_prev = ctx.nilpotent_count(n - 1);
    const BigInt& t_cur = ctx.nilpotent_count(n);
    const BigInt& t_next = ctx.nilpotent_count(n + 1);
    const BigInt& is_prev = ctx.semigroup_size(n - 1);
    const BigInt& is_cur = ctx.semigroup_size(n);
    const BigInt& is_next = ctx.semigroup_size(n + 1);

    row.t_ratio = Rational(t_cur, t_prev);
    row.is_ratio = Rational(is_cur, is_prev);
    row.t_growth_normalized = Rational(t_next, BigInt(n + 2) * t_cur);
    row.is_growth_normalized = Rational(is_next, BigInt(n + 2) * is_cur);
    row.nilpotent_fraction = Rational(t_cur, is_cur);

    if (n > 2) {
      row.ratio_bounds_t_ok = BigInt(n + 1) * t_prev < t_cur &&
                              t_cur < BigInt(2 * n - 1) * t_prev;
    } else {
      row.ratio_bounds_t_ok = BigInt(n + 1) * t_prev <= t_cur &&
                              t_cur <= BigInt(2 * n - 1) * t_prev;
    }
    row.ratio_bounds_is_ok = BigInt(n + 1) * is_prev < is_cur &&
                             is_cur < BigInt(2 * n) * is_prev;

    // recount by inserting point n into every chain/cycle slot one size down
    {
      BigInt sum = 0;
      BigInt lah = ctx.factorial(n - 1);  // nilpotents of defect k at n-1
      for (int k = 1; k <= n - 1; ++k) {
        sum += BigInt(n + k) * lah;
        lah *= (n - 1 - k);
        lah /= BigInt(k) * (k + 1);
      }
      row.insertion_recount_t_ok = sum == t_cur;
    }
    {
      BigInt sum = 0;
      BigInt r = 1;  // rank classes at n-1
      for (int k = 0; k <= n - 1; ++k) {
        sum += BigInt(2 * n - k) * r;
        r *= BigInt(n - 1 - k) * (n - 1 - k);
        r /= k + 1;
      }
      row.insertion_recount_is_ok = sum == is_cur;
    }

    row.normalized_growth_ok =
        t_next >= BigInt(n + 2) * t_cur && is_next > BigInt(n + 2) * is_cur;
    row.fraction_below_one_ok = t_cur < is_cur;

    all_ok = all_ok && row.ratio_bounds_t_ok && row.ratio_bounds_is_ok &&
             row.insertion_recount_t_ok && row.insertion_recount_is_ok &&
             row.normalized_growth_ok && row.fraction_below_one_ok;
    report.rows.push_back(std::move(row));
  }

  auto burn_in = [&](auto member) {
    int idx = static_cast<int>(report.rows.size()) - 1;
    while (idx > 0 &&
           report.rows[idx - 1].*member >= report.rows[idx].*member)
      --idx;
    return report.rows[idx].n;
  };
  report.t_growth_burn_in = burn_in(&GrowthRow::t_growth_normalized);
  report.is_growth_burn_in = burn_in(&GrowthRow::is_growth_normalized);
  {
    int idx = static_cast<int>(report.rows.size()) - 1;
    while (idx > 0 && report.rows[idx - 1].nilpotent_fraction >
                          report.rows[idx].nilpotent_fraction)
      --idx;
    report.fraction_decreasing_from = report.rows[idx].n;
  }
  report.all_ok = all_ok;
  return report;
}

GrowthReport growth_report(int n_max) {
  CountContext ctx(n_max + 1);
  return growth_report(ctx, n_max);
}

namespace {

// sign of the adjacent-term comparison for the nilpotent-by-defect sequence:
// lah(n,k+1) - lah(n,k) has the sign of n - k(k+2)
int lah_step_sign(int n, int k) {
  const long long v = static_cast<long long>(n) -
                      static_cast<long long>(k) * (k + 2);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// sign of R_{n,k+1} - R_{n,k}: the sign of (n-k)^2 - (k+1)
int rank_step_sign(int n, int k) {
  const long long d = static_cast<long long>(n) - k;
  const long long v = d * d - (k + 1);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace

UnimodalityReport unimodality_report(int n) {
  if (n < 2) throw Error("unimodality report needs n >= 2");
  UnimodalityReport report;
  report.n = n;

  const bool by_value = n <= 2000;  // direct value comparisons when affordable
  CountContext ctx(by_value ? n : 0);

  // nilpotent-by-defect sequence over k = 1..n
  {
    bool ok = true;
    for (int k = 1; k < n; ++k) {
      const int sign = lah_step_sign(n, k);
      if (sign == 0) {
        report.lah_ties.push_back(k);
        if (by_value)
          ok = ok && ctx.signless_lah(n, k + 1) == ctx.signless_lah(n, k);
        continue;
      }
      if (by_value) {
        const BigInt lhs = ctx.signless_lah(n, k + 1);
        const BigInt rhs = ctx.signless_lah(n, k);
        ok = ok && (sign > 0 ? lhs > rhs : lhs < rhs);
      }
    }
    report.lah_ranges_ok = ok;
    int k = 1;
    while (k < n && lah_step_sign(n, k) > 0) ++k;
    report.lah_peak = k;
  }

  // rank classes over k = 0..n
  {
    bool ok = true;
    for (int k = 0; k < n; ++k) {
      const int sign = rank_step_sign(n, k);
      if (sign == 0) {
        report.rank_ties.push_back(k);
        if (by_value)
          ok = ok && ctx.rank_class_size(n, k + 1) == ctx.rank_class_size(n, k);
        continue;
      }
      if (by_value) {
        const BigInt lhs = ctx.rank_class_size(n, k + 1);
        const BigInt rhs = ctx.rank_class_size(n, k);
        ok = ok && (sign > 0 ? lhs > rhs : lhs < rhs);
      }
    }
    report.rank_ranges_ok = ok;
    int k = 0;
    while (k < n && rank_step_sign(n, k) > 0) ++k;
    report.rank_peak = k;
  }

  if (n > 10000) {
    report.band_checked = true;
    const int k0 = report.rank_peak;

    // largest B with (6B)^4 <= n
    int band = 0;
    while (true) {
      const BigInt side = BigInt(6) * (band + 1);
      if (side * side * side * side <= n) ++band; else break;
    }
    report.band_lo = k0 - band + 1;
    report.band_hi = k0 + band - 1;

    // adjacent ratio close to 1: for k with (6(|k-k0|+1))^4 < n require
    // |(n-k)^2 - (k+1)|^4 * n < (k+1)^4
    bool ratio_ok = true;
    for (int k = k0 - band; k <= k0 + band; ++k) {
      if (k < 0 || k >= n) continue;
      const BigInt gap = BigInt(6) * (std::abs(k - k0) + 1);
      if (gap * gap * gap * gap >= n) continue;
      BigInt u = BigInt(n - k) * (n - k) - (k + 1);
      if (u < 0) u = -u;
      const BigInt w = k + 1;
      ratio_ok = ratio_ok && u * u * u * u * n < w * w * w * w;
    }
    report.ratio_band_ok = ratio_ok;

    // peak dominates the band by less than a factor of 2:
    // R_{n,k0}/R_{n,k} as a product of the exact one-step ratios
    bool peak_ok = true;
    for (int k = report.band_lo; k <= report.band_hi; ++k) {
      if (k < 0 || k > n || k == k0) continue;
      BigInt num = 1, den = 1;
      if (k < k0) {
        for (int j = k; j < k0; ++j) {
          num *= BigInt(n - j) * (n - j);
          den *= (j + 1);
        }
      } else {
        for (int j = k0; j < k; ++j) {
          num *= (j + 1);
          den *= BigInt(n - j) * (n - j);
        }
      }
      peak_ok = peak_ok && num < 2 * den;
    }
    report.peak_ratio_ok = peak_ok;
  }

  return report;
}

ModReport mod_distribution(const CountContext& ctx, int n, int m) {
  if (m < 1) throw Error("modulus must be at least 1");
  ModReport report;
  report.n = n;
  report.m = m;
  report.f.assign(m, 0);
  BigInt r = 1;
  for (int k = 0; k <= n; ++k) {
    report.f[k % m] += r;
    r *= BigInt(n - k) * (n - k);
    r /= k + 1;
  }
  const BigInt& total = ctx.semigroup_size(n);
  report.proportions.resize(m);
  report.max_abs_deviation = 0;
  const Rational uniform(1, m);
  for (int p = 0; p < m; ++p) {
    report.proportions[p] = Rational(report.f[p], total);
    Rational dev = report.proportions[p] - uniform;
    if (dev < 0) dev = -dev;
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
  }
  return report;
}

ModReport mod_distribution(int n, int m) {
  CountContext ctx(n);
  return mod_distribution(ctx, n, m);
}

}  // namespace pinj
