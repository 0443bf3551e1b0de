#include "pinj/counting.hpp"

#include <algorithm>
#include <utility>

#include "pinj/chart.hpp"
#include "pinj/errors.hpp"

namespace pinj {

// ---- closed forms ----------------------------------------------------------

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt falling_factorial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

BigInt rank_class_size(int n, int k) {
  if (k < 0 || k > n) return 0;
  const BigInt c = binomial(n, k);
  return c * c * factorial(k);
}

BigInt defect_class_size(int n, int k) { return rank_class_size(n, n - k); }

BigInt signless_lah(int n, int k) {
  if (k < 1 || k > n) return 0;
  return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

BigInt semigroup_size(int n) {
  BigInt total = 0;
  BigInt term = 1;  // rank class size, built up incrementally
  for (int k = 0; k <= n; ++k) {
    total += term;
    term *= BigInt(n - k) * (n - k);
    term /= k + 1;
  }
  return total;
}

BigInt nilpotent_count(int n) {
  if (n == 0) return 1;  // the empty map is nilpotent
  BigInt total = 0;
  BigInt term = factorial(n);  // defect-1 nilpotents
  for (int k = 1; k <= n; ++k) {
    total += term;
    term *= (n - k);
    term /= BigInt(k) * (k + 1);
  }
  return total;
}

BigInt partial_injection_count(int i, int j) {
  const int m = std::min(i, j);
  BigInt total = 0;
  BigInt term = 1;  // C(i,k) C(j,k) k!
  for (int k = 0; k <= m; ++k) {
    total += term;
    term *= BigInt(i - k) * (j - k);
    term /= k + 1;
  }
  return total;
}

// ---- CountContext ----------------------------------------------------------

CountContext::CountContext(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw Error("ground-set size must be non-negative");
  fact_.resize(n_max + 1);
  is_.resize(n_max + 1);
  nil_.resize(n_max + 1);
  chains_.resize(n_max + 1);
  nil_chains_.resize(n_max + 1);
  fact_[0] = 1;
  for (int m = 1; m <= n_max; ++m) fact_[m] = fact_[m - 1] * m;
  for (int m = 0; m <= n_max; ++m) {
    BigInt is_sum = 0, chain_sum = 0;
    BigInt r = 1;
    for (int k = 0; k <= m; ++k) {
      is_sum += r;
      chain_sum += BigInt(m - k) * r;
      r *= BigInt(m - k) * (m - k);
      r /= k + 1;
    }
    is_[m] = std::move(is_sum);
    chains_[m] = std::move(chain_sum);

    BigInt nil_sum = 0, nil_chain_sum = 0;
    BigInt lah = fact_[m];
    for (int k = 1; k <= m; ++k) {
      nil_sum += lah;
      nil_chain_sum += BigInt(k) * lah;
      lah *= (m - k);
      lah /= BigInt(k) * (k + 1);
    }
    nil_[m] = (m == 0) ? BigInt(1) : std::move(nil_sum);
    nil_chains_[m] = std::move(nil_chain_sum);
  }
}

BigInt CountContext::binomial(int n, int k) const {
  if (k < 0 || k > n) return 0;
  return fact_[n] / (fact_[k] * fact_[n - k]);
}

BigInt CountContext::falling(int n, int k) const {
  if (k < 0 || k > n) return 0;
  return fact_[n] / fact_[n - k];
}

BigInt CountContext::rank_class_size(int n, int k) const {
  if (k < 0 || k > n) return 0;
  const BigInt c = binomial(n, k);
  return c * c * fact_[k];
}

BigInt CountContext::signless_lah(int n, int k) const {
  if (k < 1 || k > n) return 0;
  return fact_[n] / fact_[k] * binomial(n - 1, k - 1);
}

BigInt CountContext::injection_count(int i, int j) const {
  const int m = std::min(i, j);
  BigInt total = 0;
  BigInt term = 1;
  for (int k = 0; k <= m; ++k) {
    total += term;
    term *= BigInt(i - k) * (j - k);
    term /= k + 1;
  }
  return total;
}

// ---- count table -----------------------------------------------------------

CountTable count_table(const CountContext& ctx, int n) {
  CountTable t;
  t.n = n;
  t.card_is = ctx.semigroup_size(n);
  t.card_t = ctx.nilpotent_count(n);
  t.chains_total = ctx.chain_total(n);
  t.chains_total_nilpotent = ctx.nilpotent_chain_total(n);
  t.fixed_points_total = (n >= 1) ? BigInt(n) * ctx.semigroup_size(n - 1) : 0;
  t.idempotents = BigInt(1) << n;

  t.r.resize(n + 1);
  t.d.resize(n + 1);
  {
    BigInt r = 1;
    for (int k = 0; k <= n; ++k) {
      t.r[k] = r;
      r *= BigInt(n - k) * (n - k);
      r /= k + 1;
    }
  }
  for (int k = 0; k <= n; ++k) t.d[k] = t.r[n - k];

  t.lah.assign(n + 1, 0);
  if (n >= 1) {
    BigInt lah = ctx.factorial(n);
    for (int k = 1; k <= n; ++k) {
      t.lah[k] = lah;
      lah *= (n - k);
      lah /= BigInt(k) * (k + 1);
    }
  }

  t.st.resize(n + 1);
  t.chains_by_length.assign(n + 1, 0);
  t.cycles_by_length.assign(n + 1, 0);
  {
    BigInt fall = 1;  // [n]_k
    for (int k = 0; k <= n; ++k) {
      t.st[k] = fall * ctx.nilpotent_count(n - k);
      if (k >= 1) {
        t.chains_by_length[k] = fall * ctx.semigroup_size(n - k);
        t.cycles_by_length[k] = t.chains_by_length[k] / k;
      }
      fall *= (n - k);
    }
  }

  t.orbit_counts.resize(n + 1);
  t.orbit_counts_nilpotent.resize(n + 1);
  if (n == 0) {
    // the empty map has the empty orbit
    t.orbit_counts[0] = 1;
    t.orbit_counts_nilpotent[0] = 1;
  } else {
    t.orbit_counts[0] = ctx.nilpotent_count(n);
    t.orbit_counts[1] = ctx.semigroup_size(n - 1);
    t.orbit_counts_nilpotent[0] = ctx.semigroup_size(n - 1);
    if (n >= 1) t.orbit_counts_nilpotent[1] = 0;  // nilpotents have no fixed points
    BigInt fall = 1;  // [n-1]_{k-1}
    for (int k = 2; k <= n; ++k) {
      fall *= (n - k + 1);
      t.orbit_counts[k] =
          fall * (ctx.chain_total(n - k) + 2 * ctx.semigroup_size(n - k));
      t.orbit_counts_nilpotent[k] =
          fall * (ctx.nilpotent_chain_total(n - k) + ctx.nilpotent_count(n - k));
    }
  }

  t.b = Rational(t.card_is, ctx.factorial(n));
  if (n >= 1) {
    // components = chains + cycles, summed over the semigroup
    BigInt cycles_total = 0;
    for (int k = 1; k <= n; ++k) cycles_total += t.cycles_by_length[k];
    t.c_avg = Rational(t.chains_total + cycles_total, t.card_is);
  }
  return t;
}

CountTable count_table(int n) {
  CountContext ctx(n);
  return count_table(ctx, n);
}

// ---- enumeration -----------------------------------------------------------

namespace {

bool has_cycle(const PartialInjection& a) {
  const int n = a.n();
  std::vector<char> alive(n + 1, 0);
  for (int v : a.table())
    if (v != 0) alive[v] = 1;
  // peel chains from their sources; whatever survives lies on a cycle
  std::vector<char> seen(n + 1, 0);
  int covered = 0;
  for (int s = 1; s <= n; ++s) {
    if (alive[s]) continue;
    for (int x = s; x != 0 && !seen[x]; x = a.table()[x - 1]) {
      seen[x] = 1;
      ++covered;
    }
  }
  return covered < n;
}

struct RankClassGenerator {
  int n;
  const std::function<void(const PartialInjection&)>& fn;
  std::vector<int> table;
  std::vector<char> used;

  void run(int k) { rec(0, k); }

  void rec(int pos, int remaining) {
    if (pos == n) {
      fn(PartialInjection::from_table(table));
      return;
    }
    if (n - pos - 1 >= remaining) {
      table[pos] = 0;
      rec(pos + 1, remaining);
    }
    if (remaining > 0) {
      for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        table[pos] = v;
        rec(pos + 1, remaining - 1);
        used[v] = 0;
      }
    }
    table[pos] = 0;
  }
};

}  // namespace

BigInt enumeration_size(int n, const EnumFilter& filter) {
  switch (filter.kind) {
    case EnumFilter::Kind::rank:
      return rank_class_size(n, filter.k);
    case EnumFilter::Kind::nilpotent_defect:
      return defect_class_size(n, filter.k);
    case EnumFilter::Kind::all:
    case EnumFilter::Kind::nilpotent:
    case EnumFilter::Kind::custom:
      return semigroup_size(n);
  }
  return 0;
}

void for_each_element(int n, const EnumFilter& filter, const Budget& budget,
                      const std::function<void(const PartialInjection&)>& fn) {
  if (n < 0) throw Error("ground-set size must be non-negative");
  const BigInt needed = enumeration_size(n, filter);
  if (needed > budget.max_elements) {
    throw BudgetExceeded("enumeration needs " + needed.str() +
                             " elements, budget is " +
                             std::to_string(budget.max_elements),
                         needed);
  }
  auto run_class = [&](int k, const std::function<void(const PartialInjection&)>& cb) {
    if (k < 0 || k > n) return;
    RankClassGenerator gen{n, cb, std::vector<int>(n, 0),
                           std::vector<char>(n + 1, 0)};
    gen.run(k);
  };
  switch (filter.kind) {
    case EnumFilter::Kind::all:
      for (int k = 0; k <= n; ++k) run_class(k, fn);
      break;
    case EnumFilter::Kind::rank:
      run_class(filter.k, fn);
      break;
    case EnumFilter::Kind::nilpotent: {
      std::function<void(const PartialInjection&)> cb =
          [&fn](const PartialInjection& a) {
            if (!has_cycle(a)) fn(a);
          };
      for (int k = 0; k <= n; ++k) run_class(k, cb);
      break;
    }
    case EnumFilter::Kind::nilpotent_defect: {
      std::function<void(const PartialInjection&)> cb =
          [&fn](const PartialInjection& a) {
            if (!has_cycle(a)) fn(a);
          };
      run_class(n - filter.k, cb);
      break;
    }
    case EnumFilter::Kind::custom: {
      std::function<void(const PartialInjection&)> cb =
          [&](const PartialInjection& a) {
            if (filter.predicate(a)) fn(a);
          };
      for (int k = 0; k <= n; ++k) run_class(k, cb);
      break;
    }
  }
}

std::vector<PartialInjection> all_elements(int n, const EnumFilter& filter,
                                           const Budget& budget) {
  std::vector<PartialInjection> out;
  for_each_element(n, filter, budget,
                   [&out](const PartialInjection& a) { out.push_back(a); });
  return out;
}

// ---- element order ---------------------------------------------------------

ElementOrder::ElementOrder(int n) : n_(n) {
  if (n < 0) throw Error("ground-set size must be non-negative");
  rank_sizes_.resize(n + 1);
  cum_.resize(n + 2);
  cum_[0] = 0;
  BigInt r = 1;
  for (int k = 0; k <= n; ++k) {
    rank_sizes_[k] = r;
    cum_[k + 1] = cum_[k] + r;
    r *= BigInt(n - k) * (n - k);
    r /= k + 1;
  }
  total_ = cum_[n + 1];
  choose_.assign((n + 1) * (n + 1), 0);
  fall_.assign((n + 1) * (n + 1), 0);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      choose_[a * (n_ + 1) + b] = binomial(a, b);
      fall_[a * (n_ + 1) + b] = falling_factorial(a, b);
    }
  }
}

BigInt ElementOrder::index_of(const PartialInjection& a) const {
  if (a.n() != n_) throw SizeMismatch("element size differs from order size");
  const int k = a.rank();
  BigInt idx = cum_[k];
  std::vector<char> used(n_ + 1, 0);
  int d = k;       // defined entries still to the right (incl. current)
  int v = n_;      // values not yet used
  for (int pos = 0; pos < n_; ++pos) {
    const int r = n_ - pos - 1;
    const int entry = a.table()[pos];
    if (entry == 0) continue;
    if (r >= d)  // the undefined option comes first
      idx += choose_[r * (n_ + 1) + d] * fall_[v * (n_ + 1) + d];
    const BigInt per_value =
        choose_[r * (n_ + 1) + (d - 1)] * fall_[(v - 1) * (n_ + 1) + (d - 1)];
    int smaller_unused = 0;
    for (int u = 1; u < entry; ++u)
      if (!used[u]) ++smaller_unused;
    idx += per_value * smaller_unused;
    used[entry] = 1;
    --d;
    --v;
  }
  return idx;
}

PartialInjection ElementOrder::at(BigInt index) const {
  if (index < 0 || index >= total_)
    throw PointOutOfRange("element index " + index.str() + " outside [0, " +
                          total_.str() + ")");
  int k = 0;
  while (index >= cum_[k + 1]) ++k;
  index -= cum_[k];
  std::vector<int> table(n_, 0);
  std::vector<char> used(n_ + 1, 0);
  int d = k;
  int v = n_;
  for (int pos = 0; pos < n_; ++pos) {
    const int r = n_ - pos - 1;
    if (r >= d) {
      const BigInt with_blank =
          choose_[r * (n_ + 1) + d] * fall_[v * (n_ + 1) + d];
      if (index < with_blank) continue;  // leave entry undefined
      index -= with_blank;
    }
    const BigInt per_value =
        choose_[r * (n_ + 1) + (d - 1)] * fall_[(v - 1) * (n_ + 1) + (d - 1)];
    BigInt q = index / per_value;
    index -= q * per_value;
    int value = 0;
    for (int u = 1; u <= n_; ++u) {
      if (used[u]) continue;
      if (q == 0) {
        value = u;
        break;
      }
      --q;
    }
    table[pos] = value;
    used[value] = 1;
    --d;
    --v;
  }
  return PartialInjection::from_table(std::move(table));
}

BigInt element_index(const PartialInjection& a) {
  return ElementOrder(a.n()).index_of(a);
}

PartialInjection element_at(int n, const BigInt& index) {
  return ElementOrder(n).at(index);
}

// ---- tallies ----------------------------------------------------------------

EnumStats tally_elements(int n, const Budget& budget) {
  EnumStats s;
  s.n = n;
  s.by_rank.assign(n + 1, 0);
  s.by_defect.assign(n + 1, 0);
  s.nilpotent_by_defect.assign(n + 1, 0);
  s.by_stable_rank.assign(n + 1, 0);
  s.chains_by_length.assign(n + 1, 0);
  s.cycles_by_length.assign(n + 1, 0);
  s.orbit1_by_length.assign(n + 1, 0);
  s.orbit1_nilpotent_by_length.assign(n + 1, 0);

  for_each_element(n, EnumFilter::all(), budget, [&](const PartialInjection& a) {
    const auto chart = chart_decomposition(a);
    const int rank = a.rank();
    const int defect = n - rank;
    const bool nilpotent = chart.cycles.empty();
    ++s.total;
    ++s.by_rank[rank];
    ++s.by_defect[defect];
    s.rank_total += rank;
    s.component_total += chart.cycles.size() + chart.chains.size();
    s.chains_total += chart.chains.size();
    int stable_rank = 0;
    for (const auto& c : chart.cycles) {
      ++s.cycles_by_length[c.size()];
      stable_rank += static_cast<int>(c.size());
      if (c.size() == 1) ++s.fixed_point_total;
    }
    for (const auto& c : chart.chains) ++s.chains_by_length[c.size()];
    ++s.by_stable_rank[stable_rank];
    s.cycle_point_total += stable_rank;
    if (nilpotent) {
      ++s.nilpotent_total;
      ++s.nilpotent_by_defect[defect];
      s.nilpotent_chains_total += chart.chains.size();
      for (const auto& c : chart.chains)
        if (c.size() == 1 && c[0] == 1) ++s.nilpotent_with_singleton_1;
    }
    if (a.is_idempotent()) ++s.idempotent_total;
    if (n >= 1) {
      const auto trace = orbit(a, 1);
      ++s.orbit1_by_length[trace.length()];
      s.orbit1_length_total += trace.length();
      if (nilpotent) ++s.orbit1_nilpotent_by_length[trace.length()];
      if (a.defined(1)) {
        ++s.with_1_in_domain;
        if (n >= 2 && a.defined(2)) ++s.with_1_and_2_in_domain;
      }
    } else {
      ++s.orbit1_by_length[0];
      ++s.orbit1_nilpotent_by_length[0];
    }
  });
  return s;
}

// ---- identity verification --------------------------------------------------

namespace {

std::string str(const BigInt& v) { return v.str(); }

std::string str(const Rational& v) { return to_string(v); }

std::string str(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

struct Checker {
  std::vector<IdentityCheck> checks;

  void closed(const std::string& name, const BigInt& lhs, const BigInt& rhs) {
    checks.push_back({name, str(lhs), str(rhs), false, lhs == rhs});
  }
  void closed(const std::string& name, const Rational& lhs,
              const Rational& rhs) {
    checks.push_back({name, str(lhs), str(rhs), false, lhs == rhs});
  }
  void closed(const std::string& name, const std::vector<BigInt>& lhs,
              const std::vector<BigInt>& rhs) {
    checks.push_back({name, str(lhs), str(rhs), false, lhs == rhs});
  }

  void enumerated(const std::string& name, const BigInt& closed_value,
                  const BigInt& observed) {
    checks.push_back(
        {name, str(closed_value), str(observed), true, closed_value == observed});
  }
  void enumerated(const std::string& name, const Rational& closed_value,
                  const Rational& observed) {
    checks.push_back(
        {name, str(closed_value), str(observed), true, closed_value == observed});
  }
  void enumerated(const std::string& name, const std::vector<BigInt>& closed_value,
                  const std::vector<BigInt>& observed) {
    checks.push_back(
        {name, str(closed_value), str(observed), true, closed_value == observed});
  }
};

}  // namespace

bool IdentityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

IdentityReport verify_identities(const CountContext& ctx, int n,
                                 const Budget& budget) {
  if (ctx.n_max() < n + 1)
    throw SizeMismatch("context too small; need n_max >= n + 1");
  IdentityReport report;
  report.n = n;

  std::optional<EnumStats> stats;
  if (enumeration_size(n, EnumFilter::all()) <= budget.max_elements)
    stats = tally_elements(n, budget);
  report.used_enumeration = stats.has_value();

  const CountTable table = count_table(ctx, n);
  Checker out;

  const BigInt& is_n = table.card_is;
  const BigInt& t_n = table.card_t;

  // |T_n| from the defect classes: n |T_n| = sum k D_{n,k}
  if (n >= 1) {
    BigInt rhs = 0;
    for (int k = 1; k <= n; ++k) rhs += BigInt(k) * table.d[k];
    out.closed("nilpotent_count_from_defect_classes", BigInt(n) * t_n, rhs);
    if (stats)
      out.enumerated("nilpotent_count_from_defect_classes", t_n,
                     stats->nilpotent_total);
  }

  // marking a point of a nilpotent <-> marking a chain: n lah_k = k D_{n,k}
  if (n >= 1) {
    std::vector<BigInt> lhs(n), rhs(n);
    for (int k = 1; k <= n; ++k) {
      lhs[k - 1] = BigInt(n) * table.lah[k];
      rhs[k - 1] = BigInt(k) * table.d[k];
    }
    out.closed("lah_defect_marking", lhs, rhs);
    if (stats) {
      std::vector<BigInt> obs(n);
      for (int k = 1; k <= n; ++k)
        obs[k - 1] = BigInt(n) * stats->nilpotent_by_defect[k];
      out.enumerated("lah_defect_marking", rhs, obs);
    }
  }

  // stable-rank classes partition the semigroup
  {
    BigInt total = 0;
    for (const BigInt& v : table.st) total += v;
    out.closed("stable_rank_classes_total", is_n, total);
    if (stats)
      out.enumerated("stable_rank_classes", table.st, stats->by_stable_rank);
  }

  // chains and cycles counted by length
  if (n >= 1) {
    std::vector<BigInt> k_cycles(n), chains(n);
    for (int k = 1; k <= n; ++k) {
      k_cycles[k - 1] = BigInt(k) * table.cycles_by_length[k];
      chains[k - 1] = table.chains_by_length[k];
    }
    out.closed("cycle_counts_by_length", k_cycles, chains);
    if (stats) {
      std::vector<BigInt> closed_chains(table.chains_by_length.begin() + 1,
                                        table.chains_by_length.end());
      std::vector<BigInt> obs_chains(stats->chains_by_length.begin() + 1,
                                     stats->chains_by_length.end());
      out.enumerated("chain_counts_by_length", closed_chains, obs_chains);
      std::vector<BigInt> closed_cycles(table.cycles_by_length.begin() + 1,
                                        table.cycles_by_length.end());
      std::vector<BigInt> obs_cycles(stats->cycles_by_length.begin() + 1,
                                     stats->cycles_by_length.end());
      out.enumerated("cycle_counts_by_length", closed_cycles, obs_cycles);
    }
  }

  // two closed routes to the chain total: by defect and by length
  if (n >= 1) {
    BigInt by_defect = 0, by_length = 0;
    for (int k = 0; k <= n; ++k) by_defect += BigInt(n - k) * table.r[k];
    for (int k = 1; k <= n; ++k) by_length += table.chains_by_length[k];
    out.closed("chain_total_by_length_sum", by_defect, by_length);
    if (stats)
      out.enumerated("chain_total_from_defect_classes", table.chains_total,
                     stats->chains_total);
  }

  // average rank + average defect = n
  if (n >= 1) {
    BigInt lhs = 0;
    for (int k = 1; k <= n; ++k) lhs += BigInt(k) * table.r[k];
    for (int k = 1; k <= n; ++k) lhs += table.chains_by_length[k];
    out.closed("rank_defect_average_sum", lhs, BigInt(n) * is_n);
    if (stats)
      out.enumerated("rank_defect_average_sum", BigInt(n) * is_n,
                     stats->rank_total + stats->chains_total);
  }

  // average number of components
  if (n >= 1) {
    Rational weighted = 0;  // sum [n]_k (1 + 1/k) |IS_{n-k}|
    BigInt fall = 1;
    for (int k = 1; k <= n; ++k) {
      fall *= (n - k + 1);
      weighted += Rational(fall * ctx.semigroup_size(n - k)) *
                  Rational(BigInt(k + 1), BigInt(k));
    }
    out.closed("average_component_count", table.c_avg * Rational(is_n),
               weighted);
    if (stats)
      out.enumerated("average_component_count", table.c_avg * Rational(is_n),
                     Rational(stats->component_total));
  }

  // fixed points and chains fill the marked semigroup: n P_n + L_n = n |IS_n|
  if (n >= 1) {
    out.closed("fixed_points_plus_chains",
               BigInt(n) * table.fixed_points_total + table.chains_total,
               BigInt(n) * is_n);
    if (stats)
      out.enumerated(
          "fixed_points_plus_chains", BigInt(n) * is_n,
          BigInt(n) * stats->fixed_point_total + stats->chains_total);
  }

  // total stable rank equals the chain total
  if (n >= 1) {
    BigInt weighted_st = 0;
    for (int k = 1; k <= n; ++k) weighted_st += BigInt(k) * table.st[k];
    out.closed("stable_rank_total_is_chain_total", weighted_st,
               table.chains_total);
    if (stats)
      out.enumerated("stable_rank_total_is_chain_total", table.chains_total,
                     stats->cycle_point_total);
  }

  // total orbit-of-1 length equals the chain total
  if (n >= 1) {
    BigInt weighted_orbits = 0;
    for (int k = 1; k <= n; ++k)
      weighted_orbits += BigInt(k) * table.orbit_counts[k];
    out.closed("orbit_length_total_is_chain_total", weighted_orbits,
               table.chains_total);
    if (stats)
      out.enumerated("orbit_length_total_is_chain_total", table.chains_total,
                     stats->orbit1_length_total);
  }

  // orbits of 1 counted by length partition the semigroup
  {
    BigInt orbit_sum = 0;
    for (const BigInt& v : table.orbit_counts) orbit_sum += v;
    out.closed("orbit_counts_by_length_total", is_n, orbit_sum);
    if (stats)
      out.enumerated("orbit_counts_by_length", table.orbit_counts,
                     stats->orbit1_by_length);
  }

  // and the same over the nilpotent part
  {
    BigInt orbit_sum = 0;
    for (const BigInt& v : table.orbit_counts_nilpotent) orbit_sum += v;
    out.closed("nilpotent_orbit_counts_total", t_n, orbit_sum);
    if (stats)
      out.enumerated("nilpotent_orbit_counts_by_length",
                     table.orbit_counts_nilpotent,
                     stats->orbit1_nilpotent_by_length);
  }

  // nilpotents whose chart contains the singleton chain [1]
  if (n >= 1 && stats)
    out.enumerated("nilpotent_singleton_chain_count",
                   ctx.nilpotent_count(n - 1),
                   stats->nilpotent_with_singleton_1);

  // |T_n| = L_n / n
  if (n >= 1) {
    out.closed("nilpotent_count_from_chain_total", BigInt(n) * t_n,
               table.chains_total);
    if (stats)
      out.enumerated("nilpotent_count_from_chain_total",
                     BigInt(n) * stats->nilpotent_total, stats->chains_total);
  }

  // |IS_n| = (chains over nilpotents one size up) / (n + 1)
  {
    out.closed("size_from_nilpotent_chain_total", BigInt(n + 1) * is_n,
               ctx.nilpotent_chain_total(n + 1));
    if (stats && n >= 1)
      out.enumerated("size_from_nilpotent_chain_total",
                     BigInt(n) * ctx.semigroup_size(n - 1),
                     stats->nilpotent_chains_total);
  }

  // |T_n| = |IS_{n-1}| + L_{n-1}
  if (n >= 1) {
    out.closed("nilpotent_count_split", t_n,
               ctx.semigroup_size(n - 1) + ctx.chain_total(n - 1));
    if (stats)
      out.enumerated("nilpotent_count_split",
                     ctx.semigroup_size(n - 1) + ctx.chain_total(n - 1),
                     stats->nilpotent_total);
  }

  // |IS_n| = |T_n| + chains over nilpotents
  {
    out.closed("size_split_nilpotent", is_n,
               t_n + ctx.nilpotent_chain_total(n));
    if (stats)
      out.enumerated("size_split_nilpotent", stats->total,
                     stats->nilpotent_total + stats->nilpotent_chains_total);
  }

  // |IS_n| = sum over stable ranks [n]_k |T_{n-k}|
  {
    BigInt rhs = 0, fall = 1;
    for (int k = 0; k <= n; ++k) {
      rhs += fall * ctx.nilpotent_count(n - k);
      fall *= (n - k);
    }
    out.closed("size_from_stable_rank_classes", is_n, rhs);
  }

  // |IS_n| = sum [n-1]_{k-1} (n+k) |T_{n-k}|
  if (n >= 1) {
    BigInt rhs = 0, fall = 1;
    for (int k = 1; k <= n; ++k) {
      rhs += fall * BigInt(n + k) * ctx.nilpotent_count(n - k);
      fall *= (n - k);
    }
    out.closed("size_from_weighted_nilpotents", is_n, rhs);
  }

  // |T_n| = sum k [n-1]_{k-1} |T_{n-k}|
  if (n >= 1) {
    BigInt rhs = 0, fall = 1;
    for (int k = 1; k <= n; ++k) {
      rhs += BigInt(k) * fall * ctx.nilpotent_count(n - k);
      fall *= (n - k);
    }
    out.closed("nilpotent_count_recurrence", t_n, rhs);
  }

  // |T_n| counts the partial injections {2..n} -> {1..n}
  if (n >= 1) {
    out.closed("nilpotent_count_as_rectangle", t_n,
               ctx.injection_count(n - 1, n));
    if (stats)
      out.enumerated("nilpotent_count_as_rectangle",
                     ctx.injection_count(n - 1, n), stats->nilpotent_total);
  }

  // idempotents are the partial identities: one per subset
  {
    BigInt subsets = 0;
    for (int k = 0; k <= n; ++k) subsets += ctx.binomial(n, k);
    out.closed("idempotent_count", table.idempotents, subsets);
    if (stats)
      out.enumerated("idempotent_count", table.idempotents,
                     stats->idempotent_total);
  }

  // membership of a point in the domain, and the joint event for two points
  if (n >= 1 && stats) {
    const Rational single(BigInt(n) * ctx.semigroup_size(n - 1), is_n);
    out.enumerated("domain_membership_probability", single,
                   Rational(stats->with_1_in_domain, stats->total));
    if (n >= 2) {
      const Rational joint(ctx.falling(n, 2) * ctx.semigroup_size(n - 2), is_n);
      const bool routes_match =
          joint == Rational(stats->with_1_and_2_in_domain, stats->total);
      const bool dependent = joint != single * single;  // the point of the example
      out.checks.push_back({"domain_membership_joint", to_string(joint),
                            to_string(Rational(stats->with_1_and_2_in_domain,
                                               stats->total)),
                            true, routes_match && dependent});
    }
  }

  report.checks = std::move(out.checks);
  return report;
}

IdentityReport verify_identities(int n, const Budget& budget) {
  CountContext ctx(n + 1);
  return verify_identities(ctx, n, budget);
}

}  // namespace pinj
