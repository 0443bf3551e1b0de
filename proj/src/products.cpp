#include "pinj/products.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "pinj/chart.hpp"
#include "pinj/errors.hpp"

namespace pinj {

namespace {

// integer transition matrix; the public RationalMatrix wraps it
std::vector<BigInt> integer_matrix(const CountContext& ctx, int n) {
  std::vector<BigInt> a(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      a[i * (n + 1) + j] = ctx.binomial(n - i, j - i) * ctx.binomial(n, j) *
                           ctx.factorial(j) *
                           ctx.injection_count(n - i, n - j);
  return a;
}

std::vector<BigInt> matvec(const std::vector<BigInt>& a,
                           const std::vector<BigInt>& v, int order) {
  std::vector<BigInt> out(order);
  for (int i = 0; i < order; ++i) {
    BigInt sum = 0;
    for (int j = i; j < order; ++j) sum += a[i * order + j] * v[j];
    out[i] = std::move(sum);
  }
  return out;
}

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

}  // namespace

RationalMatrix build_matrix(int n) {
  CountContext ctx(n);
  const auto a = integer_matrix(ctx, n);
  RationalMatrix m(n + 1);
  for (std::size_t i = 0; i < a.size(); ++i) m.entries[i] = Rational(a[i]);
  return m;
}

RationalMatrix basis_change_matrix(int n) {
  CountContext ctx(n);
  RationalMatrix m(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      BigInt v = ctx.rank_class_size(n - i, j - i);
      if ((j - i) % 2) v = -v;
      m.at(i, j) = Rational(std::move(v));
    }
  return m;
}

RankDistribution rank_distribution(int n, int k) {
  if (k < 1) throw Error("product length k must be at least 1");
  CountContext ctx(n);
  const auto a = integer_matrix(ctx, n);
  std::vector<BigInt> v(n + 1, 1);
  for (int step = 1; step < k; ++step) v = matvec(a, v, n + 1);
  BigInt denom = 1;
  for (int i = 0; i < k; ++i) denom *= ctx.semigroup_size(n);
  RankDistribution dist;
  dist.n = n;
  dist.k = k;
  dist.p.resize(n + 1);
  for (int i = 0; i <= n; ++i) dist.p[i] = Rational(v[i], denom);
  return dist;
}

Rational prob_of_subset(const RankDistribution& dist,
                        const std::vector<BigInt>& multiplicities) {
  const int n = dist.n;
  if (static_cast<int>(multiplicities.size()) != n + 1)
    throw MultiplicityOutOfRange("expected " + std::to_string(n + 1) +
                                 " multiplicities");
  Rational total = 0;
  for (int i = 0; i <= n; ++i) {
    if (multiplicities[i] < 0 || multiplicities[i] > rank_class_size(n, i))
      throw MultiplicityOutOfRange("multiplicity for rank " +
                                   std::to_string(i) + " outside [0, " +
                                   rank_class_size(n, i).str() + "]");
    total += Rational(multiplicities[i]) * dist.p[i];
  }
  return total;
}

std::vector<BigInt> nilpotent_rank_multiplicities(int n) {
  std::vector<BigInt> m(n + 1, 0);
  if (n == 0) {
    m[0] = 1;  // the empty map
    return m;
  }
  for (int i = 0; i < n; ++i) m[i] = signless_lah(n, n - i);
  return m;
}

Rational rank_probability(const RankDistribution& dist, int rank) {
  return Rational(rank_class_size(dist.n, rank)) * dist.p[rank];
}

std::vector<EigenPair> eigenbasis(int n) {
  CountContext ctx(n);
  std::vector<EigenPair> pairs(n + 1);
  for (int k = 0; k <= n; ++k) {
    pairs[k].eigenvalue = ctx.falling(n, k) * ctx.semigroup_size(n - k);
    pairs[k].vector.assign(n + 1, 0);
    for (int j = 0; j <= k; ++j) {
      BigInt v = ctx.rank_class_size(n - j, k - j);
      if ((k - j) % 2) v = -v;
      pairs[k].vector[j] = std::move(v);
    }
  }
  return pairs;
}

bool SpectralReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

SpectralReport verify_spectral_identities(int n) {
  CountContext ctx(n);
  SpectralReport report;
  report.n = n;
  const auto a = integer_matrix(ctx, n);
  const auto pairs = eigenbasis(n);

  {
    bool ok = true;
    for (int k = 0; k <= n && ok; ++k) {
      const auto product = matvec(a, pairs[k].vector, n + 1);
      for (int j = 0; j <= n && ok; ++j)
        ok = product[j] == pairs[k].eigenvalue * pairs[k].vector[j];
    }
    report.checks.push_back({"eigen_equations",
                             std::to_string(n + 1) + " eigenpairs",
                             ok ? "all exact" : "mismatch", false, ok});
  }

  {
    // consecutive-diagonal ratio exceeds (n-i+1)/(n-i); the bound is attained
    // with equality at the last pair, where the growth inequality behind it
    // bottoms out, so that pair is tested non-strictly and the eigenvalues
    // are still required to separate
    bool ok = true;
    std::string detail = "[";
    for (int i = 0; i < n; ++i) {
      const BigInt& top = a[i * (n + 1) + i];
      const BigInt& bottom = a[(i + 1) * (n + 1) + (i + 1)];
      const BigInt lhs = top * (n - i);
      const BigInt rhs = bottom * (n - i + 1);
      ok = ok && (i < n - 1 ? lhs > rhs : lhs >= rhs) && top > bottom;
      if (i) detail += ", ";
      detail += top.str();
    }
    detail += std::string(n ? ", " : "") + a[n * (n + 1) + n].str() + "]";
    report.checks.push_back({"eigenvalue_ratio_bound", detail,
                             ok ? "separated" : "violated", false, ok});
  }

  {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) {
      BigInt term = ctx.semigroup_size(n - k) * ctx.rank_class_size(n, k);
      if (k % 2) term = -term;
      sum += term;
    }
    report.checks.push_back(
        {"alternating_convolution", str(sum), "1", false, sum == 1});
  }

  {
    // the all-ones vector has eigenbasis coordinates (|IS_n|, ..., |IS_0|)
    std::vector<BigInt> coords(n + 1);
    for (int j = 0; j <= n; ++j) coords[j] = ctx.semigroup_size(n - j);
    std::vector<BigInt> image(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
      BigInt sum = 0;
      for (int j = i; j <= n; ++j) {
        BigInt term = ctx.rank_class_size(n - i, j - i) * coords[j];
        if ((j - i) % 2) term = -term;
        sum += term;
      }
      image[i] = std::move(sum);
    }
    const bool ok =
        std::all_of(image.begin(), image.end(),
                    [](const BigInt& v) { return v == 1; });
    report.checks.push_back(
        {"ones_vector_coordinates", str(coords), str(image), false, ok});
  }

  {
    bool ok = true;
    for (int k = 0; k <= n && ok; ++k) {
      BigInt lhs = 0;
      for (int i = 0; i <= k; ++i) {
        BigInt term = ctx.binomial(k, i) * ctx.injection_count(n, n - i);
        if (i % 2) term = -term;
        lhs += term;
      }
      ok = lhs == ctx.falling(n, k) * ctx.injection_count(n - k, n - k);
    }
    report.checks.push_back({"domain_inclusion_exclusion",
                             "alternating sums for k = 0.." + std::to_string(n),
                             ok ? "all exact" : "mismatch", false, ok});
  }

  return report;
}

bool CrossCheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

CrossCheckReport cross_checks(int n, int k, int k_cap) {
  CrossCheckReport report;
  report.n = n;
  report.k = k;
  CountContext ctx(n);
  const RankDistribution dist = rank_distribution(n, k);
  const BigInt& is_n = ctx.semigroup_size(n);

  BigInt is_n_pow_k = 1;  // |IS_n|^k
  for (int i = 0; i < k; ++i) is_n_pow_k *= is_n;

  {
    // P^{(i)} factors through the defect part at size n - i
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i) {
      const Rational p0 = rank_distribution(n - i, k).p[0];
      BigInt scale = 1;  // |IS_{n-i}|^k [n]_i^{k-1}
      for (int j = 0; j < k; ++j) scale *= ctx.semigroup_size(n - i);
      for (int j = 0; j < k - 1; ++j) scale *= ctx.falling(n, i);
      ok = dist.p[i] == Rational(scale, is_n_pow_k) * p0;
    }
    report.checks.push_back({"rank_reduction",
                             "reduction to rank 0 at sizes n-i",
                             ok ? "all exact" : "mismatch", false, ok});
  }

  {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i) {
      BigInt upper_num = 1, fall = 1;
      for (int j = 0; j < k; ++j) upper_num *= ctx.semigroup_size(n - i);
      for (int j = 0; j < k - 1; ++j) fall *= ctx.falling(n, i);
      const Rational upper(upper_num * fall, is_n_pow_k);
      const Rational lower(upper_num / ctx.semigroup_size(n - i) * fall,
                           is_n_pow_k);
      ok = lower <= dist.p[i] && dist.p[i] <= upper;
    }
    report.checks.push_back({"probability_sandwich", "two-sided bounds",
                             ok ? "all hold" : "violated", false, ok});
  }

  {
    BigInt num = 1;
    for (int j = 0; j < k - 1; ++j) num *= ctx.factorial(n);
    const Rational expected(num, is_n_pow_k);
    report.checks.push_back({"top_rank_probability", to_string(expected),
                             to_string(dist.p[n]), false,
                             dist.p[n] == expected});
  }

  // monotone trends over product length
  const int cap = std::max(k, k_cap);
  std::vector<RankDistribution> dists;
  dists.reserve(cap);
  for (int j = 1; j <= cap; ++j) dists.push_back(rank_distribution(n, j));

  report.zero_rank_trend.rank = 0;
  for (const auto& d : dists) report.zero_rank_trend.values.push_back(d.p[0]);
  {
    bool increasing = true, below_one = true;
    for (int j = 1; j < cap; ++j) {
      if (n >= 1)
        increasing = increasing && dists[j].p[0] > dists[j - 1].p[0];
      below_one = below_one && dists[j].p[0] <= 1;
    }
    report.checks.push_back({"zero_rank_trend",
                             "strictly increasing toward 1",
                             increasing && below_one ? "holds" : "violated",
                             false, increasing && below_one});
  }

  {
    // positive ranks approach 0, strictly decreasing after a short burn-in
    bool approaches = true;
    for (int i = 1; i <= n; ++i) {
      TrendSequence seq;
      seq.rank = i;
      for (const auto& d : dists) seq.values.push_back(d.p[i]);
      int b = cap - 1;
      while (b > 0 && seq.values[b] < seq.values[b - 1]) --b;
      seq.burn_in = b + 1;
      approaches = approaches && b + 2 < cap;  // a real decreasing tail
      report.positive_rank_trends.push_back(std::move(seq));
    }
    report.checks.push_back({"positive_rank_trend",
                             "decreasing toward 0 after burn-in",
                             approaches ? "holds" : "violated", false,
                             approaches});
  }

  return report;
}

RankDistribution brute_force_distribution(int n, int k, const Budget& budget) {
  if (k < 1) throw Error("product length k must be at least 1");
  const BigInt size = semigroup_size(n);
  BigInt tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= size;
  if (tuples > budget.max_elements)
    throw BudgetExceeded("brute force needs " + tuples.str() +
                             " tuples, budget is " +
                             std::to_string(budget.max_elements),
                         tuples);

  const auto elements = all_elements(n, EnumFilter::all(), budget);
  const int count = static_cast<int>(elements.size());
  std::vector<std::uint64_t> hits(count, 0);

  if (k == 1) {
    for (int i = 0; i < count; ++i) hits[i] = 1;
  } else {
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < count; ++i) index[elements[i].table()] = i;

    // composition table when it fits, direct composition otherwise
    const bool use_table = count <= 2048;
    std::vector<int> mult;
    if (use_table) {
      mult.resize(static_cast<std::size_t>(count) * count);
      for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
          mult[i * count + j] = index.at(compose(elements[i], elements[j]).table());
    }

    // depth-first over all k-tuples, extending the partial product
    struct Walker {
      int count, k;
      const std::vector<int>* mult;
      const std::vector<PartialInjection>* elements;
      const std::map<std::vector<int>, int>* index;
      std::vector<std::uint64_t>* hits;

      void run(int depth, int prod) {
        if (depth == k) {
          ++(*hits)[prod];
          return;
        }
        if (mult) {
          for (int j = 0; j < count; ++j)
            run(depth + 1, (*mult)[prod * count + j]);
        } else {
          for (int j = 0; j < count; ++j)
            run(depth + 1,
                index->at(compose((*elements)[prod], (*elements)[j]).table()));
        }
      }
    };
    Walker walker{count, k, use_table ? &mult : nullptr, &elements, &index,
                  &hits};
    for (int first = 0; first < count; ++first) walker.run(1, first);
  }

  // per-element hit counts must be constant on every rank class
  std::vector<std::int64_t> class_count(n + 1, -1);
  for (int i = 0; i < count; ++i) {
    const int rank = elements[i].rank();
    if (class_count[rank] < 0)
      class_count[rank] = static_cast<std::int64_t>(hits[i]);
    else if (class_count[rank] != static_cast<std::int64_t>(hits[i]))
      throw std::logic_error("per-element product counts differ inside rank class " +
                             std::to_string(rank));
  }

  RankDistribution dist;
  dist.n = n;
  dist.k = k;
  dist.p.resize(n + 1);
  for (int i = 0; i <= n; ++i)
    dist.p[i] = Rational(BigInt(class_count[i]), tuples);
  return dist;
}

// ---- seeded sampling ---------------------------------------------------------

namespace {

// SplitMix64: documented, platform-independent
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// stream for one trial: scramble (seed, trial) into an initial state
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mixer{seed ^ (trial * 0xd1342543de82ef95ULL + 1)};
  return SplitMix64{mixer.next()};
}

// uniform big integer in [0, bound) by rejection on the top bits
BigInt uniform_below(SplitMix64& rng, const BigInt& bound, int bits) {
  const int words = (bits + 63) / 64;
  const int top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
  for (;;) {
    BigInt value = rng.next() & top_mask;
    for (int w = 1; w < words; ++w) value = (value << 64) | rng.next();
    if (value < bound) return value;
  }
}

}  // namespace

SampleReport monte_carlo(int n, int k, std::uint64_t trials,
                         std::uint64_t seed) {
  if (k < 1) throw Error("product length k must be at least 1");
  if (trials < 1) throw Error("at least one trial required");
  SampleReport report;
  report.n = n;
  report.k = k;
  report.trials = trials;
  report.seed = seed;
  report.rank_histogram.assign(n + 1, 0);
  report.reference = rank_distribution(n, k);

  const ElementOrder order(n);
  const BigInt& size = order.size();
  int bits = 0;
  for (BigInt v = size - 1; v > 0; v >>= 1) ++bits;
  bits = std::max(bits, 1);

  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = trial_stream(seed, t);
    PartialInjection current = order.at(uniform_below(rng, size, bits));
    for (int j = 1; j < k; ++j)
      current = compose(current, order.at(uniform_below(rng, size, bits)));
    ++report.rank_histogram[current.rank()];
  }

  report.empirical.resize(n + 1);
  report.max_abs_deviation = 0;
  for (int i = 0; i <= n; ++i) {
    report.empirical[i] = Rational(BigInt(report.rank_histogram[i]),
                                   BigInt(trials));
    const Rational expected = rank_probability(report.reference, i);
    Rational dev = report.empirical[i] - expected;
    if (dev < 0) dev = -dev;
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
  }
  return report;
}

bool sample_within_bound(const SampleReport& report) {
  const Rational trials{BigInt(report.trials)};
  for (int i = 0; i <= report.n; ++i) {
    const Rational p = rank_probability(report.reference, i);
    Rational dev = report.empirical[i] - p;
    if (dev < 0) dev = -dev;
    if (dev * dev * trials > 16 * p * (1 - p)) return false;
  }
  return true;
}

}  // namespace pinj
