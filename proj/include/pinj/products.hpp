#pragma once

#include <cstdint>
#include <vector>

#include "pinj/counting.hpp"
#include "pinj/numbers.hpp"

namespace pinj {

// Dense matrix with exact rational entries. The transition matrix itself is
// integral and upper triangular.
struct RationalMatrix {
  int order = 0;
  std::vector<Rational> entries;  // row-major

  RationalMatrix() = default;
  explicit RationalMatrix(int order_)
      : order(order_), entries(static_cast<std::size_t>(order_) * order_) {}

  Rational& at(int i, int j) { return entries[i * order + j]; }
  const Rational& at(int i, int j) const { return entries[i * order + j]; }

  bool operator==(const RationalMatrix&) const = default;
};

// The (n+1) x (n+1) matrix that advances the per-element probabilities of
// k-fold products by one factor: entry (i, j) counts, for a fixed target of
// rank i, the pairs (value of the shorter product of rank j, last factor).
RationalMatrix build_matrix(int n);

// Basis change to the eigenbasis below: entry (i, j) is
// (-1)^(j-i) * R_{n-i, j-i} for i <= j.
RationalMatrix basis_change_matrix(int n);

// Exact probability that a uniform random k-fold product equals one fixed
// element, per rank of that element.
struct RankDistribution {
  int n = 0;
  int k = 1;
  std::vector<Rational> p;  // index = rank, 0..n

  bool operator==(const RankDistribution&) const = default;
};

RankDistribution rank_distribution(int n, int k);

// Probability that the product lands in any set with the given number of
// elements of each rank. Throws MultiplicityOutOfRange.
Rational prob_of_subset(const RankDistribution& dist,
                        const std::vector<BigInt>& multiplicities);

// Multiplicities of the nilpotent set, by rank.
std::vector<BigInt> nilpotent_rank_multiplicities(int n);

// Probability that the product has the given rank: multiplicity-weighted.
Rational rank_probability(const RankDistribution& dist, int rank);

struct EigenPair {
  BigInt eigenvalue;
  std::vector<BigInt> vector;  // n+1 integer coordinates
};

// The n+1 eigenpairs of the transition matrix, eigenvalues strictly
// decreasing: eigenvalue [n]_k |IS_{n-k}| with eigenvector coordinates
// (-1)^(k-j) R_{n-j,k-j}.
std::vector<EigenPair> eigenbasis(int n);

struct SpectralReport {
  int n = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

// Exact checks: every eigen-equation, the strict eigenvalue-ratio bound, the
// alternating convolution summing to 1, the coordinates of the all-ones
// vector in the eigenbasis, and the domain inclusion-exclusion identity.
SpectralReport verify_spectral_identities(int n);

struct TrendSequence {
  int rank = 0;
  std::vector<Rational> values;  // index k-1 holds the value for k factors
  int burn_in = 1;  // smallest k from which the sequence is strictly monotone
};

struct CrossCheckReport {
  int n = 0;
  int k = 1;
  std::vector<IdentityCheck> checks;
  TrendSequence zero_rank_trend;                   // toward 1
  std::vector<TrendSequence> positive_rank_trends; // toward 0
  bool all_pass() const;
};

// Exact verification of the rank-reduction formula, the two-sided bound and
// the closed form at full rank, plus monotone-trend reports over 1..k_cap.
CrossCheckReport cross_checks(int n, int k, int k_cap = 12);

// Oracle: enumerate every k-tuple, compose, and tally. Verifies along the
// way that per-element counts are constant within each rank class.
RankDistribution brute_force_distribution(int n, int k,
                                          const Budget& budget = {});

struct SampleReport {
  int n = 0;
  int k = 1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> rank_histogram;  // by rank of the product
  std::vector<Rational> empirical;            // histogram / trials
  RankDistribution reference;
  Rational max_abs_deviation;  // empirical vs rank_probability(reference, .)
};

// Reproducible sampling: factor j of trial t comes from a SplitMix64 stream
// seeded by mix(seed, t), so the report depends only on (n, k, trials, seed).
// Elements are drawn by unranking a uniform index.
SampleReport monte_carlo(int n, int k, std::uint64_t trials,
                         std::uint64_t seed);

// Exact acceptance test: every per-rank deviation obeys
// (emp - p)^2 * trials <= 16 p (1 - p).
bool sample_within_bound(const SampleReport& report);

}  // namespace pinj
