#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pinj/element.hpp"
#include "pinj/numbers.hpp"

namespace pinj {

// ---- closed forms ----------------------------------------------------------

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt falling_factorial(int n, int k);  // n(n-1)...(n-k+1)

BigInt rank_class_size(int n, int k);    // elements of rank k: C(n,k)^2 k!
BigInt defect_class_size(int n, int k);  // elements of defect k
BigInt signless_lah(int n, int k);       // nilpotents of defect k: (n!/k!) C(n-1,k-1)
BigInt semigroup_size(int n);            // |IS_n|
BigInt nilpotent_count(int n);           // |T_n|; the empty map makes this 1 at n = 0

// Partial injections from an i-set to a j-set; symmetric in i and j.
BigInt partial_injection_count(int i, int j);

// Shared closed-form sequences for sweeps over many ground-set sizes.
// All accessors are exact and pure.
class CountContext {
 public:
  explicit CountContext(int n_max);

  int n_max() const { return n_max_; }

  const BigInt& factorial(int m) const { return fact_[m]; }
  const BigInt& semigroup_size(int m) const { return is_[m]; }
  const BigInt& nilpotent_count(int m) const { return nil_[m]; }
  // total number of chains over all elements / over the nilpotent ones
  const BigInt& chain_total(int m) const { return chains_[m]; }
  const BigInt& nilpotent_chain_total(int m) const { return nil_chains_[m]; }

  BigInt binomial(int n, int k) const;
  BigInt falling(int n, int k) const;
  BigInt rank_class_size(int n, int k) const;
  BigInt signless_lah(int n, int k) const;
  BigInt injection_count(int i, int j) const;

 private:
  int n_max_;
  std::vector<BigInt> fact_, is_, nil_, chains_, nil_chains_;
};

// ---- the count table -------------------------------------------------------

// Every closed-form count for one ground-set size, exact. Sequences indexed
// by the natural parameter: index k of r/d/st/orbit counts is a rank, defect
// or orbit length in 0..n; lah, chains_by_length and cycles_by_length have a
// zero placeholder at index 0 and run over lengths/defects 1..n.
struct CountTable {
  int n = 0;
  BigInt card_is;                         // |IS_n|
  BigInt card_t;                          // number of nilpotents
  std::vector<BigInt> r;                  // by rank, 0..n
  std::vector<BigInt> d;                  // by defect, 0..n
  std::vector<BigInt> lah;                // nilpotents by defect, [0]=0, 1..n
  std::vector<BigInt> st;                 // by stable rank, 0..n
  BigInt chains_total;                    // chains over all elements
  BigInt chains_total_nilpotent;          // chains over nilpotent elements
  std::vector<BigInt> chains_by_length;   // [0]=0, lengths 1..n
  std::vector<BigInt> cycles_by_length;   // [0]=0, lengths 1..n
  BigInt fixed_points_total;
  std::vector<BigInt> orbit_counts;       // orbits of 1 by length, 0..n
  std::vector<BigInt> orbit_counts_nilpotent;
  BigInt idempotents;                     // 2^n
  Rational b;                             // |IS_n| / n!
  Rational c_avg;                         // average component count
};

CountTable count_table(int n);
CountTable count_table(const CountContext& ctx, int n);

// ---- enumeration -----------------------------------------------------------

struct Budget {
  std::uint64_t max_elements = 100'000'000;  // elements visited / tuples composed
};

struct EnumFilter {
  enum class Kind { all, rank, nilpotent, nilpotent_defect, custom };
  Kind kind = Kind::all;
  int k = 0;
  std::function<bool(const PartialInjection&)> predicate;

  static EnumFilter all() { return {}; }
  static EnumFilter rank(int k) { return {Kind::rank, k, nullptr}; }
  static EnumFilter nilpotent() { return {Kind::nilpotent, 0, nullptr}; }
  static EnumFilter nilpotent_defect(int k) {
    return {Kind::nilpotent_defect, k, nullptr};
  }
  static EnumFilter custom(std::function<bool(const PartialInjection&)> pred) {
    return {Kind::custom, 0, std::move(pred)};
  }
};

// Number of elements a stream with this filter has to visit.
BigInt enumeration_size(int n, const EnumFilter& filter);

// Yields each matching element exactly once, rank-major and lexicographic on
// the map table (undefined entries first). Throws BudgetExceeded before
// visiting anything when the enumeration is too large.
void for_each_element(int n, const EnumFilter& filter, const Budget& budget,
                      const std::function<void(const PartialInjection&)>& fn);

std::vector<PartialInjection> all_elements(int n, const EnumFilter& filter,
                                           const Budget& budget = {});

// Position of an element in the enumeration order of IS_n, and its inverse.
// Unranking is what makes uniform sampling reproducible.
class ElementOrder {
 public:
  explicit ElementOrder(int n);
  int n() const { return n_; }
  const BigInt& size() const { return total_; }
  BigInt index_of(const PartialInjection& a) const;
  PartialInjection at(BigInt index) const;

 private:
  // a table with r open positions, d of them defined and v values still
  // unused can be finished in C(r, d) * [v]_d ways
  int n_;
  BigInt total_;
  std::vector<BigInt> rank_sizes_, cum_;
  std::vector<BigInt> choose_, fall_;  // (r,d) and (v,d) tables
};

BigInt element_index(const PartialInjection& a);
PartialInjection element_at(int n, const BigInt& index);

// ---- one-pass tallies over IS_n --------------------------------------------

struct EnumStats {
  int n = 0;
  BigInt total;
  std::vector<BigInt> by_rank, by_defect;
  BigInt nilpotent_total;
  std::vector<BigInt> nilpotent_by_defect;
  std::vector<BigInt> by_stable_rank;
  BigInt chains_total;
  BigInt nilpotent_chains_total;
  std::vector<BigInt> chains_by_length, cycles_by_length;  // [0] = 0
  BigInt cycle_point_total;  // sum of stable ranks
  BigInt fixed_point_total;
  std::vector<BigInt> orbit1_by_length, orbit1_nilpotent_by_length;
  BigInt orbit1_length_total;
  BigInt nilpotent_with_singleton_1;  // nilpotents whose chart contains [1]
  BigInt idempotent_total;
  BigInt with_1_in_domain, with_1_and_2_in_domain;
  BigInt rank_total;
  BigInt component_total;  // cycles + chains
};

EnumStats tally_elements(int n, const Budget& budget = {});

// ---- identity verification -------------------------------------------------

struct IdentityCheck {
  std::string name;
  std::string closed;    // closed-form value(s)
  std::string observed;  // enumerated value(s), or an independent closed route
  bool enumerated = false;
  bool pass = false;
};

struct IdentityReport {
  int n = 0;
  bool used_enumeration = false;
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
};

// Checks every counting identity at size n, exactly. When |IS_n| fits the
// budget the enumerated sides come from a full pass over the semigroup;
// otherwise only the closed-route identities are evaluated.
IdentityReport verify_identities(int n, const Budget& budget = {});
IdentityReport verify_identities(const CountContext& ctx, int n,
                                 const Budget& budget);

}  // namespace pinj
