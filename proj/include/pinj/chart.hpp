#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pinj/element.hpp"

namespace pinj {

// Cycles and chains of the action graph, in canonical order: every cycle is
// rotated to start at its minimum point and cycles are sorted by that
// minimum; every chain is written source first and chains are sorted by
// their minimum point. Cycles precede chains in the printed form. A chain of
// length 1 is a point outside dom(a) and im(a).
struct ChartDecomposition {
  int n = 0;
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> chains;

  bool operator==(const ChartDecomposition&) const = default;
};

// (c_1..c_n, d_1..d_n): counts of cycles and chains of each length.
// Sum of i*c_i + i*d_i is n; sum of d_i is the defect.
struct ChainType {
  std::vector<int> cycle_counts;  // index k-1 holds the count for length k
  std::vector<int> chain_counts;

  bool operator==(const ChainType&) const = default;
};

struct ElementProfile {
  int rank = 0;
  int defect = 0;
  int stable_rank = 0;       // total length of cycles
  bool nilpotent = false;    // no cycles
  int nilpotency_index = 0;  // smallest k > 0 with a^k = 0; 0 if not nilpotent
  int fixed_point_count = 0;
  ChainType chain_type;
};

// The forward iterates {x, a(x), a^2(x), ...}; empty when x is undefined.
struct OrbitTrace {
  int start = 0;
  std::vector<int> points;
  bool returns_to_start = false;  // true iff the orbit closes into a cycle

  int length() const { return static_cast<int>(points.size()); }

  bool operator==(const OrbitTrace&) const = default;
};

ChartDecomposition chart_decomposition(const PartialInjection& a);

// Rebuilds the element; the decomposition must partition {1..n}.
PartialInjection from_chart(const ChartDecomposition& chart);

ChainType chain_type(const PartialInjection& a);
ElementProfile profile(const PartialInjection& a);
OrbitTrace orbit(const PartialInjection& a, int x);

// Chart notation: element ::= term* ; term ::= '(' intlist ')' | '[' intlist ']'
// intlist ::= int (',' int)* — whitespace between terms ignored.
// Every point of {1..n} must appear exactly once.
PartialInjection parse_chart(std::string_view text, int n);
std::string render_chart(const PartialInjection& a);
std::string render_chart(const ChartDecomposition& chart);

}  // namespace pinj
