#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pinj/chart.hpp"
#include "pinj/counting.hpp"
#include "pinj/element.hpp"

namespace pinj {

// Marks refer to the canonical chart, so a chain or cycle id survives
// serialization: id i is the i-th entry (0-based) of the canonical list.
struct PointMark {
  int x = 0;
  bool operator==(const PointMark&) const = default;
};
struct PointPairMark {
  int y = 0;  // a fixed point of the element
  int z = 0;
  bool operator==(const PointPairMark&) const = default;
};
struct ChainMark {
  int chain = 0;
  bool operator==(const ChainMark&) const = default;
};
struct CyclePointMark {
  int cycle = 0;
  int base = 0;  // a point on that cycle
  bool operator==(const CyclePointMark&) const = default;
};

using Mark = std::variant<PointMark, PointPairMark, ChainMark, CyclePointMark>;

struct MarkedElement {
  PartialInjection element;
  Mark mark;

  bool operator==(const MarkedElement&) const = default;
};

// Marking a point of a nilpotent of defect k <-> marking a chain of an
// arbitrary element of defect k. Establishes n L'(n,k) = k D_{n,k}.
MarkedElement lah_defect_forward(const MarkedElement& in);   // Point -> Chain
MarkedElement lah_defect_backward(const MarkedElement& in);  // Chain -> Point

// Marking a based cycle <-> marking a chain: the based cycle (x,a,...,b)
// becomes the chain [x,a,...,b]. Sums stable ranks to the chain total.
MarkedElement cycle_chain_forward(const MarkedElement& in);   // CyclePoint -> Chain
MarkedElement cycle_chain_backward(const MarkedElement& in);  // Chain -> CyclePoint

// Marking any point: a point on a cycle goes to a marked chain as above; a
// point on a chain goes to (element with a new fixed point, marked pair).
// Together these prove P_n + L_n/n = |IS_n|.
MarkedElement fixed_point_forward(const MarkedElement& in);   // Point -> Chain|PointPair
MarkedElement fixed_point_backward(const MarkedElement& in);  // Chain|PointPair -> Point

// Marking a point of the orbit of 1 <-> marking a chain. Sums the orbit
// lengths of 1 to the chain total.
MarkedElement orbit_chain_forward(const MarkedElement& in);   // Point -> Chain
MarkedElement orbit_chain_backward(const MarkedElement& in);  // Chain -> Point

// An untouched point x plus an arbitrary element on the remaining points
// <-> a marked chain of a nilpotent: the permutational part, written with
// its domain sorted, is flattened into a chain ending at x. Establishes
// (n+1)|IS_n| = total chains over the nilpotents of IS_{n+1}.
MarkedElement permpart_chain_forward(const MarkedElement& in);   // Point -> Chain
MarkedElement permpart_chain_backward(const MarkedElement& in);  // Chain -> Point

// Exhaustive verification of one map pair: forward over the whole domain
// with distinct images and backward(forward(m)) = m, backward over the whole
// codomain with forward(backward(m)) = m, and all counts against the closed
// forms.
struct BijectionSweep {
  std::string name;
  BigInt domain_size;
  BigInt image_size;     // distinct forward images
  BigInt codomain_size;  // independently enumerated codomain
  BigInt expected;       // closed-form cardinality of both sides
  bool round_trip_ok = true;   // backward(forward(.)) over the domain
  bool forward_trip_ok = true;  // forward(backward(.)) over the codomain

  bool pass() const {
    return round_trip_ok && forward_trip_ok && domain_size == expected &&
           image_size == expected && codomain_size == expected;
  }
};

// Sweeps at ground-set size n (the permutational-part map sweeps inside
// IS_{n+1}). `only` filters by map name: lah_defect, cycle_chain,
// fixed_point, orbit_chain, permpart_chain; empty runs all five.
std::vector<BijectionSweep> bijection_sweeps(int n, const std::string& only,
                                             const Budget& budget);

}  // namespace pinj
