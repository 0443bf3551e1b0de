#include "pinj/bijections.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "pinj/errors.hpp"

namespace pinj {

namespace {

// Where each point sits in the canonical chart.
struct ChartIndex {
  ChartDecomposition chart;
  std::vector<int> component;  // per point: index into cycles (>=0) or chains (<0: -1-i)
  std::vector<int> position;   // offset of the point inside its component

  explicit ChartIndex(const PartialInjection& a)
      : chart(chart_decomposition(a)),
        component(a.n() + 1, 0),
        position(a.n() + 1, 0) {
    for (std::size_t i = 0; i < chart.cycles.size(); ++i)
      for (std::size_t j = 0; j < chart.cycles[i].size(); ++j) {
        component[chart.cycles[i][j]] = static_cast<int>(i);
        position[chart.cycles[i][j]] = static_cast<int>(j);
      }
    for (std::size_t i = 0; i < chart.chains.size(); ++i)
      for (std::size_t j = 0; j < chart.chains[i].size(); ++j) {
        component[chart.chains[i][j]] = -1 - static_cast<int>(i);
        position[chart.chains[i][j]] = static_cast<int>(j);
      }
  }

  bool on_cycle(int x) const { return component[x] >= 0; }
  const std::vector<int>& cycle_of(int x) const {
    return chart.cycles[component[x]];
  }
  const std::vector<int>& chain_of(int x) const {
    return chart.chains[-1 - component[x]];
  }
  int chain_id(int x) const { return -1 - component[x]; }
  int cycle_id(int x) const { return component[x]; }
};

int point_mark(const MarkedElement& in, const char* who) {
  const auto* mark = std::get_if<PointMark>(&in.mark);
  if (!mark) throw InvalidMark(std::string(who) + ": expected a point mark");
  const int x = mark->x;
  if (x < 1 || x > in.element.n())
    throw InvalidMark(std::string(who) + ": point " + std::to_string(x) +
                      " out of range");
  return x;
}

const std::vector<int>& chain_mark(const MarkedElement& in,
                                   const ChartIndex& idx, const char* who) {
  const auto* mark = std::get_if<ChainMark>(&in.mark);
  if (!mark) throw InvalidMark(std::string(who) + ": expected a chain mark");
  if (mark->chain < 0 ||
      mark->chain >= static_cast<int>(idx.chart.chains.size()))
    throw InvalidMark(std::string(who) + ": chain id " +
                      std::to_string(mark->chain) + " out of range");
  return idx.chart.chains[mark->chain];
}

MarkedElement with_chain_through(PartialInjection element, int x) {
  const ChartIndex idx(element);
  Mark mark = ChainMark{idx.chain_id(x)};
  return {std::move(element), mark};
}

// the table with the component arrows of `seq` (a chain) installed
void link_chain(std::vector<int>& table, const std::vector<int>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    table[seq[i] - 1] = seq[i + 1];
  table[seq.back() - 1] = 0;
}

}  // namespace

// ---- nilpotent-with-point <-> element-with-chain ---------------------------

MarkedElement lah_defect_forward(const MarkedElement& in) {
  const PartialInjection& a = in.element;
  const int x = point_mark(in, "lah_defect_forward");
  const ChartIndex idx(a);
  if (!idx.chart.cycles.empty())
    throw NotNilpotent("lah_defect_forward needs a nilpotent element");

  // forward iterates of x, then their sorted copy
  std::vector<int> path;
  for (int y = a.table()[x - 1]; y != 0; y = a.table()[y - 1]) path.push_back(y);
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());

  std::vector<int> table = a.table();
  table[x - 1] = 0;
  for (std::size_t i = 0; i < path.size(); ++i) table[path[i] - 1] = sorted[i];
  return with_chain_through(PartialInjection::from_table(std::move(table)), x);
}

MarkedElement lah_defect_backward(const MarkedElement& in) {
  const PartialInjection& b = in.element;
  const ChartIndex idx(b);
  const std::vector<int>& marked = chain_mark(in, idx, "lah_defect_backward");
  const int x = marked.back();

  // the cycles of b are exactly the sorted images of the lost path
  std::vector<int> support;
  for (const auto& cycle : idx.chart.cycles)
    support.insert(support.end(), cycle.begin(), cycle.end());
  std::sort(support.begin(), support.end());

  const PartialInjection b_inv = b.inverse();
  std::vector<int> table = b.table();
  int prev = x;
  for (int t : support) {
    // the path point mapped to t by b
    const int p = b_inv.image_of(t);
    table[prev - 1] = p;
    prev = p;
  }
  table[prev - 1] = 0;
  return {PartialInjection::from_table(std::move(table)), PointMark{x}};
}

// ---- based cycle <-> chain --------------------------------------------------

MarkedElement cycle_chain_forward(const MarkedElement& in) {
  const PartialInjection& a = in.element;
  const auto* mark = std::get_if<CyclePointMark>(&in.mark);
  if (!mark) throw InvalidMark("cycle_chain_forward: expected a cycle mark");
  const ChartIndex idx(a);
  if (mark->cycle < 0 ||
      mark->cycle >= static_cast<int>(idx.chart.cycles.size()))
    throw InvalidMark("cycle_chain_forward: cycle id out of range");
  const int x = mark->base;
  if (x < 1 || x > a.n() || !idx.on_cycle(x) || idx.cycle_id(x) != mark->cycle)
    throw InvalidMark("cycle_chain_forward: base point not on the cycle");

  // cut the arrow into the base point
  std::vector<int> table = a.table();
  table[a.inverse().image_of(x) - 1] = 0;
  return with_chain_through(PartialInjection::from_table(std::move(table)), x);
}

MarkedElement cycle_chain_backward(const MarkedElement& in) {
  const PartialInjection& b = in.element;
  const ChartIndex idx(b);
  const std::vector<int>& chain = chain_mark(in, idx, "cycle_chain_backward");
  const int x = chain.front();

  std::vector<int> table = b.table();
  table[chain.back() - 1] = x;  // close the chain into a cycle
  PartialInjection a = PartialInjection::from_table(std::move(table));
  const ChartIndex idx_a(a);
  Mark mark = CyclePointMark{idx_a.cycle_id(x), x};
  return {std::move(a), mark};
}

// ---- any marked point <-> chain or (fixed point, point) --------------------

MarkedElement fixed_point_forward(const MarkedElement& in) {
  const PartialInjection& a = in.element;
  const int x = point_mark(in, "fixed_point_forward");
  const ChartIndex idx(a);

  if (idx.on_cycle(x)) {
    Mark mark = CyclePointMark{idx.cycle_id(x), x};
    return cycle_chain_forward({a, mark});
  }

  const std::vector<int>& chain = idx.chain_of(x);
  std::vector<int> table = a.table();
  if (chain.size() == 1) {
    table[x - 1] = x;
    return {PartialInjection::from_table(std::move(table)),
            PointPairMark{x, x}};
  }
  if (chain.front() == x) {
    // source of [x,a,...,b]: the tail closes into its own cycle
    const int after = chain[1];
    table[chain.back() - 1] = after;
    table[x - 1] = x;
    return {PartialInjection::from_table(std::move(table)),
            PointPairMark{x, after}};
  }
  // interior or last point: bypass x and note its predecessor
  const int before = chain[idx.position[x] - 1];
  table[before - 1] = table[x - 1];  // 0 when x closed the chain
  table[x - 1] = x;
  return {PartialInjection::from_table(std::move(table)),
          PointPairMark{x, before}};
}

MarkedElement fixed_point_backward(const MarkedElement& in) {
  if (std::holds_alternative<ChainMark>(in.mark)) {
    MarkedElement out = cycle_chain_backward(in);
    const int base = std::get<CyclePointMark>(out.mark).base;
    return {std::move(out.element), PointMark{base}};
  }
  const auto* mark = std::get_if<PointPairMark>(&in.mark);
  if (!mark)
    throw InvalidMark("fixed_point_backward: expected a chain or pair mark");
  const PartialInjection& c = in.element;
  const int y = mark->y, z = mark->z;
  if (y < 1 || y > c.n() || z < 1 || z > c.n() || c.image_of(y) != y)
    throw InvalidMark("fixed_point_backward: marked point is not fixed");

  std::vector<int> table = c.table();
  const ChartIndex idx(c);
  if (y == z) {
    table[y - 1] = 0;  // the fixed point becomes the singleton chain [y]
  } else if (idx.on_cycle(z)) {
    // chains [y, z, ...cycle...]: enter the cycle at z, cut before z
    const int before = c.inverse().image_of(z);
    table[y - 1] = z;
    table[before - 1] = 0;
  } else {
    // reinsert y right after z on its chain
    table[y - 1] = table[z - 1];
    table[z - 1] = y;
  }
  return {PartialInjection::from_table(std::move(table)), PointMark{y}};
}

// ---- point of the orbit of 1 <-> chain --------------------------------------

MarkedElement orbit_chain_forward(const MarkedElement& in) {
  const PartialInjection& a = in.element;
  const int x = point_mark(in, "orbit_chain_forward");
  if (a.n() < 1) throw InvalidMark("orbit_chain_forward: empty ground set");
  const OrbitTrace trace = orbit(a, 1);
  if (std::find(trace.points.begin(), trace.points.end(), x) ==
      trace.points.end())
    throw InvalidMark("orbit_chain_forward: point " + std::to_string(x) +
                      " is not in the orbit of 1");
  const ChartIndex idx(a);
  std::vector<int> table = a.table();

  if (idx.on_cycle(x)) {
    // the whole cycle through 1, cut before x
    table[a.inverse().image_of(x) - 1] = 0;
    return with_chain_through(PartialInjection::from_table(std::move(table)),
                              x);
  }
  if (x != 1) {
    // split the chain just before x; 1 stays in the front part
    const std::vector<int>& chain = idx.chain_of(x);
    table[chain[idx.position[x] - 1] - 1] = 0;
    return with_chain_through(PartialInjection::from_table(std::move(table)),
                              x);
  }
  // x = 1 inside a chain: the part up to 1 closes into a cycle, the rest is
  // the marked chain
  const std::vector<int>& chain = idx.chain_of(1);
  const int next = a.image_of(1);  // nonempty: 1 is in its own orbit
  table[0] = chain.front();
  return with_chain_through(PartialInjection::from_table(std::move(table)),
                            next);
}

MarkedElement orbit_chain_backward(const MarkedElement& in) {
  const PartialInjection& b = in.element;
  if (b.n() < 1) throw InvalidMark("orbit_chain_backward: empty ground set");
  const ChartIndex idx(b);
  const std::vector<int>& chain = chain_mark(in, idx, "orbit_chain_backward");
  std::vector<int> table = b.table();

  if (std::find(chain.begin(), chain.end(), 1) != chain.end()) {
    // close the marked chain into a cycle
    table[chain.back() - 1] = chain.front();
    return {PartialInjection::from_table(std::move(table)),
            PointMark{chain.front()}};
  }
  if (!idx.on_cycle(1)) {
    // append the marked chain to the chain holding 1
    table[idx.chain_of(1).back() - 1] = chain.front();
    return {PartialInjection::from_table(std::move(table)),
            PointMark{chain.front()}};
  }
  // open the cycle holding 1 after 1 and continue with the marked chain
  table[0] = chain.front();
  return {PartialInjection::from_table(std::move(table)), PointMark{1}};
}

// ---- untouched point + element <-> marked chain of a nilpotent --------------

MarkedElement permpart_chain_forward(const MarkedElement& in) {
  const PartialInjection& a = in.element;
  const int x = point_mark(in, "permpart_chain_forward");
  if (a.defined(x) || a.inverse().defined(x))
    throw InvalidMark("permpart_chain_forward: point " + std::to_string(x) +
                      " must be untouched");

  const ChartIndex idx(a);
  std::vector<int> dom;  // cycle points, ascending
  for (const auto& cycle : idx.chart.cycles)
    dom.insert(dom.end(), cycle.begin(), cycle.end());
  std::sort(dom.begin(), dom.end());

  std::vector<int> seq;  // images in domain order, then x
  seq.reserve(dom.size() + 1);
  for (int p : dom) seq.push_back(a.image_of(p));
  seq.push_back(x);

  std::vector<int> table = a.table();
  for (int p : dom) table[p - 1] = 0;
  link_chain(table, seq);
  PartialInjection b = PartialInjection::from_table(std::move(table));
  const ChartIndex idx_b(b);
  Mark mark = ChainMark{idx_b.chain_id(x)};
  return {std::move(b), mark};
}

MarkedElement permpart_chain_backward(const MarkedElement& in) {
  const PartialInjection& b = in.element;
  const ChartIndex idx(b);
  if (!idx.chart.cycles.empty())
    throw NotNilpotent("permpart_chain_backward needs a nilpotent element");
  const std::vector<int>& chain = chain_mark(in, idx, "permpart_chain_backward");
  const int x = chain.back();

  std::vector<int> dom(chain.begin(), chain.end() - 1);
  std::sort(dom.begin(), dom.end());

  std::vector<int> table = b.table();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) table[chain[i] - 1] = 0;
  for (std::size_t i = 0; i < dom.size(); ++i) table[dom[i] - 1] = chain[i];
  return {PartialInjection::from_table(std::move(table)), PointMark{x}};
}

// ---- exhaustive sweeps -------------------------------------------------------

namespace {

// a hashable/orderable key for one marked element
using MarkKey = std::tuple<std::vector<int>, int, int, int>;

MarkKey key_of(const MarkedElement& m) {
  int kind = static_cast<int>(m.mark.index());
  int a = 0, b = 0;
  if (const auto* p = std::get_if<PointMark>(&m.mark)) {
    a = p->x;
  } else if (const auto* p = std::get_if<PointPairMark>(&m.mark)) {
    a = p->y;
    b = p->z;
  } else if (const auto* p = std::get_if<ChainMark>(&m.mark)) {
    a = p->chain;
  } else {
    const auto& c = std::get<CyclePointMark>(m.mark);
    a = c.cycle;
    b = c.base;
  }
  return {m.element.table(), kind, a, b};
}

template <typename Domain, typename Codomain, typename Forward,
          typename Backward>
BijectionSweep sweep(std::string name, BigInt expected, Domain&& domain,
                     Codomain&& codomain, Forward&& forward,
                     Backward&& backward) {
  BijectionSweep result{std::move(name), 0, 0, 0, std::move(expected)};
  std::set<MarkKey> images;
  domain([&](const MarkedElement& input) {
    ++result.domain_size;
    const MarkedElement out = forward(input);
    images.insert(key_of(out));
    if (backward(out) != input) result.round_trip_ok = false;
  });
  result.image_size = BigInt(images.size());
  codomain([&](const MarkedElement& target) {
    ++result.codomain_size;
    if (forward(backward(target)) != target) result.forward_trip_ok = false;
  });
  return result;
}

// every chain of the element, as a marked element
template <typename Visit>
void each_chain(const PartialInjection& a, Visit&& visit) {
  const auto chart = chart_decomposition(a);
  for (std::size_t c = 0; c < chart.chains.size(); ++c)
    visit(MarkedElement{a, ChainMark{static_cast<int>(c)}});
}

}  // namespace

std::vector<BijectionSweep> bijection_sweeps(int n, const std::string& only,
                                             const Budget& budget) {
  std::vector<BijectionSweep> results;
  CountContext ctx(n + 1);
  const auto elements = all_elements(n, EnumFilter::all(), budget);
  auto want = [&only](const std::string& name) {
    return only.empty() || only == name;
  };

  if (want("lah_defect")) {
    for (int k = 1; k <= n; ++k) {
      results.push_back(sweep(
          "lah_defect[defect=" + std::to_string(k) + "]",
          BigInt(n) * ctx.signless_lah(n, k),
          [&](auto&& visit) {
            for (const auto& a : elements) {
              if (a.defect() != k || !profile(a).nilpotent) continue;
              for (int x = 1; x <= n; ++x)
                visit(MarkedElement{a, PointMark{x}});
            }
          },
          [&](auto&& visit) {
            for (const auto& a : elements)
              if (a.defect() == k) each_chain(a, visit);
          },
          lah_defect_forward, lah_defect_backward));
    }
  }
  if (want("cycle_chain")) {
    results.push_back(sweep(
        "cycle_chain", ctx.chain_total(n),
        [&](auto&& visit) {
          for (const auto& a : elements) {
            const auto chart = chart_decomposition(a);
            for (std::size_t c = 0; c < chart.cycles.size(); ++c)
              for (int x : chart.cycles[c])
                visit(MarkedElement{a, CyclePointMark{static_cast<int>(c), x}});
          }
        },
        [&](auto&& visit) {
          for (const auto& a : elements) each_chain(a, visit);
        },
        cycle_chain_forward, cycle_chain_backward));
  }
  if (want("fixed_point")) {
    const BigInt fixed_pairs =
        n >= 1 ? BigInt(n) * BigInt(n) * ctx.semigroup_size(n - 1) : BigInt(0);
    results.push_back(sweep(
        "fixed_point", ctx.chain_total(n) + fixed_pairs,
        [&](auto&& visit) {
          for (const auto& a : elements)
            for (int x = 1; x <= n; ++x) visit(MarkedElement{a, PointMark{x}});
        },
        [&](auto&& visit) {
          for (const auto& a : elements) {
            each_chain(a, visit);
            for (int y = 1; y <= n; ++y) {
              if (a.image_of(y) != y) continue;
              for (int z = 1; z <= n; ++z)
                visit(MarkedElement{a, PointPairMark{y, z}});
            }
          }
        },
        fixed_point_forward, fixed_point_backward));
  }
  if (want("orbit_chain") && n >= 1) {
    results.push_back(sweep(
        "orbit_chain", ctx.chain_total(n),
        [&](auto&& visit) {
          for (const auto& a : elements)
            for (int x : orbit(a, 1).points)
              visit(MarkedElement{a, PointMark{x}});
        },
        [&](auto&& visit) {
          for (const auto& a : elements) each_chain(a, visit);
        },
        orbit_chain_forward, orbit_chain_backward));
  }
  if (want("permpart_chain")) {
    const auto larger = all_elements(n + 1, EnumFilter::all(), budget);
    results.push_back(sweep(
        "permpart_chain", BigInt(n + 1) * ctx.semigroup_size(n),
        [&](auto&& visit) {
          for (const auto& a : larger)
            for (int x = 1; x <= n + 1; ++x) {
              if (a.defined(x) || a.inverse().defined(x)) continue;
              visit(MarkedElement{a, PointMark{x}});
            }
        },
        [&](auto&& visit) {
          for (const auto& a : larger)
            if (profile(a).nilpotent) each_chain(a, visit);
        },
        permpart_chain_forward, permpart_chain_backward));
  }
  return results;
}

}  // namespace pinj
