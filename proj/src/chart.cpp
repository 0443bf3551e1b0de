#include "pinj/chart.hpp"

#include <algorithm>
#include <cctype>

#include "pinj/errors.hpp"

namespace pinj {

ChartDecomposition chart_decomposition(const PartialInjection& a) {
  const int n = a.n();
  ChartDecomposition chart;
  chart.n = n;
  std::vector<char> in_image(static_cast<std::size_t>(n) + 1, 0);
  for (int v : a.table())
    if (v != 0) in_image[v] = 1;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);

  // chains start at the points with no incoming arrow
  for (int s = 1; s <= n; ++s) {
    if (in_image[s]) continue;
    std::vector<int> chain{s};
    seen[s] = 1;
    for (int x = a.table()[s - 1]; x != 0; x = a.table()[x - 1]) {
      chain.push_back(x);
      seen[x] = 1;
    }
    chart.chains.push_back(std::move(chain));
  }
  // everything unseen lies on a cycle
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle{s};
    seen[s] = 1;
    for (int x = a.table()[s - 1]; x != s; x = a.table()[x - 1]) {
      cycle.push_back(x);
      seen[x] = 1;
    }
    chart.cycles.push_back(std::move(cycle));
  }

  for (auto& cycle : chart.cycles) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
  }
  std::sort(chart.cycles.begin(), chart.cycles.end(),
            [](const auto& lhs, const auto& rhs) { return lhs[0] < rhs[0]; });
  std::sort(chart.chains.begin(), chart.chains.end(),
            [](const auto& lhs, const auto& rhs) {
              return *std::min_element(lhs.begin(), lhs.end()) <
                     *std::min_element(rhs.begin(), rhs.end());
            });
  return chart;
}

PartialInjection from_chart(const ChartDecomposition& chart) {
  const int n = chart.n;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  auto visit = [&](int x) {
    if (x < 1 || x > n)
      throw PointOutOfRange("point " + std::to_string(x) + " outside {1.." +
                            std::to_string(n) + "}");
    if (seen[x])
      throw RepeatedPoint("point " + std::to_string(x) + " appears twice");
    seen[x] = 1;
  };
  std::vector<int> table(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : chart.cycles) {
    if (cycle.empty()) throw SyntaxError("empty cycle");
    for (int x : cycle) visit(x);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      table[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  }
  for (const auto& chain : chart.chains) {
    if (chain.empty()) throw SyntaxError("empty chain");
    for (int x : chain) visit(x);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      table[chain[i] - 1] = chain[i + 1];
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x])
      throw MissingPoint("point " + std::to_string(x) + " missing");
  return PartialInjection::from_table(std::move(table));
}

ChainType chain_type(const PartialInjection& a) {
  const auto chart = chart_decomposition(a);
  ChainType type;
  type.cycle_counts.assign(static_cast<std::size_t>(a.n()), 0);
  type.chain_counts.assign(static_cast<std::size_t>(a.n()), 0);
  for (const auto& c : chart.cycles) ++type.cycle_counts[c.size() - 1];
  for (const auto& c : chart.chains) ++type.chain_counts[c.size() - 1];
  return type;
}

ElementProfile profile(const PartialInjection& a) {
  const auto chart = chart_decomposition(a);
  ElementProfile p;
  p.rank = a.rank();
  p.defect = a.defect();
  p.chain_type.cycle_counts.assign(static_cast<std::size_t>(a.n()), 0);
  p.chain_type.chain_counts.assign(static_cast<std::size_t>(a.n()), 0);
  int longest_chain = 0;
  for (const auto& c : chart.cycles) {
    ++p.chain_type.cycle_counts[c.size() - 1];
    p.stable_rank += static_cast<int>(c.size());
    if (c.size() == 1) ++p.fixed_point_count;
  }
  for (const auto& c : chart.chains) {
    ++p.chain_type.chain_counts[c.size() - 1];
    longest_chain = std::max(longest_chain, static_cast<int>(c.size()));
  }
  p.nilpotent = chart.cycles.empty();
  // 0^1 = 0, so the zero element (and the empty map) has index 1
  p.nilpotency_index = p.nilpotent ? std::max(longest_chain, 1) : 0;
  return p;
}

OrbitTrace orbit(const PartialInjection& a, int x) {
  OrbitTrace trace;
  trace.start = x;
  if (!a.defined(x)) return trace;  // length 0, by convention
  trace.points.push_back(x);
  for (int y = a.image_of(x); y != x; y = a.table()[y - 1]) {
    trace.points.push_back(y);
    if (a.table()[y - 1] == 0) return trace;  // leaves the domain
  }
  trace.returns_to_start = true;  // closed back into the cycle through x
  return trace;
}

namespace {

struct ChartParser {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos == text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }

  int parse_int() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError("expected a point at offset " + std::to_string(pos));
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) throw SyntaxError("point literal too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  std::vector<int> parse_intlist(char close) {
    std::vector<int> points{parse_int()};
    while (!done() && peek() == ',') {
      ++pos;
      points.push_back(parse_int());
    }
    if (done() || peek() != close)
      throw SyntaxError(std::string("expected '") + close + "' at offset " +
                        std::to_string(pos));
    ++pos;
    return points;
  }
};

}  // namespace

PartialInjection parse_chart(std::string_view text, int n) {
  ChartDecomposition chart;
  chart.n = n;
  ChartParser parser{text};
  parser.skip_ws();
  while (!parser.done()) {
    const char open = parser.peek();
    if (open == '(') {
      ++parser.pos;
      chart.cycles.push_back(parser.parse_intlist(')'));
    } else if (open == '[') {
      ++parser.pos;
      chart.chains.push_back(parser.parse_intlist(']'));
    } else {
      throw SyntaxError(std::string("unexpected character '") + open +
                        "' at offset " + std::to_string(parser.pos));
    }
    parser.skip_ws();
  }
  return from_chart(chart);
}

std::string render_chart(const ChartDecomposition& chart) {
  std::string out;
  auto emit = [&out](const std::vector<int>& seq, char open, char close) {
    out += open;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(seq[i]);
    }
    out += close;
  };
  for (const auto& cycle : chart.cycles) emit(cycle, '(', ')');
  for (const auto& chain : chart.chains) emit(chain, '[', ']');
  return out;
}

std::string render_chart(const PartialInjection& a) {
  return render_chart(chart_decomposition(a));
}

}  // namespace pinj
