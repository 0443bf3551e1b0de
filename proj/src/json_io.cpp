#include "pinj/json_io.hpp"

#include "pinj/errors.hpp"

namespace pinj {

using nlohmann::json;

json to_json(const BigInt& v) { return v.str(); }

json to_json(const Rational& v) {
  return json{{"num", numerator(v).str()}, {"den", denominator(v).str()}};
}

json to_json(const std::vector<BigInt>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

json to_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

json to_json(const PartialInjection& a) {
  json map = json::array();
  for (int v : a.table()) {
    if (v == 0)
      map.push_back(nullptr);
    else
      map.push_back(v);
  }
  return json{{"n", a.n()}, {"map", std::move(map)}};
}

PartialInjection element_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const auto& map = j.at("map");
  if (!map.is_array() || static_cast<int>(map.size()) != n)
    throw SyntaxError("element map must be an array of length n");
  std::vector<int> table(n, 0);
  for (int i = 0; i < n; ++i)
    if (!map[i].is_null()) table[i] = map[i].get<int>();
  return PartialInjection::from_table(std::move(table));
}

json to_json(const Mark& mark) {
  if (const auto* p = std::get_if<PointMark>(&mark))
    return json{{"kind", "point"}, {"x", p->x}};
  if (const auto* p = std::get_if<PointPairMark>(&mark))
    return json{{"kind", "point_pair"}, {"y", p->y}, {"z", p->z}};
  if (const auto* p = std::get_if<ChainMark>(&mark))
    return json{{"kind", "chain"}, {"chain", p->chain}};
  const auto& p = std::get<CyclePointMark>(mark);
  return json{{"kind", "cycle_point"}, {"cycle", p.cycle}, {"base", p.base}};
}

Mark mark_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "point") return PointMark{j.at("x").get<int>()};
  if (kind == "point_pair")
    return PointPairMark{j.at("y").get<int>(), j.at("z").get<int>()};
  if (kind == "chain") return ChainMark{j.at("chain").get<int>()};
  if (kind == "cycle_point")
    return CyclePointMark{j.at("cycle").get<int>(), j.at("base").get<int>()};
  throw SyntaxError("unknown mark kind: " + kind);
}

json to_json(const MarkedElement& m) {
  return json{{"element", to_json(m.element)}, {"mark", to_json(m.mark)}};
}

MarkedElement marked_from_json(const json& j) {
  return {element_from_json(j.at("element")), mark_from_json(j.at("mark"))};
}

json to_json(const ChartDecomposition& chart) {
  return json{
      {"n", chart.n}, {"cycles", chart.cycles}, {"chains", chart.chains}};
}

json to_json(const ChainType& type) {
  return json{{"cycle_counts", type.cycle_counts},
              {"chain_counts", type.chain_counts}};
}

json to_json(const OrbitTrace& trace) {
  return json{{"start", trace.start},
              {"points", trace.points},
              {"length", trace.length()},
              {"terminal",
               trace.returns_to_start ? "re-enters cycle at start"
                                      : "leaves domain"}};
}

json describe_element(const PartialInjection& a) {
  const ElementProfile p = profile(a);
  const ChartDecomposition chart = chart_decomposition(a);
  json j = to_json(a);
  j["chart"] = render_chart(chart);
  j["cycles"] = chart.cycles;
  j["chains"] = chart.chains;
  j["rank"] = p.rank;
  j["defect"] = p.defect;
  j["stable_rank"] = p.stable_rank;
  j["is_nilpotent"] = p.nilpotent;
  j["nilpotency_index"] = p.nilpotency_index;
  j["fixed_point_count"] = p.fixed_point_count;
  j["chain_type"] = to_json(p.chain_type);
  return j;
}

namespace {

json slice(const std::vector<BigInt>& v, std::size_t from) {
  json arr = json::array();
  for (std::size_t i = from; i < v.size(); ++i) arr.push_back(v[i].str());
  return arr;
}

}  // namespace

json to_json(const CountTable& t) {
  json j;
  j["n"] = t.n;
  j["card_is"] = to_json(t.card_is);
  j["card_t"] = to_json(t.card_t);
  j["r"] = to_json(t.r);
  j["d"] = to_json(t.d);
  j["lah"] = slice(t.lah, 1);
  j["st"] = to_json(t.st);
  j["chains_total"] = to_json(t.chains_total);
  j["chains_total_nilpotent"] = to_json(t.chains_total_nilpotent);
  j["chains_by_length"] = slice(t.chains_by_length, 1);
  j["cycles_by_length"] = slice(t.cycles_by_length, 1);
  j["fixed_points_total"] = to_json(t.fixed_points_total);
  j["orbit_counts"] = to_json(t.orbit_counts);
  j["orbit_counts_nilpotent"] = to_json(t.orbit_counts_nilpotent);
  j["idempotents"] = to_json(t.idempotents);
  j["b"] = to_json(t.b);
  j["c_avg"] = to_json(t.c_avg);
  return j;
}

json to_json(const IdentityReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"name", c.name},
                          {"closed", c.closed},
                          {"observed", c.observed},
                          {"enumerated", c.enumerated},
                          {"pass", c.pass}});
  }
  return json{{"n", report.n},
              {"used_enumeration", report.used_enumeration},
              {"checks", std::move(checks)},
              {"all_pass", report.all_pass()}};
}

json to_json(const RankDistribution& dist) {
  return json{{"n", dist.n}, {"k", dist.k}, {"p", to_json(dist.p)}};
}

json to_json(const SampleReport& report) {
  return json{{"n", report.n},
              {"k", report.k},
              {"trials", report.trials},
              {"seed", report.seed},
              {"rank_histogram", report.rank_histogram},
              {"empirical", to_json(report.empirical)},
              {"reference", to_json(report.reference)},
              {"max_abs_deviation", to_json(report.max_abs_deviation)}};
}

namespace {

json checks_to_json(const std::vector<IdentityCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back(json{{"name", c.name},
                       {"closed", c.closed},
                       {"observed", c.observed},
                       {"pass", c.pass}});
  return arr;
}

}  // namespace

json to_json(const SpectralReport& report) {
  return json{{"n", report.n},
              {"checks", checks_to_json(report.checks)},
              {"all_pass", report.all_pass()}};
}

json to_json(const CrossCheckReport& report) {
  json trends = json::array();
  for (const auto& t : report.positive_rank_trends)
    trends.push_back(json{{"rank", t.rank},
                          {"burn_in", t.burn_in},
                          {"values", to_json(t.values)}});
  return json{{"n", report.n},
              {"k", report.k},
              {"checks", checks_to_json(report.checks)},
              {"zero_rank_trend", to_json(report.zero_rank_trend.values)},
              {"positive_rank_trends", std::move(trends)},
              {"all_pass", report.all_pass()}};
}

json to_json(const GrowthReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back(json{{"n", r.n},
                        {"t_ratio", to_json(r.t_ratio)},
                        {"is_ratio", to_json(r.is_ratio)},
                        {"t_growth_normalized", to_json(r.t_growth_normalized)},
                        {"is_growth_normalized", to_json(r.is_growth_normalized)},
                        {"nilpotent_fraction", to_json(r.nilpotent_fraction)},
                        {"ratio_bounds_t_ok", r.ratio_bounds_t_ok},
                        {"ratio_bounds_is_ok", r.ratio_bounds_is_ok},
                        {"insertion_recount_t_ok", r.insertion_recount_t_ok},
                        {"insertion_recount_is_ok", r.insertion_recount_is_ok},
                        {"normalized_growth_ok", r.normalized_growth_ok},
                        {"fraction_below_one_ok", r.fraction_below_one_ok}});
  }
  return json{{"n_max", report.n_max},
              {"rows", std::move(rows)},
              {"t_growth_burn_in", report.t_growth_burn_in},
              {"is_growth_burn_in", report.is_growth_burn_in},
              {"fraction_decreasing_from", report.fraction_decreasing_from},
              {"all_ok", report.all_ok}};
}

json to_json(const UnimodalityReport& report) {
  return json{{"n", report.n},
              {"lah_peak", report.lah_peak},
              {"rank_peak", report.rank_peak},
              {"lah_ranges_ok", report.lah_ranges_ok},
              {"rank_ranges_ok", report.rank_ranges_ok},
              {"lah_ties", report.lah_ties},
              {"rank_ties", report.rank_ties},
              {"band_checked", report.band_checked},
              {"ratio_band_ok", report.ratio_band_ok},
              {"peak_ratio_ok", report.peak_ratio_ok},
              {"band_lo", report.band_lo},
              {"band_hi", report.band_hi}};
}

json to_json(const ModReport& report) {
  return json{{"n", report.n},
              {"m", report.m},
              {"f", to_json(report.f)},
              {"proportions", to_json(report.proportions)},
              {"max_abs_deviation", to_json(report.max_abs_deviation)}};
}

std::string to_csv(const RankDistribution& dist) {
  std::string out = "rank,num,den\n";
  for (int i = 0; i <= dist.n; ++i) {
    out += std::to_string(i) + "," + numerator(dist.p[i]).str() + "," +
           denominator(dist.p[i]).str() + "\n";
  }
  return out;
}

std::string to_csv(const GrowthReport& report) {
  std::string out =
      "n,t_ratio,is_ratio,t_growth_normalized,is_growth_normalized,"
      "nilpotent_fraction,ratio_bounds_t_ok,ratio_bounds_is_ok,"
      "insertion_recount_t_ok,insertion_recount_is_ok,normalized_growth_ok,"
      "fraction_below_one_ok\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.n) + "," + to_string(r.t_ratio) + "," +
           to_string(r.is_ratio) + "," + to_string(r.t_growth_normalized) +
           "," + to_string(r.is_growth_normalized) + "," +
           to_string(r.nilpotent_fraction) + "," +
           (r.ratio_bounds_t_ok ? "1" : "0") + "," +
           (r.ratio_bounds_is_ok ? "1" : "0") + "," +
           (r.insertion_recount_t_ok ? "1" : "0") + "," +
           (r.insertion_recount_is_ok ? "1" : "0") + "," +
           (r.normalized_growth_ok ? "1" : "0") + "," +
           (r.fraction_below_one_ok ? "1" : "0") + "\n";
  }
  return out;
}

std::string to_csv(const ModReport& report) {
  std::string out = "p,count,proportion\n";
  for (int p = 0; p < report.m; ++p) {
    out += std::to_string(p) + "," + report.f[p].str() + "," +
           to_string(report.proportions[p]) + "\n";
  }
  return out;
}

std::string to_csv(const UnimodalityReport& r) {
  std::string out =
      "n,lah_peak,rank_peak,lah_ranges_ok,rank_ranges_ok,lah_ties,rank_ties,"
      "band_checked,ratio_band_ok,peak_ratio_ok\n";
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
  };
  out += std::to_string(r.n) + "," + std::to_string(r.lah_peak) + "," +
         std::to_string(r.rank_peak) + "," + (r.lah_ranges_ok ? "1" : "0") +
         "," + (r.rank_ranges_ok ? "1" : "0") + "," + join(r.lah_ties) + "," +
         join(r.rank_ties) + "," + (r.band_checked ? "1" : "0") + "," +
         (r.ratio_band_ok ? "1" : "0") + "," + (r.peak_ratio_ok ? "1" : "0") +
         "\n";
  return out;
}

std::string to_csv(const IdentityReport& report) {
  std::string out = "name,enumerated,closed,observed,pass\n";
  for (const auto& c : report.checks) {
    out += c.name + "," + (c.enumerated ? "1" : "0") + ",\"" + c.closed +
           "\",\"" + c.observed + "\"," + (c.pass ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace pinj
