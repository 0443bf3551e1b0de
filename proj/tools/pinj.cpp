// Command-line front door: every capability as a reproducible subcommand
// with JSON, CSV or text output. Exit codes: 0 success, 1 failed
// verification, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinj/asymptotics.hpp"
#include "pinj/bijections.hpp"
#include "pinj/chart.hpp"
#include "pinj/counting.hpp"
#include "pinj/element.hpp"
#include "pinj/errors.hpp"
#include "pinj/json_io.hpp"
#include "pinj/products.hpp"

namespace {

using nlohmann::json;
using namespace pinj;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

Budget budget_from(std::optional<std::uint64_t> flag) {
  Budget budget;
  if (const char* env = std::getenv("PINJ_BUDGET")) {
    try {
      budget.max_elements = std::stoull(env);
    } catch (const std::exception&) {
      throw Error("PINJ_BUDGET must be an unsigned integer");
    }
  }
  if (flag) budget.max_elements = *flag;
  return budget;
}

PartialInjection element_from_flags(int n, bool has_chart,
                                    const std::string& chart, bool has_pairs,
                                    const std::string& pairs) {
  if (has_chart && has_pairs)
    throw Error("give either --chart or --pairs, not both");
  if (has_chart) return parse_chart(chart, n);
  if (has_pairs) {
    const json j = json::parse(pairs);
    std::vector<std::pair<int, int>> list;
    for (const auto& entry : j)
      list.emplace_back(entry.at(0).get<int>(), entry.at(1).get<int>());
    return PartialInjection::from_pairs(n, list);
  }
  throw Error("an element is required: pass --chart or --pairs");
}

void print_identity_text(const IdentityReport& report, std::ostream& os) {
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name
       << (c.enumerated ? " (enumerated)" : " (closed)") << ": " << c.closed
       << " vs " << c.observed << "\n";
  }
  os << (report.all_pass() ? "all identities hold" : "some identities FAILED")
     << " at n = " << report.n
     << (report.used_enumeration ? "" : " (closed forms only)") << "\n";
}

void print_checks_text(const std::vector<IdentityCheck>& checks,
                       std::ostream& os) {
  for (const auto& c : checks)
    os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.closed << " vs "
       << c.observed << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact combinatorics of partial injections"};
  app.require_subcommand(1);

  int n = 0, k = 1, m = 1;
  std::string chart, pairs, field, identity, format;
  std::vector<std::string> charts;
  bool all = false;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed_flag, budget_flag;

  std::map<const CLI::App*, std::string> default_format;
  auto add_format = [&](CLI::App* cmd, const std::string& def) {
    default_format[cmd] = def;
    cmd->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* cmd_decompose = app.add_subcommand("decompose", "chart and profile of one element");
  cmd_decompose->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  cmd_decompose->add_option("--chart", chart);
  cmd_decompose->add_option("--pairs", pairs);
  add_format(cmd_decompose, "json");

  auto* cmd_compose = app.add_subcommand("compose", "left-to-right product of elements");
  cmd_compose->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  // raw strings per occurrence; a vector target would split on the brackets
  cmd_compose->add_option("--chart")
      ->each([&charts](const std::string& s) { charts.push_back(s); })
      ->required()
      ->take_all();
  add_format(cmd_compose, "text");

  auto* cmd_count = app.add_subcommand("count", "closed-form count table");
  cmd_count->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  cmd_count->add_option("--field", field);
  add_format(cmd_count, "text");

  auto* cmd_verify = app.add_subcommand("verify", "check identities exactly");
  cmd_verify->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  cmd_verify->add_flag("--all", all);
  cmd_verify->add_option("--identity", identity, "restrict to one named check");
  cmd_verify->add_option("--field", field, "counts (default), spectral or products");
  cmd_verify->add_option("--k", k, "product length for --field products");
  cmd_verify->add_option("--budget", budget_flag);
  add_format(cmd_verify, "text");

  auto* cmd_bijection = app.add_subcommand("bijection", "exhaustive round-trip sweeps");
  cmd_bijection->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  cmd_bijection->add_flag("--all", all);
  cmd_bijection->add_option("--identity", identity, "one of lah_defect, cycle_chain, fixed_point, orbit_chain, permpart_chain");
  cmd_bijection->add_option("--budget", budget_flag);
  add_format(cmd_bijection, "text");

  auto* cmd_distribution = app.add_subcommand("distribution", "exact rank distribution of k-fold products");
  cmd_distribution->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  cmd_distribution->add_option("--k", k)->required();
  cmd_distribution->add_option("--field", field, "exact (default) or brute");
  cmd_distribution->add_option("--budget", budget_flag);
  add_format(cmd_distribution, "json");

  auto* cmd_simulate = app.add_subcommand("simulate", "seeded Monte Carlo sampling of products");
  cmd_simulate->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  cmd_simulate->add_option("--k", k)->required();
  cmd_simulate->add_option("--trials", trials)->required();
  cmd_simulate->add_option("--seed", seed_flag);
  add_format(cmd_simulate, "json");

  auto* cmd_asymptotics = app.add_subcommand("asymptotics", "growth, unimodality and mod-m reports");
  cmd_asymptotics->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  cmd_asymptotics->add_option("--field", field, "growth (default), unimodality or mod");
  cmd_asymptotics->add_option("--m", m, "modulus for --field mod");
  add_format(cmd_asymptotics, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (const auto& [cmd, def] : default_format)
    if (cmd->parsed() && cmd->count("--format") == 0) format = def;

  if (cmd_decompose->parsed()) {
    const PartialInjection a =
        element_from_flags(n, cmd_decompose->count("--chart") > 0, chart,
                           cmd_decompose->count("--pairs") > 0, pairs);
    if (format == "csv") throw Error("decompose has no csv form");
    if (format == "text") {
      const auto p = profile(a);
      std::cout << "chart " << render_chart(a) << "\n"
                << "rank " << p.rank << "\ndefect " << p.defect
                << "\nstable_rank " << p.stable_rank << "\nnilpotent "
                << (p.nilpotent ? "yes" : "no") << "\nnilpotency_index "
                << p.nilpotency_index << "\nfixed_points "
                << p.fixed_point_count << "\n";
    } else {
      std::cout << describe_element(a).dump(2) << "\n";
    }
    return kExitOk;
  }

  if (cmd_compose->parsed()) {
    PartialInjection product = parse_chart(charts.front(), n);
    for (std::size_t i = 1; i < charts.size(); ++i)
      product = compose(product, parse_chart(charts[i], n));
    if (format == "json")
      std::cout << describe_element(product).dump(2) << "\n";
    else if (format == "text")
      std::cout << render_chart(product) << "\n";
    else
      throw Error("compose has no csv form");
    return kExitOk;
  }

  if (cmd_count->parsed()) {
    const CountTable table = count_table(n);
    const json j = to_json(table);
    if (!field.empty() && !j.contains(field))
      throw Error("unknown count field: " + field);
    if (format == "json") {
      if (field.empty())
        std::cout << j.dump(2) << "\n";
      else
        std::cout << json{{field, j.at(field)}}.dump() << "\n";
    } else if (format == "text") {
      if (field.empty()) {
        for (const auto& [key, value] : j.items())
          std::cout << key << " "
                    << (value.is_string() ? value.get<std::string>()
                                          : value.dump())
                    << "\n";
      } else {
        const auto& value = j.at(field);
        std::cout << (value.is_string() ? value.get<std::string>()
                                        : value.dump())
                  << "\n";
      }
    } else {
      throw Error("count has no csv form");
    }
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    const Budget budget = budget_from(budget_flag);
    bool pass = false;
    if (field.empty() || field == "counts") {
      IdentityReport report = verify_identities(n, budget);
      if (!identity.empty()) {
        std::erase_if(report.checks, [&](const IdentityCheck& c) {
          return c.name != identity;
        });
        if (report.checks.empty())
          throw Error("no identity named " + identity);
      }
      pass = report.all_pass();
      if (format == "json")
        std::cout << to_json(report).dump(2) << "\n";
      else if (format == "csv")
        std::cout << to_csv(report);
      else
        print_identity_text(report, std::cout);
    } else if (field == "spectral") {
      const SpectralReport report = verify_spectral_identities(n);
      pass = report.all_pass();
      if (format == "json")
        std::cout << to_json(report).dump(2) << "\n";
      else
        print_checks_text(report.checks, std::cout);
    } else if (field == "products") {
      const CrossCheckReport report = cross_checks(n, k);
      pass = report.all_pass();
      if (format == "json")
        std::cout << to_json(report).dump(2) << "\n";
      else
        print_checks_text(report.checks, std::cout);
    } else {
      throw Error("unknown verify field: " + field);
    }
    return pass ? kExitOk : kExitVerificationFailed;
  }

  if (cmd_bijection->parsed()) {
    const Budget budget = budget_from(budget_flag);
    const auto sweeps = bijection_sweeps(n, identity, budget);
    if (sweeps.empty()) throw Error("no bijection named " + identity);
    bool pass = true;
    json arr = json::array();
    for (const auto& s : sweeps) {
      pass = pass && s.pass();
      if (format == "json") {
        arr.push_back(json{{"name", s.name},
                           {"domain", s.domain_size.str()},
                           {"distinct_images", s.image_size.str()},
                           {"codomain", s.codomain_size.str()},
                           {"expected", s.expected.str()},
                           {"round_trip_ok", s.round_trip_ok},
                           {"forward_trip_ok", s.forward_trip_ok},
                           {"pass", s.pass()}});
      } else {
        std::cout << (s.pass() ? "PASS " : "FAIL ") << s.name << ": domain "
                  << s.domain_size << ", distinct images " << s.image_size
                  << ", codomain " << s.codomain_size << ", expected "
                  << s.expected
                  << (s.round_trip_ok && s.forward_trip_ok
                          ? ", round trips both ways"
                          : ", round trip BROKEN")
                  << "\n";
      }
    }
    if (format == "json")
      std::cout << json{{"n", n}, {"sweeps", arr}, {"all_pass", pass}}.dump(2)
                << "\n";
    return pass ? kExitOk : kExitVerificationFailed;
  }

  if (cmd_distribution->parsed()) {
    const Budget budget = budget_from(budget_flag);
    RankDistribution dist;
    if (field.empty() || field == "exact")
      dist = rank_distribution(n, k);
    else if (field == "brute")
      dist = brute_force_distribution(n, k, budget);
    else
      throw Error("unknown distribution field: " + field);
    if (format == "json")
      std::cout << to_json(dist).dump(2) << "\n";
    else if (format == "csv")
      std::cout << to_csv(dist);
    else
      for (int i = 0; i <= n; ++i)
        std::cout << "rank " << i << ": " << to_string(dist.p[i]) << "\n";
    return kExitOk;
  }

  if (cmd_simulate->parsed()) {
    std::uint64_t seed;
    if (seed_flag) {
      seed = *seed_flag;
    } else {
      std::random_device entropy;
      seed = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
      std::cerr << "seed " << seed << "\n";  // derived; printed for replay
    }
    const SampleReport report = monte_carlo(n, k, trials, seed);
    if (format == "json") {
      std::cout << to_json(report).dump(2) << "\n";
    } else if (format == "csv") {
      std::cout << "rank,count,empirical_num,empirical_den\n";
      for (int i = 0; i <= n; ++i)
        std::cout << i << "," << report.rank_histogram[i] << ","
                  << numerator(report.empirical[i]) << ","
                  << denominator(report.empirical[i]) << "\n";
    } else {
      std::cout << "seed " << report.seed << "\ntrials " << report.trials
                << "\n";
      for (int i = 0; i <= n; ++i)
        std::cout << "rank " << i << ": " << report.rank_histogram[i] << " ("
                  << to_string(report.empirical[i]) << ")\n";
      std::cout << "max deviation " << to_string(report.max_abs_deviation)
                << "\n";
    }
    return kExitOk;
  }

  if (cmd_asymptotics->parsed()) {
    bool pass = true;
    if (field.empty() || field == "growth") {
      const GrowthReport report = growth_report(n);
      pass = report.all_ok;
      if (format == "json")
        std::cout << to_json(report).dump(2) << "\n";
      else if (format == "csv")
        std::cout << to_csv(report);
      else
        for (const auto& r : report.rows)
          std::cout << "n=" << r.n << " t_ratio=" << to_string(r.t_ratio)
                    << " is_ratio=" << to_string(r.is_ratio) << " bounds="
                    << (r.ratio_bounds_t_ok && r.ratio_bounds_is_ok ? "ok"
                                                                    : "FAIL")
                    << "\n";
    } else if (field == "unimodality") {
      const UnimodalityReport report = unimodality_report(n);
      pass = report.lah_ranges_ok && report.rank_ranges_ok &&
             (!report.band_checked ||
              (report.ratio_band_ok && report.peak_ratio_ok));
      if (format == "csv")
        std::cout << to_csv(report);
      else if (format == "text")
        std::cout << "nilpotent-by-defect peak " << report.lah_peak
                  << (report.lah_ranges_ok ? " (ranges ok)" : " (ranges FAIL)")
                  << "\nrank-class peak " << report.rank_peak
                  << (report.rank_ranges_ok ? " (ranges ok)" : " (ranges FAIL)")
                  << "\n";
      else
        std::cout << to_json(report).dump(2) << "\n";
    } else if (field == "mod") {
      const ModReport report = mod_distribution(n, m);
      if (format == "json")
        std::cout << to_json(report).dump(2) << "\n";
      else if (format == "csv")
        std::cout << to_csv(report);
      else
        for (int p = 0; p < report.m; ++p)
          std::cout << "residue " << p << ": " << report.f[p] << " ("
                    << to_string(report.proportions[p]) << ")\n";
    } else {
      throw Error("unknown asymptotics field: " + field);
    }
    return pass ? kExitOk : kExitVerificationFailed;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (requires " << e.required.str()
              << " elements)\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
