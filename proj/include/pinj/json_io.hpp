#pragma once

#include <string>

#include <json.hpp>

#include "pinj/asymptotics.hpp"
#include "pinj/bijections.hpp"
#include "pinj/chart.hpp"
#include "pinj/counting.hpp"
#include "pinj/element.hpp"
#include "pinj/numbers.hpp"
#include "pinj/products.hpp"

namespace pinj {

// Big integers serialize as decimal strings, rationals as {"num", "den"},
// elements as {"n", "map"} with null for undefined entries.
nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(const Rational& v);
nlohmann::json to_json(const std::vector<BigInt>& v);
nlohmann::json to_json(const std::vector<Rational>& v);

nlohmann::json to_json(const PartialInjection& a);
PartialInjection element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Mark& mark);
Mark mark_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MarkedElement& m);
MarkedElement marked_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ChartDecomposition& chart);
nlohmann::json to_json(const ChainType& type);
nlohmann::json to_json(const OrbitTrace& trace);

// Full per-element description used by the decompose command.
nlohmann::json describe_element(const PartialInjection& a);

nlohmann::json to_json(const CountTable& table);
nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const RankDistribution& dist);
nlohmann::json to_json(const SampleReport& report);
nlohmann::json to_json(const SpectralReport& report);
nlohmann::json to_json(const CrossCheckReport& report);
nlohmann::json to_json(const GrowthReport& report);
nlohmann::json to_json(const UnimodalityReport& report);
nlohmann::json to_json(const ModReport& report);

std::string to_csv(const RankDistribution& dist);
std::string to_csv(const GrowthReport& report);
std::string to_csv(const ModReport& report);
std::string to_csv(const IdentityReport& report);
std::string to_csv(const UnimodalityReport& report);

}  // namespace pinj
