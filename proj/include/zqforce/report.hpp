#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "zqforce/block_solver.hpp"
#include "zqforce/cactus_solver.hpp"
#include "zqforce/game.hpp"
#include "zqforce/generators.hpp"

namespace zq {

enum class Method { auto_select, exact, block, cactus, formula, brute };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

/// One compute run, as printed with --json.
struct RunReport {
  std::string source;          // file path or family description
  std::string detected_class;  // block_graph, cactus, general, disconnected
  Method method = Method::exact;
  int q = 0;
  std::optional<int> value;    // absent when the run failed
  std::optional<std::string> certificate_path;
  double wall_time_s = 0.0;
  std::optional<std::uint64_t> seed;
  std::optional<FamilyParams> params;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json to_json(const FamilyParams& params);
FamilyParams family_params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RunReport& report);
/// Throws ParseError on missing or mistyped fields.
RunReport run_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const BlockGraphResult& result);
nlohmann::json to_json(const CactusResult& result);
/// Value, explored states and the optimal trace against the optimal oracle.
nlohmann::json game_report_json(const Graph& g, const GameSolution& sol);

}  // namespace zq
