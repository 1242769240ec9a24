#include "zqforce/report.hpp"

#include "zqforce/errors.hpp"

namespace zq {

using nlohmann::json;

std::string_view to_string(Method method) {
  switch (method) {
    case Method::auto_select: return "auto";
    case Method::exact: return "exact";
    case Method::block: return "block";
    case Method::cactus: return "cactus";
    case Method::formula: return "formula";
    case Method::brute: return "brute";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) {
  for (Method m : {Method::auto_select, Method::exact, Method::block, Method::cactus, Method::formula, Method::brute})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

json to_json(const FamilyParams& p) {
  return json{{"eta", p.eta},          {"k", p.k},           {"l", p.l},
              {"arms", p.path_lengths}, {"n", p.n},           {"blocks", p.blocks},
              {"max_block", p.max_block}, {"bridge_percent", p.bridge_percent}};
}

FamilyParams family_params_from_json(const json& j) {
  try {
    FamilyParams p;
    p.eta = j.at("eta").get<int>();
    p.k = j.at("k").get<int>();
    p.l = j.at("l").get<int>();
    p.path_lengths = j.at("arms").get<std::vector<int>>();
    p.n = j.at("n").get<int>();
    p.blocks = j.at("blocks").get<int>();
    p.max_block = j.at("max_block").get<int>();
    p.bridge_percent = j.at("bridge_percent").get<int>();
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("family params: ") + e.what(), 0);
  }
}

json to_json(const RunReport& r) {
  json j{{"source", r.source},
         {"detected_class", r.detected_class},
         {"method", std::string(to_string(r.method))},
         {"q", r.q},
         {"wall_time_s", r.wall_time_s}};
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["certificate_path"] = r.certificate_path ? json(*r.certificate_path) : json(nullptr);
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["params"] = r.params ? to_json(*r.params) : json(nullptr);
  return j;
}

RunReport run_report_from_json(const json& j) {
  try {
    RunReport r;
    r.source = j.at("source").get<std::string>();
    r.detected_class = j.at("detected_class").get<std::string>();
    const auto method = parse_method(j.at("method").get<std::string>());
    if (!method) throw ParseError("unknown method '" + j.at("method").get<std::string>() + "'", 0);
    r.method = *method;
    r.q = j.at("q").get<int>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
    if (!j.at("value").is_null()) r.value = j.at("value").get<int>();
    if (!j.at("certificate_path").is_null()) r.certificate_path = j.at("certificate_path").get<std::string>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("params").is_null()) r.params = family_params_from_json(j.at("params"));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("run report: ") + e.what(), 0);
  }
}

json to_json(const Certificate& cert) {
  json steps = json::array();
  for (const auto& step : cert.trace) steps.push_back(to_text(step));
  return json{{"tokens", cert.tokens}, {"trace", steps}};
}

namespace {

std::string_view outcome_name(BlockStep::Outcome o) {
  switch (o) {
    case BlockStep::Outcome::completed: return "completed";
    case BlockStep::Outcome::pending: return "pending";
    case BlockStep::Outcome::final: return "final";
  }
  return "unknown";
}

json optional_vertex(const std::optional<Vertex>& v) { return v ? json(*v) : json(nullptr); }

json undefined_as_null(std::int64_t x) { return x == kCactusUndefined ? json(nullptr) : json(x); }

}  // namespace

json to_json(const BlockGraphResult& result) {
  json log = json::array();
  for (const auto& step : result.log) {
    log.push_back({{"vertices", step.vertices},
                   {"anchor", optional_vertex(step.anchor)},
                   {"filled_before", step.filled_before},
                   {"tokens", step.tokens},
                   {"outcome", std::string(outcome_name(step.outcome))},
                   {"deferred", optional_vertex(step.deferred)}});
  }
  return json{{"value", result.value}, {"log", log}, {"certificate", to_json(result.certificate)}};
}

json to_json(const CactusResult& result) {
  json roots = json::array();
  for (const auto& t : result.roots) {
    json blocks = json::array();
    for (const auto& b : t.blocks) {
      json val = json::array();
      for (const auto& row : b.val) {
        json r = json::array();
        for (auto x : row) r.push_back(undefined_as_null(x));
        val.push_back(r);
      }
      blocks.push_back({{"top", b.top}, {"members", b.members}, {"val", val}});
    }
    json dp = json::array();
    for (const auto& d : t.dp) dp.push_back({undefined_as_null(d[0]), undefined_as_null(d[1])});
    roots.push_back({{"root", t.root}, {"value", undefined_as_null(t.value)}, {"blocks", blocks}, {"dp", dp}});
  }
  return json{{"value", result.value}, {"best_root", result.best_root}, {"roots", roots}};
}

json game_report_json(const Graph& g, const GameSolution& sol) {
  const Certificate cert = extract_player_trace(g, sol);
  return json{{"value", sol.value()},
              {"states_explored", sol.states_explored()},
              {"q", sol.config().q},
              {"rule3_mode", std::string(to_string(sol.config().rule3_mode))},
              {"trace", to_json(cert)["trace"]}};
}

}  // namespace zq
