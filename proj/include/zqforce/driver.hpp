#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zqforce/certificate.hpp"
#include "zqforce/generators.hpp"
#include "zqforce/graph.hpp"
#include "zqforce/report.hpp"

namespace zq {

/// Where the graph comes from: exactly one of `file` and `family`.
struct InputSpec {
  std::optional<std::string> file;
  std::optional<FamilyKind> family;
  FamilyParams params;
  std::optional<std::uint64_t> seed;
};

struct LoadedInput {
  Graph graph;
  std::string source;
  std::optional<FamilyKind> family;
  FamilyParams params;
  std::optional<std::uint64_t> seed;
};

LoadedInput load_input(const InputSpec& spec);

/// block_graph, cactus, general or disconnected.
std::string detect_class(const Graph& g);

struct SolveOptions {
  int q = 0;
  Rule3Mode rule3_mode = Rule3Mode::closure;
  int cap = 16;                // exact solver vertex cap
  bool inject_fault = false;   // corrupt the formula branch, for testing verify
};

struct MethodResult {
  Method method = Method::exact;
  int value = 0;
  std::optional<Certificate> certificate;
  nlohmann::json dump;  // solver state: block log, cactus tables or game report
  std::vector<std::string> warnings;
};

/// Empty when `method` can handle the input, otherwise the reason it cannot.
std::string method_blocker(Method method, const LoadedInput& in, const SolveOptions& opts);

/// Runs one concrete method. Disconnected inputs are solved per component and summed.
/// Throws ScopeError with the blocker when the method does not apply.
MethodResult run_method(Method method, const LoadedInput& in, const SolveOptions& opts, bool want_dump = false);

/// First applicable of formula, block, cactus, exact.
Method choose_method(const LoadedInput& in, const SolveOptions& opts);

struct ComputeOutcome {
  RunReport report;
  MethodResult result;
};

ComputeOutcome compute(const LoadedInput& in, Method method, const SolveOptions& opts, bool want_dump = false);

struct VerifyCell {
  Method method;
  std::optional<int> value;
  std::string note;  // skip reason or certificate failure
};

struct VerifyRow {
  int q = 0;
  std::vector<VerifyCell> cells;
  bool agree = true;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  std::vector<std::string> warnings;
  bool ok() const;
};

/// Every applicable method for each q, plus certificate checks. Disagreement or a
/// rejected certificate marks the row.
VerifyReport verify(const LoadedInput& in, const std::vector<int>& q_list, const SolveOptions& base);
std::string to_text(const VerifyReport& report);

/// Bench table over random instances, one row per size. Instance i uses seed + i.
/// Columns: n m blocks|cycles time_s Z0.
struct BenchRow {
  int n = 0;
  int m = 0;
  int parts = 0;
  double time_s = 0.0;
  int value = 0;
};
std::vector<BenchRow> bench(FamilyKind kind, const std::vector<int>& sizes, std::uint64_t seed,
                            const FamilyParams& base);
std::string bench_tsv(FamilyKind kind, const std::vector<BenchRow>& rows, bool with_time = true);

/// Optimal play of the Z_q game as readable text.
std::string strategy_text(const LoadedInput& in, const SolveOptions& opts);

}  // namespace zq
