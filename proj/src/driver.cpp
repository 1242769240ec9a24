#include "zqforce/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "zqforce/block_solver.hpp"
#include "zqforce/blocks.hpp"
#include "zqforce/cactus_solver.hpp"
#include "zqforce/closed_forms.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/forcing.hpp"
#include "zqforce/game.hpp"

namespace zq {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe_family(FamilyKind kind, const FamilyParams& p, const std::optional<std::uint64_t>& seed) {
  std::ostringstream out;
  out << "family:" << to_string(kind) << "(";
  switch (kind) {
    case FamilyKind::generalized_star: {
      out << "arms=";
      for (std::size_t i = 0; i < p.path_lengths.size(); ++i) out << (i ? "," : "") << p.path_lengths[i];
      break;
    }
    case FamilyKind::windmill_I:
    case FamilyKind::windmill_II: out << "eta=" << p.eta << ",k=" << p.k << ",l=" << p.l; break;
    case FamilyKind::random_block_graph:
      out << "n=" << p.n << (p.blocks > 0 ? ",blocks=" + std::to_string(p.blocks) : ",max_block=" + std::to_string(p.max_block));
      break;
    case FamilyKind::random_cactus:
      out << "n=" << p.n << ",max_block=" << p.max_block << ",bridge_pct=" << p.bridge_percent;
      break;
    default: out << "n=" << p.n; break;
  }
  if (seed) out << ",seed=" << *seed;
  out << ")";
  return out.str();
}

bool formula_family(const LoadedInput& in) {
  return in.family == FamilyKind::generalized_star || in.family == FamilyKind::windmill_I ||
         in.family == FamilyKind::windmill_II;
}

int brute_cap(const SolveOptions& opts) { return std::max(opts.cap, kDefaultBruteForceCap); }

std::vector<Subgraph> split_components(const Graph& g) {
  std::vector<Subgraph> parts;
  for (const auto& comp : connected_components(g)) parts.push_back(induced_subgraph(g, comp));
  return parts;
}

std::vector<Vertex> relabel(const std::vector<Vertex>& vs, const std::vector<Vertex>& original) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(original[v]);
  std::sort(out.begin(), out.end());
  return out;
}

void append_relabelled(Certificate& into, const Certificate& part, const std::vector<Vertex>& original) {
  for (const auto& step : part.trace) {
    if (auto* t = std::get_if<TokenStep>(&step)) {
      into.trace.emplace_back(TokenStep{original[t->vertex]});
    } else if (auto* f = std::get_if<ForceStep>(&step)) {
      into.trace.emplace_back(ForceStep{original[f->source], original[f->target]});
    } else if (auto* a = std::get_if<AnnounceStep>(&step)) {
      AnnounceStep mapped;
      for (const auto& c : a->components) mapped.components.push_back(relabel(c, original));
      into.trace.emplace_back(std::move(mapped));
    } else if (auto* r = std::get_if<RevealStep>(&step)) {
      RevealStep mapped;
      for (const auto& c : r->components) mapped.components.push_back(relabel(c, original));
      into.trace.emplace_back(std::move(mapped));
    }
  }
}

Certificate closure_certificate(const Graph& g, const VertexSet& seed) {
  Certificate cert;
  for (Vertex v : seed.members()) cert.trace.emplace_back(TokenStep{v});
  for (const auto& f : forcing_closure_trace(g, seed).forces) cert.trace.emplace_back(ForceStep{f.source, f.target});
  cert.sync_tokens();
  return cert;
}

struct PartResult {
  int value = 0;
  std::optional<Certificate> certificate;
  json dump;
};

PartResult solve_part(Method method, const Graph& g, const SolveOptions& opts, bool want_dump) {
  PartResult out;
  switch (method) {
    case Method::block: {
      auto r = block_graph_Z(g);
      out.value = r.value;
      if (want_dump) out.dump = to_json(r);
      out.certificate = std::move(r.certificate);
      break;
    }
    case Method::cactus: {
      auto r = cactus_Z0_tables(g, want_dump);
      out.value = r.value;
      if (want_dump) out.dump = to_json(r);
      break;
    }
    case Method::exact: {
      GameConfig cfg;
      cfg.q = opts.q;
      cfg.rule3_mode = opts.rule3_mode;
      cfg.vertex_cap = opts.cap;
      const GameSolution sol = solve_zq(g, cfg);
      out.value = sol.value();
      out.certificate = extract_player_trace(g, sol);
      if (want_dump) out.dump = game_report_json(g, sol);
      break;
    }
    case Method::brute: {
      auto r = brute_force_Z(g, brute_cap(opts));
      out.value = r.value;
      out.certificate = closure_certificate(g, r.witness);
      if (want_dump) out.dump = json{{"value", r.value}, {"witness", r.witness.members()}};
      break;
    }
    default: throw std::logic_error("solve_part called with a non-graph method");
  }
  return out;
}

}  // namespace

LoadedInput load_input(const InputSpec& spec) {
  if (spec.file.has_value() == spec.family.has_value())
    throw ValidationError("give exactly one of --file and --family");
  LoadedInput in;
  if (spec.file) {
    in.graph = read_edge_list_file(*spec.file);
    in.source = *spec.file;
    return in;
  }
  const FamilyKind kind = *spec.family;
  if (is_random_family(kind) && !spec.seed) throw ValidationError(std::string(to_string(kind)) + " needs --seed");
  in.family = kind;
  in.params = spec.params;
  in.seed = spec.seed;
  in.graph = generate_family(kind, spec.params, spec.seed.value_or(0));
  in.source = describe_family(kind, spec.params, is_random_family(kind) ? spec.seed : std::nullopt);
  return in;
}

std::string detect_class(const Graph& g) {
  if (!is_connected(g)) return "disconnected";
  const BlockOrder order = find_blocks(g);
  if (is_block_graph(order)) return "block_graph";
  if (is_cactus(order)) return "cactus";
  return "general";
}

std::string method_blocker(Method method, const LoadedInput& in, const SolveOptions& opts) {
  const Graph& g = in.graph;
  if (opts.q < 0) return "q must be nonnegative";
  switch (method) {
    case Method::auto_select: return "auto is not a concrete method";
    case Method::formula: {
      if (!formula_family(in)) return "formula needs --family generalized_star, windmill_I or windmill_II";
      if (in.family == FamilyKind::windmill_II && in.params.k == 1 && in.params.eta > 1 && in.params.l > 1)
        return "windmill_II with k = 1 is complete bipartite; no closed form";
      return {};
    }
    case Method::block:
      for (const auto& part : split_components(g))
        if (!is_block_graph(part.graph)) return "not a block graph with all blocks of size >= 3";
      return {};
    case Method::cactus:
      if (opts.q != 0) return "cactus solver only computes Z_0 (q = 0)";
      for (const auto& part : split_components(g))
        if (!is_cactus(part.graph)) return "not a cactus graph";
      return {};
    case Method::exact:
      for (const auto& part : split_components(g))
        if (part.graph.n() > opts.cap)
          return "component with " + std::to_string(part.graph.n()) + " vertices exceeds exact cap " +
                 std::to_string(opts.cap);
      return {};
    case Method::brute:
      if (opts.q < g.n()) return "brute force computes Z = Z_q only for q >= n";
      for (const auto& part : split_components(g))
        if (part.graph.n() > brute_cap(opts))
          return "component with " + std::to_string(part.graph.n()) + " vertices exceeds brute-force cap " +
                 std::to_string(brute_cap(opts));
      return {};
  }
  return "unknown method";
}

MethodResult run_method(Method method, const LoadedInput& in, const SolveOptions& opts, bool want_dump) {
  if (const std::string why = method_blocker(method, in, opts); !why.empty())
    throw ScopeError(std::string(to_string(method)) + ": " + why);
  MethodResult result;
  result.method = method;

  if (method == Method::formula) {
    const FamilyParams& p = in.params;
    switch (*in.family) {
      case FamilyKind::generalized_star: result.value = star_Zq(p.path_lengths, opts.q); break;
      case FamilyKind::windmill_I: result.value = windmill_I_Zq(p.eta, p.k, p.l, opts.q); break;
      default: result.value = windmill_II_Zq(p.eta, p.k, p.l, opts.q); break;
    }
    if (opts.inject_fault) result.value += 1;
    return result;
  }

  const auto parts = split_components(in.graph);
  if (parts.size() > 1)
    result.warnings.push_back("graph has " + std::to_string(parts.size()) +
                              " components; reporting the sum of per-component values");
  Certificate merged;
  bool have_certificate = true;
  json dumps = json::array();
  for (const auto& part : parts) {
    PartResult r = solve_part(method, part.graph, opts, want_dump);
    result.value += r.value;
    if (r.certificate)
      append_relabelled(merged, *r.certificate, part.original);
    else
      have_certificate = false;
    if (want_dump) dumps.push_back(json{{"vertices", part.original}, {"state", r.dump}});
  }
  if (have_certificate) {
    merged.sync_tokens();
    result.certificate = std::move(merged);
  }
  if (want_dump) result.dump = dumps.size() == 1 ? dumps[0]["state"] : dumps;
  return result;
}

Method choose_method(const LoadedInput& in, const SolveOptions& opts) {
  for (Method m : {Method::formula, Method::block, Method::cactus, Method::exact})
    if (method_blocker(m, in, opts).empty()) return m;
  throw ScopeError("no solver for this class/size: the graph is " + detect_class(in.graph) + " with " +
                   std::to_string(in.graph.n()) +
                   " vertices; raise --cap for the exact solver or pass a block graph, cactus (q = 0) or formula family");
}

ComputeOutcome compute(const LoadedInput& in, Method method, const SolveOptions& opts, bool want_dump) {
  const auto start = Clock::now();
  const Method chosen = method == Method::auto_select ? choose_method(in, opts) : method;
  ComputeOutcome out;
  out.result = run_method(chosen, in, opts, want_dump);
  out.report.source = in.source;
  out.report.detected_class = detect_class(in.graph);
  out.report.method = chosen;
  out.report.q = opts.q;
  out.report.value = out.result.value;
  out.report.wall_time_s = seconds_since(start);
  out.report.seed = in.seed;
  if (in.family) out.report.params = in.params;
  return out;
}

bool VerifyReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.agree; });
}

VerifyReport verify(const LoadedInput& in, const std::vector<int>& q_list, const SolveOptions& base) {
  VerifyReport report;
  if (!is_connected(in.graph))
    report.warnings.push_back("graph is disconnected; every method reports the sum of per-component values");
  for (int q : q_list) {
    SolveOptions opts = base;
    opts.q = q;
    VerifyRow row;
    row.q = q;
    std::optional<int> reference;
    for (Method m : {Method::formula, Method::block, Method::cactus, Method::brute, Method::exact}) {
      VerifyCell cell{m, std::nullopt, method_blocker(m, in, opts)};
      if (cell.note.empty()) {
        MethodResult r = run_method(m, in, opts);
        cell.value = r.value;
        if (r.certificate) {
          const CertificateCheck check = check_certificate(in.graph, q, *r.certificate, opts.rule3_mode);
          if (!check.ok || r.certificate->value() != r.value) {
            cell.note = "certificate rejected: " + (check.ok ? "token count differs from value" : check.reason);
            row.agree = false;
          }
        }
        if (!reference) reference = r.value;
        if (*reference != r.value) row.agree = false;
      } else if (m == Method::exact) {
        report.warnings.push_back("q=" + std::to_string(q) + ": exact solver skipped, " + cell.note);
      }
      row.cells.push_back(std::move(cell));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "q";
  for (Method m : {Method::formula, Method::block, Method::cactus, Method::brute, Method::exact})
    out << '\t' << to_string(m);
  out << "\tstatus\n";
  for (const auto& row : report.rows) {
    out << row.q;
    for (const auto& cell : row.cells) out << '\t' << (cell.value ? std::to_string(*cell.value) : "-");
    out << '\t' << (row.agree ? "agree" : "MISMATCH") << '\n';
    for (const auto& cell : row.cells)
      if (cell.value && !cell.note.empty()) out << "  " << to_string(cell.method) << ": " << cell.note << '\n';
  }
  return out.str();
}

std::vector<BenchRow> bench(FamilyKind kind, const std::vector<int>& sizes, std::uint64_t seed,
                            const FamilyParams& base) {
  if (kind != FamilyKind::random_block_graph && kind != FamilyKind::random_cactus)
    throw ValidationError("bench supports random_block_graph and random_cactus only");
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    FamilyParams p = base;
    p.n = sizes[i];
    const Graph g = generate_family(kind, p, seed + i);
    BenchRow row;
    row.n = g.n();
    row.m = g.m();
    const BlockOrder order = find_blocks(g);
    const auto start = Clock::now();
    if (kind == FamilyKind::random_block_graph) {
      row.value = block_graph_Z(g).value;
      row.parts = static_cast<int>(order.sequence.size());
    } else {
      row.value = cactus_Z0(g);
      row.parts = count_cycle_blocks(order);
    }
    row.time_s = seconds_since(start);
    rows.push_back(row);
  }
  return rows;
}

std::string bench_tsv(FamilyKind kind, const std::vector<BenchRow>& rows, bool with_time) {
  std::ostringstream out;
  out << "n\tm\t" << (kind == FamilyKind::random_block_graph ? "blocks" : "cycles") << "\ttime_s\tZ0\n";
  for (const auto& r : rows) {
    char t[32];
    std::snprintf(t, sizeof t, "%.6f", r.time_s);
    out << r.n << '\t' << r.m << '\t' << r.parts << '\t' << (with_time ? t : "-") << '\t' << r.value << '\n';
  }
  return out.str();
}

std::string strategy_text(const LoadedInput& in, const SolveOptions& opts) {
  if (in.graph.n() > opts.cap)
    throw ResourceError("strategy needs n <= " + std::to_string(opts.cap) + " (graph has " +
                        std::to_string(in.graph.n()) + " vertices); raise --cap");
  GameConfig cfg;
  cfg.q = opts.q;
  cfg.rule3_mode = opts.rule3_mode;
  cfg.vertex_cap = opts.cap;
  const GameSolution sol = solve_zq(in.graph, cfg);
  const Certificate cert = extract_player_trace(in.graph, sol);
  std::ostringstream out;
  out << "# optimal play, q=" << opts.q << ", rule3=" << to_string(opts.rule3_mode) << "\n";
  int spent = 0;
  for (std::size_t i = 0; i < cert.trace.size(); ++i) {
    const auto& step = cert.trace[i];
    out << i + 1 << ". ";
    if (auto* t = std::get_if<TokenStep>(&step)) {
      out << "player places token on " << t->vertex << " (tokens spent: " << ++spent << ")";
    } else if (auto* f = std::get_if<ForceStep>(&step)) {
      out << f->source << " forces " << f->target;
    } else if (std::holds_alternative<AnnounceStep>(step)) {
      out << "player announces: " << to_text(step).substr(9);
    } else {
      out << "oracle reveals: " << to_text(step).substr(7);
    }
    out << '\n';
  }
  out << "tokens: " << cert.value() << '\n';
  return out.str();
}

}  // namespace zq
