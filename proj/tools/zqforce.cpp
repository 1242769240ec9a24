#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zqforce/driver.hpp"
#include "zqforce/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitScope = 3;
constexpr int kExitMismatch = 4;

struct InputFlags {
  std::string file;
  std::string family;
  zq::FamilyParams params;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--file", file, "edge-list file");
    cmd->add_option("--family", family,
                    "generated family: path, cycle, clique, star, windmill1, windmill2, block, cactus");
    cmd->add_option("--eta", params.eta, "windmill copies");
    cmd->add_option("--k", params.k, "windmill clique size");
    cmd->add_option("--l", params.l, "windmill centre size");
    cmd->add_option("--arms", params.path_lengths, "generalized star arm lengths")->delimiter(',');
    cmd->add_option("--n", params.n, "vertex count for path/cycle/clique/random families");
    cmd->add_option("--blocks", params.blocks, "exact block count for random block graphs");
    cmd->add_option("--max-block", params.max_block, "largest block or cycle in random families");
    cmd->add_option("--bridge-pct", params.bridge_percent, "bridge probability in percent for random cacti");
    seed_opt = cmd->add_option("--seed", seed, "seed for random families");
  }

  zq::LoadedInput load() const {
    zq::InputSpec spec;
    if (!file.empty()) spec.file = file;
    if (!family.empty()) {
      spec.family = zq::parse_family_kind(family);
      if (!spec.family) throw zq::ValidationError("unknown family '" + family + "'");
    }
    spec.params = params;
    if (seed_opt->count() > 0) spec.seed = seed;
    return zq::load_input(spec);
  }
};

struct SolveFlags {
  int q = 0;
  std::string rule3 = "closure";
  int cap = 16;

  void attach(CLI::App* cmd, bool with_q = true) {
    if (with_q) cmd->add_option("--q", q, "announcement threshold q (>= 0)");
    cmd->add_option("--rule3", rule3, "Rule 3 semantics: closure or single");
    cmd->add_option("--cap", cap, "vertex cap for the exact game solver");
  }

  zq::SolveOptions options() const {
    zq::SolveOptions opts;
    opts.q = q;
    const auto mode = zq::parse_rule3_mode(rule3);
    if (!mode) throw zq::ValidationError("--rule3 must be closure or single");
    opts.rule3_mode = *mode;
    opts.cap = cap;
    if (cap < 1 || cap > 26) throw zq::ValidationError("--cap must be between 1 and 26");
    return opts;
  }
};

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw zq::ValidationError("cannot write '" + output + "'");
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw zq::ValidationError("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw zq::ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zqforce: zero forcing numbers Z and Z_q of graphs"};
  app.require_subcommand(1);

  InputFlags compute_in;
  SolveFlags compute_solve;
  std::string compute_method = "auto";
  std::string trace_path;
  std::string dump_path;
  std::string output;
  bool json_out = false;
  bool inject_fault = false;
  auto* compute_cmd = app.add_subcommand("compute", "compute Z_q of one graph");
  compute_in.attach(compute_cmd);
  compute_solve.attach(compute_cmd);
  compute_cmd->add_option("--method", compute_method, "auto, exact, block, cactus, formula or brute");
  compute_cmd->add_option("--trace", trace_path, "write the certificate to this file");
  compute_cmd->add_option("--dump", dump_path, "write solver state as JSON to this file");
  compute_cmd->add_flag("--json", json_out, "print the run report as JSON");
  compute_cmd->add_option("--output", output, "write the report here instead of stdout");
  compute_cmd->add_flag("--inject-fault", inject_fault)->group("");

  InputFlags verify_in;
  SolveFlags verify_solve;
  std::vector<int> q_list;
  std::string verify_output;
  bool verify_inject = false;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check every applicable method");
  verify_in.attach(verify_cmd);
  verify_solve.attach(verify_cmd, false);
  verify_cmd->add_option("--q-list", q_list, "q values, comma separated")->delimiter(',')->required();
  verify_cmd->add_option("--output", verify_output, "write the matrix here instead of stdout");
  verify_cmd->add_flag("--inject-fault", verify_inject)->group("");

  std::string bench_family;
  std::vector<int> bench_sizes;
  std::uint64_t bench_seed = 1;
  zq::FamilyParams bench_params;
  std::string bench_output;
  auto* bench_cmd = app.add_subcommand("bench", "timing table over random block graphs or cacti");
  bench_cmd->add_option("--family", bench_family, "block or cactus")->required();
  bench_cmd->add_option("--sizes", bench_sizes, "vertex counts, comma separated")->delimiter(',');
  bench_cmd->add_option("--seed", bench_seed, "base seed");
  bench_cmd->add_option("--max-block", bench_params.max_block, "largest block or cycle");
  bench_cmd->add_option("--bridge-pct", bench_params.bridge_percent, "bridge probability in percent for cacti");
  bench_cmd->add_option("--output", bench_output, "write the TSV here instead of stdout");

  InputFlags strategy_in;
  SolveFlags strategy_solve;
  auto* strategy_cmd = app.add_subcommand("strategy", "print optimal play of the Z_q game");
  strategy_in.attach(strategy_cmd);
  strategy_solve.attach(strategy_cmd);

  InputFlags check_in;
  SolveFlags check_solve;
  std::string cert_path;
  auto* check_cmd = app.add_subcommand("check", "validate a certificate file");
  check_in.attach(check_cmd);
  check_solve.attach(check_cmd);
  check_cmd->add_option("--cert", cert_path, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute_cmd) {
      const auto in = compute_in.load();
      auto opts = compute_solve.options();
      opts.inject_fault = inject_fault;
      const auto method = zq::parse_method(compute_method);
      if (!method) throw zq::ValidationError("unknown method '" + compute_method + "'");
      auto outcome = zq::compute(in, *method, opts, !dump_path.empty());
      for (const auto& w : outcome.result.warnings) std::cerr << "warning: " << w << '\n';
      if (!trace_path.empty()) {
        if (outcome.result.certificate) {
          write_file(trace_path, zq::to_text(*outcome.result.certificate));
          outcome.report.certificate_path = trace_path;
        } else {
          std::cerr << "warning: method " << zq::to_string(outcome.report.method)
                    << " produces no certificate; --trace ignored\n";
        }
      }
      if (!dump_path.empty()) write_file(dump_path, outcome.result.dump.dump(2) + "\n");
      std::string text;
      if (json_out) {
        text = zq::to_json(outcome.report).dump(2) + "\n";
      } else {
        std::ostringstream out;
        out << "value " << *outcome.report.value << '\n'
            << "method " << zq::to_string(outcome.report.method) << '\n'
            << "class " << outcome.report.detected_class << '\n';
        if (outcome.report.certificate_path) out << "certificate " << *outcome.report.certificate_path << '\n';
        text = out.str();
      }
      emit(text, output);
      return kExitOk;
    }
    if (*verify_cmd) {
      const auto in = verify_in.load();
      auto opts = verify_solve.options();
      opts.inject_fault = verify_inject;
      const auto report = zq::verify(in, q_list, opts);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
      emit(zq::to_text(report), verify_output);
      return report.ok() ? kExitOk : kExitMismatch;
    }
    if (*bench_cmd) {
      const auto kind = zq::parse_family_kind(bench_family);
      if (!kind) throw zq::ValidationError("unknown family '" + bench_family + "'");
      const auto rows = zq::bench(*kind, bench_sizes, bench_seed, bench_params);
      emit(zq::bench_tsv(*kind, rows), bench_output);
      return kExitOk;
    }
    if (*strategy_cmd) {
      const auto in = strategy_in.load();
      std::cout << zq::strategy_text(in, strategy_solve.options());
      return kExitOk;
    }
    if (*check_cmd) {
      const auto in = check_in.load();
      const auto opts = check_solve.options();
      const auto cert = zq::parse_certificate(read_file(cert_path));
      const auto result = zq::check_certificate(in.graph, opts.q, cert, opts.rule3_mode);
      if (result.ok) {
        std::cout << "certificate ok, tokens " << cert.value() << '\n';
        return kExitOk;
      }
      std::cout << "certificate rejected";
      if (result.failed_step) std::cout << " at step " << *result.failed_step + 1;
      std::cout << ": " << result.reason << '\n';
      return kExitMismatch;
    }
  } catch (const zq::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const zq::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const zq::ScopeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitScope;
  } catch (const zq::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitScope;
  }
  return kExitOk;
}
