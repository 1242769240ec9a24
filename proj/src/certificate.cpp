#include "zqforce/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "zqforce/errors.hpp"

namespace zq {

std::string_view to_string(Rule3Mode mode) { return mode == Rule3Mode::closure ? "closure" : "single"; }

std::optional<Rule3Mode> parse_rule3_mode(std::string_view text) {
  if (text == "closure") return Rule3Mode::closure;
  if (text == "single" || text == "single_force") return Rule3Mode::single_force;
  return std::nullopt;
}

void Certificate::sync_tokens() {
  tokens.clear();
  for (const auto& step : trace) {
    if (const auto* t = std::get_if<TokenStep>(&step)) tokens.push_back(t->vertex);
  }
  std::sort(tokens.begin(), tokens.end());
}

namespace {

struct Replay {
  const Graph& g;
  int q;
  Rule3Mode mode;
  std::vector<char> filled;
  int filled_count = 0;

  // Announcement awaiting the oracle's reveal.
  std::optional<std::vector<std::vector<Vertex>>> announced;
  // Vertices of the currently open reveal (empty when none is open).
  std::vector<char> revealed;
  bool reveal_open = false;
  int reveal_forces = 0;

  Replay(const Graph& graph, int q_, Rule3Mode m)
      : g(graph), q(q_), mode(m), filled(graph.n(), 0), revealed(graph.n(), 0) {}

  bool valid(Vertex v) const { return v >= 0 && v < g.n(); }

  void close_reveal() {
    if (reveal_open) std::fill(revealed.begin(), revealed.end(), 0);
    reveal_open = false;
    reveal_forces = 0;
  }

  void fill(Vertex v) {
    filled[v] = 1;
    ++filled_count;
  }

  std::vector<std::vector<Vertex>> current_components() const {
    VertexSet f(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
      if (filled[v]) f.insert(v);
    std::vector<std::vector<Vertex>> out;
    for (const auto& c : unfilled_components(g, f)) out.push_back(c.members());
    return out;
  }

  // Empty string when legal, otherwise the reason.
  std::string apply(const TraceStep& step) {
    if (announced && !std::holds_alternative<RevealStep>(step)) return "announcement not followed by a reveal";
    return std::visit([this](const auto& s) { return apply_step(s); }, step);
  }

  std::string apply_step(const TokenStep& s) {
    if (!valid(s.vertex)) return "token on unknown vertex " + std::to_string(s.vertex);
    if (filled[s.vertex]) return "token on already filled vertex " + std::to_string(s.vertex);
    close_reveal();
    fill(s.vertex);
    return {};
  }

  std::string apply_step(const ForceStep& s) {
    const Vertex u = s.source;
    const Vertex v = s.target;
    if (!valid(u) || !valid(v)) return "force references unknown vertex";
    if (!filled[u]) return "force source " + std::to_string(u) + " is not filled";
    if (filled[v]) return "force target " + std::to_string(v) + " is already filled";
    if (!g.has_edge(u, v)) return "force target " + std::to_string(v) + " is not adjacent to " + std::to_string(u);

    const auto& nb = g.neighbors(u);
    const bool rule2 = std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return w == v || filled[w]; });
    if (rule2) {
      fill(v);
      return {};
    }
    if (!reveal_open) return std::to_string(u) + " has several unfilled neighbours and no reveal is open";
    if (!revealed[v]) return "force target " + std::to_string(v) + " lies outside the revealed components";
    const bool inside = std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return w == v || filled[w] || !revealed[w]; });
    if (!inside) return std::to_string(u) + " has several unfilled neighbours inside the revealed subgraph";
    if (mode == Rule3Mode::single_force && reveal_forces > 0) return "single_force mode allows one force per reveal";
    ++reveal_forces;
    fill(v);
    return {};
  }

  std::string apply_step(const AnnounceStep& s) {
    close_reveal();
    const auto comps = current_components();
    const long long k = static_cast<long long>(comps.size());
    if (k <= q) return "Rule 3 needs more than q unfilled components (have " + std::to_string(k) + ")";
    if (static_cast<long long>(s.components.size()) < static_cast<long long>(q) + 1) {
      return "announcement names fewer than q+1 components";
    }
    std::vector<std::vector<Vertex>> named;
    for (auto c : s.components) {
      std::sort(c.begin(), c.end());
      if (std::find(comps.begin(), comps.end(), c) == comps.end()) return "announced set is not an unfilled component";
      if (std::find(named.begin(), named.end(), c) != named.end()) return "component announced twice";
      named.push_back(std::move(c));
    }
    announced = std::move(named);
    return {};
  }

  std::string apply_step(const RevealStep& s) {
    if (!announced) return "reveal without a preceding announcement";
    if (s.components.empty()) return "oracle must reveal a nonempty subset";
    std::vector<std::vector<Vertex>> picked;
    for (auto c : s.components) {
      std::sort(c.begin(), c.end());
      if (std::find(announced->begin(), announced->end(), c) == announced->end()) {
        return "revealed component was not announced";
      }
      if (std::find(picked.begin(), picked.end(), c) != picked.end()) return "component revealed twice";
      picked.push_back(std::move(c));
    }
    announced.reset();
    reveal_open = true;
    reveal_forces = 0;
    for (const auto& c : picked)
      for (Vertex v : c) revealed[v] = 1;
    return {};
  }
};

}  // namespace

CertificateCheck check_certificate(const Graph& g, int q, const Certificate& cert, Rule3Mode mode) {
  Replay replay(g, q, mode);
  for (std::size_t i = 0; i < cert.trace.size(); ++i) {
    if (auto why = replay.apply(cert.trace[i]); !why.empty()) return {false, i, std::move(why)};
  }
  if (replay.announced) return {false, cert.trace.size() - 1, "trace ends with an unanswered announcement"};
  if (replay.filled_count != g.n()) {
    return {false, std::nullopt, std::to_string(g.n() - replay.filled_count) + " vertices left unfilled"};
  }
  Certificate synced = cert;
  synced.sync_tokens();
  auto claimed = cert.tokens;
  std::sort(claimed.begin(), claimed.end());
  if (claimed != synced.tokens) return {false, std::nullopt, "token set does not match the Token steps"};
  return {true, std::nullopt, {}};
}

// ----------------------------------------------------------------- text form

namespace {

std::string join_components(const std::vector<std::vector<Vertex>>& comps) {
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < comps[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(comps[i][j]);
    }
  }
  return out;
}

Vertex parse_vertex(std::string_view token, int line) {
  Vertex v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc{} || ptr != end || v < 0) throw ParseError("bad vertex '" + std::string(token) + "'", line);
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::vector<std::vector<Vertex>> parse_components(std::string_view text, int line) {
  std::vector<std::vector<Vertex>> comps;
  for (auto part : split(text, ';')) {
    std::vector<Vertex> comp;
    for (auto v : split(part, ',')) comp.push_back(parse_vertex(v, line));
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

std::string to_text(const TraceStep& step) {
  struct Printer {
    std::string operator()(const TokenStep& s) const { return "token " + std::to_string(s.vertex); }
    std::string operator()(const ForceStep& s) const {
      return "force " + std::to_string(s.source) + " " + std::to_string(s.target);
    }
    std::string operator()(const AnnounceStep& s) const { return "announce " + join_components(s.components); }
    std::string operator()(const RevealStep& s) const { return "reveal " + join_components(s.components); }
  };
  return std::visit(Printer{}, step);
}

std::string to_text(const Certificate& cert) {
  std::ostringstream out;
  out << "# tokens " << cert.tokens.size() << '\n';
  for (const auto& step : cert.trace) out << to_text(step) << '\n';
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  Certificate cert;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string keyword;
    if (!(words >> keyword)) continue;
    std::vector<std::string> args;
    for (std::string a; words >> a;) args.push_back(a);
    auto want = [&](std::size_t count) {
      if (args.size() != count) throw ParseError("'" + keyword + "' takes " + std::to_string(count) + " argument(s)", line);
    };
    if (keyword == "token") {
      want(1);
      cert.trace.emplace_back(TokenStep{parse_vertex(args[0], line)});
    } else if (keyword == "force") {
      want(2);
      cert.trace.emplace_back(ForceStep{parse_vertex(args[0], line), parse_vertex(args[1], line)});
    } else if (keyword == "announce") {
      want(1);
      cert.trace.emplace_back(AnnounceStep{parse_components(args[0], line)});
    } else if (keyword == "reveal") {
      want(1);
      cert.trace.emplace_back(RevealStep{parse_components(args[0], line)});
    } else {
      throw ParseError("unknown certificate step '" + keyword + "'", line);
    }
  }
  cert.sync_tokens();
  return cert;
}

}  // namespace zq
