#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zqforce/graph.hpp"

namespace zq {

/// How many forces one Rule-3 reveal licenses: the full closure inside the revealed
/// subgraph, or a single force after which the player has to announce again.
enum class Rule3Mode { closure, single_force };

std::string_view to_string(Rule3Mode mode);
std::optional<Rule3Mode> parse_rule3_mode(std::string_view text);

/// q large enough that Rule 3 never applies (plain zero forcing).
inline constexpr int kQInfinity = std::numeric_limits<int>::max();

struct TokenStep {
  Vertex vertex;
  friend bool operator==(const TokenStep&, const TokenStep&) = default;
};
struct ForceStep {
  Vertex source;
  Vertex target;
  friend bool operator==(const ForceStep&, const ForceStep&) = default;
};
/// Components named by the player; each entry is one whole unfilled component.
struct AnnounceStep {
  std::vector<std::vector<Vertex>> components;
  friend bool operator==(const AnnounceStep&, const AnnounceStep&) = default;
};
/// Components picked by the oracle out of the preceding announcement.
struct RevealStep {
  std::vector<std::vector<Vertex>> components;
  friend bool operator==(const RevealStep&, const RevealStep&) = default;
};

using TraceStep = std::variant<TokenStep, ForceStep, AnnounceStep, RevealStep>;

/// Replayable witness: starting from nothing filled, the trace fills every vertex
/// while spending exactly |tokens| tokens.
struct Certificate {
  std::vector<Vertex> tokens;  // sorted
  std::vector<TraceStep> trace;

  int value() const noexcept { return static_cast<int>(tokens.size()); }
  /// Recomputes `tokens` from the Token steps of the trace.
  void sync_tokens();
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertificateCheck {
  bool ok = false;
  std::optional<std::size_t> failed_step;  // index into trace
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// Replays the trace under Rules 1-3 with parameter q.
///
/// A Force is accepted if it is a plain Rule-2 force, or if it is legal inside the
/// subgraph revealed by the most recent Reveal (the reveal stays open until the next
/// Token or Announce). In single_force mode a reveal licenses one such force.
/// Fails when a step is illegal, when the final filled set is not V, or when `tokens`
/// disagrees with the Token steps.
CertificateCheck check_certificate(const Graph& g, int q, const Certificate& cert,
                                   Rule3Mode mode = Rule3Mode::closure);

/// Line format: `token v`, `force u v`, `announce c1;c2`, `reveal c1` with each
/// component a comma-joined vertex list. `#` comments and blank lines are ignored.
std::string to_text(const Certificate& cert);
Certificate parse_certificate(std::string_view text);
std::string to_text(const TraceStep& step);

}  // namespace zq
