#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zqforce/blocks.hpp"
#include "zqforce/certificate.hpp"
#include "zqforce/graph.hpp"

namespace zq {

/// What happened to one block during elimination.
struct BlockStep {
  enum class Outcome {
    completed,  // block fully filled, anchor treated as filled from here on
    pending,    // anchor and one other vertex left unfilled; filling the anchor later forces the other
    final,      // last block: everything but one vertex bought, the rest forced
  };
  std::vector<Vertex> vertices;
  std::optional<Vertex> anchor;
  int filled_before = 0;
  std::vector<Vertex> tokens;  // bought while processing this block
  Outcome outcome = Outcome::completed;
  std::optional<Vertex> deferred;  // the vertex left for a later force (pending only)
};

struct BlockGraphResult {
  int value = 0;
  Certificate certificate;  // tokens followed by the forcing closure
  std::vector<BlockStep> log;
};

/// Z(G) for a connected block graph whose blocks all have at least three vertices,
/// in O(n + m). Throws ScopeError naming an offending block otherwise.
BlockGraphResult block_graph_Z(const Graph& g);

/// Z_q(G) for the same class; equal to Z(G) for every q.
int block_graph_Zq(const Graph& g, int q);

/// Checks the per-block token counts of a block-solver run: a block of size s carries
/// s-2 or s-1 tokens, and an anchored block never carries exactly s-2 with its anchor
/// among them. Returns an empty string when both hold, else the first violation.
std::string audit_block_tokens(const BlockGraphResult& result);

}  // namespace zq
