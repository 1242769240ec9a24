#include "zqforce/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include "zqforce/errors.hpp"

namespace zq {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {
  if (universe < 0) throw ValidationError("negative vertex universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw ValidationError("mask encoding needs universe <= 64");
  VertexSet s(universe);
  if (universe > 0) s.words_[0] = universe == 64 ? mask : (mask & ((std::uint64_t{1} << universe) - 1));
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || v >= universe_) {
    throw ValidationError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(universe_) + ")");
  }
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int count = 0;
  for (auto w : words_) count += std::popcount(w);
  return count;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~theirs) return false;
  }
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > 64) throw ValidationError("mask encoding needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ != universe_) throw ValidationError("vertex sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw ValidationError("negative vertex count");
  adjacency_.resize(n);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside vertex range [0, " +
                            std::to_string(n) + ")");
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n()) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n() > 64) throw ValidationError("adjacency masks need n <= 64");
  std::vector<std::uint64_t> masks(n(), 0);
  for (Vertex v = 0; v < n(); ++v) {
    for (Vertex u : adjacency_[v]) masks[v] |= std::uint64_t{1} << u;
  }
  return masks;
}

// ---------------------------------------------------------------- edge list

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_count(std::string_view token, int line, const char* what) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(std::string("expected integer ") + what + ", got '" + std::string(token) + "'", line);
  }
  if (value < 0) throw ParseError(std::string("negative ") + what + " '" + std::string(token) + "'", line);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared_n = -1;
  int max_endpoint = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError("expected 'u v' or 'n <count>'", line_no);
    if (tokens[0] == "n") {
      if (declared_n >= 0) throw ParseError("duplicate 'n' header", line_no);
      declared_n = parse_count(tokens[1], line_no, "vertex count");
      continue;
    }
    const int u = parse_count(tokens[0], line_no, "endpoint");
    const int v = parse_count(tokens[1], line_no, "endpoint");
    if (u == v) throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
    max_endpoint = std::max({max_endpoint, u, v});
  }
  int n = max_endpoint + 1;
  if (declared_n >= 0) {
    if (declared_n < n) {
      throw ValidationError("header declares n = " + std::to_string(declared_n) + " but endpoint " +
                            std::to_string(max_endpoint) + " appears");
    }
    n = declared_n;
  }
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// --------------------------------------------------------------- components

std::vector<VertexSet> unfilled_components(const Graph& g, const VertexSet& filled) {
  const int n = g.n();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || filled.contains(s)) continue;
    VertexSet comp(n);
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u] && !filled.contains(u)) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& comp : unfilled_components(g, VertexSet(g.n()))) out.push_back(comp.members());
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.original.assign(vertices.begin(), vertices.end());
  std::sort(sub.original.begin(), sub.original.end());
  sub.original.erase(std::unique(sub.original.begin(), sub.original.end()), sub.original.end());
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    const Vertex v = sub.original[i];
    if (v < 0 || v >= g.n()) throw ValidationError("subgraph vertex " + std::to_string(v) + " out of range");
    local[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  }
  sub.graph = Graph(static_cast<int>(sub.original.size()), edges);
  return sub;
}

}  // namespace zq
