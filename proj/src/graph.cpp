#include "graph.hpp"

#include <sstream>

#include "error.hpp"

namespace gapkit {

namespace {
constexpr uint32_t kMaxVertices = 4096;
}

ColoredGraph::ColoredGraph(uint32_t n) : n_(n) {
  if (n == 0) throw_invalid("graph needs at least one vertex");
  if (n > kMaxVertices) throw_invalid("graph too large (limit " + std::to_string(kMaxVertices) + ")");
  adj_.assign(static_cast<size_t>(n) * n, 0);
}

bool ColoredGraph::adjacent(uint32_t u, uint32_t v) const {
  if (u >= n_ || v >= n_) throw_invalid("vertex index out of range");
  return adj_[static_cast<size_t>(u) * n_ + v] != 0;
}

void ColoredGraph::add_edge(uint32_t u, uint32_t v) {
  if (u >= n_ || v >= n_) throw_invalid("edge endpoint out of range");
  if (u == v) throw_invalid("self-loop on vertex " + std::to_string(u));
  if (adjacent(u, v)) throw_invalid("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[static_cast<size_t>(u) * n_ + v] = 1;
  adj_[static_cast<size_t>(v) * n_ + u] = 1;
  ++edges_;
}

std::vector<std::pair<uint32_t, uint32_t>> ColoredGraph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(edges_);
  for (uint32_t u = 0; u < n_; ++u)
    for (uint32_t v = u + 1; v < n_; ++v)
      if (adj_[static_cast<size_t>(u) * n_ + v]) out.emplace_back(u, v);
  return out;
}

uint32_t ColoredGraph::color_of(uint32_t v) const {
  if (coloring_.empty()) throw_invalid("graph has no coloring");
  if (v >= n_) throw_invalid("vertex index out of range");
  return coloring_[v];
}

void ColoredGraph::set_coloring(std::vector<uint32_t> classes, uint32_t color_count) {
  if (classes.size() != n_) throw_invalid("coloring must assign a class to every vertex");
  if (color_count == 0) throw_invalid("coloring needs at least one class");
  for (uint32_t c : classes)
    if (c >= color_count) throw_invalid("color class out of range");
  coloring_ = std::move(classes);
  color_count_ = color_count;
}

ColoredGraph ColoredGraph::padded(uint32_t extra) const {
  ColoredGraph g(n_ + extra);
  for (auto [u, v] : edges()) g.add_edge(u, v);
  return g;
}

ColoredGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  std::optional<ColoredGraph> graph;
  bool saw_colors = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& what) -> void {
      throw_parse("line " + std::to_string(lineno) + ": " + what);
    };
    auto read_u32 = [&](const char* what) {
      int64_t v = -1;
      if (!(ls >> v) || v < 0 || v > UINT32_MAX)
        fail(std::string("expected a nonnegative integer for ") + what);
      return static_cast<uint32_t>(v);
    };
    if (head == "vertices") {
      if (graph) fail("duplicate 'vertices' line");
      uint32_t n = read_u32("vertex count");
      if (n == 0) fail("graph needs at least one vertex");
      graph.emplace(n);
      continue;
    }
    if (!graph) fail("expected 'vertices' before '" + head + "'");
    if (head == "colors") {
      if (saw_colors) fail("duplicate 'colors' line");
      uint32_t c = read_u32("class count");
      std::vector<uint32_t> classes;
      classes.reserve(graph->vertex_count());
      for (uint32_t i = 0; i < graph->vertex_count(); ++i) classes.push_back(read_u32("class"));
      std::string extra;
      if (ls >> extra) fail("too many class entries");
      try {
        graph->set_coloring(std::move(classes), c);
      } catch (const Error& e) {
        fail(e.what());
      }
      saw_colors = true;
      continue;
    }
    if (head == "edge") {
      uint32_t u = read_u32("endpoint");
      uint32_t v = read_u32("endpoint");
      std::string extra;
      if (ls >> extra) fail("trailing content after edge");
      try {
        graph->add_edge(u, v);
      } catch (const Error& e) {
        fail(e.what());
      }
      continue;
    }
    fail("unknown directive '" + head + "'");
  }
  if (!graph) throw_parse("graph: missing 'vertices' line");
  return *graph;
}

std::string serialize_graph(const ColoredGraph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  if (g.has_coloring()) {
    out += "colors " + std::to_string(g.color_count());
    for (uint32_t v = 0; v < g.vertex_count(); ++v) out += " " + std::to_string(g.color_of(v));
    out += "\n";
  }
  for (auto [u, v] : g.edges())
    out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace {

bool extend_clique(const ColoredGraph& g, std::vector<uint32_t>& clique, uint32_t k, uint32_t from,
                   uint64_t& budget) {
  if (clique.size() == k) return true;
  for (uint32_t v = from; v < g.vertex_count(); ++v) {
    if (g.vertex_count() - v < k - clique.size()) break;
    bool ok = true;
    for (uint32_t u : clique)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (budget == 0) throw_budget("clique search budget exceeded");
    --budget;
    clique.push_back(v);
    if (extend_clique(g, clique, k, v + 1, budget)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<uint32_t>> find_k_clique(const ColoredGraph& g, uint32_t k,
                                                   const SolveOptions& opt) {
  if (k > g.vertex_count()) throw_invalid("k exceeds the number of vertices");
  if (binomial_capped(g.vertex_count(), k, opt.budget) > opt.budget)
    throw_budget("clique search: C(n, k) exceeds the enumeration budget");
  std::vector<uint32_t> clique;
  clique.reserve(k);
  uint64_t budget = opt.budget;
  if (extend_clique(g, clique, k, 0, budget)) return clique;
  return std::nullopt;
}

}  // namespace gapkit
