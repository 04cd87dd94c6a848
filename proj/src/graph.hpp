#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace gapkit {

// Undirected graph on vertices 0..n-1 with an optional vertex coloring.
class ColoredGraph {
 public:
  explicit ColoredGraph(uint32_t n);

  uint32_t vertex_count() const { return n_; }
  bool adjacent(uint32_t u, uint32_t v) const;
  void add_edge(uint32_t u, uint32_t v);  // rejects self-loops and duplicates
  size_t edge_count() const { return edges_; }
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;  // sorted (u < v)

  bool has_coloring() const { return !coloring_.empty(); }
  uint32_t color_count() const { return color_count_; }
  uint32_t color_of(uint32_t v) const;
  void set_coloring(std::vector<uint32_t> classes, uint32_t color_count);

  // Copy with `extra` isolated, uncolored vertices appended.
  ColoredGraph padded(uint32_t extra) const;

 private:
  uint32_t n_;
  size_t edges_ = 0;
  std::vector<uint8_t> adj_;  // n*n matrix
  std::vector<uint32_t> coloring_;
  uint32_t color_count_ = 0;
};

ColoredGraph parse_graph(const std::string& text);
std::string serialize_graph(const ColoredGraph& g);

// Lexicographically smallest k-clique, searched exhaustively.
std::optional<std::vector<uint32_t>> find_k_clique(const ColoredGraph& g, uint32_t k,
                                                   const SolveOptions& opt = {});

}  // namespace gapkit
