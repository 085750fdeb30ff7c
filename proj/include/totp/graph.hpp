#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace totp {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
/// (u < v), sorted and unique.
class Graph {
 public:
  Graph() = default;

  /// Throws FormatError on self-loops, out-of-range endpoints, or a declared
  /// bipartition that some edge violates. Duplicate edges are merged.
  Graph(std::size_t vertices, std::vector<Edge> edges,
        std::optional<std::vector<bool>> left_side = std::nullopt);

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<std::vector<bool>>& declared_bipartition() const { return left_side_; }

  bool has_edge(std::size_t u, std::size_t v) const;

  /// Adjacency rows as bit masks; only valid for graphs with <= 64 vertices.
  std::vector<std::uint64_t> adjacency_masks() const;

  std::vector<std::vector<std::size_t>> adjacency_lists() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertices_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<bool>> left_side_;
};

/// Declared bipartition if any, else a 2-colouring if one exists.
std::optional<std::vector<bool>> bipartition(const Graph& g);

/// "p edge n m", then m lines "e u v" with 1-based vertices, and optionally
/// one line "b v1 v2 ..." listing the left side of a bipartition.
Graph parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite(std::size_t left, std::size_t right);

/// 2 x n grid.
Graph ladder_graph(std::size_t n);

/// Vertex-disjoint union; bipartitions are kept only if both sides have one.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace totp
