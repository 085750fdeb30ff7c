#include "totp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "totp/errors.hpp"

namespace totp {

Graph::Graph(std::size_t vertices, std::vector<Edge> edges, std::optional<std::vector<bool>> left_side)
    : vertices_(vertices), left_side_(std::move(left_side)) {
  for (auto& [u, v] : edges) {
    if (u >= vertices || v >= vertices) {
      throw FormatError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                        ") outside vertex range 1.." + std::to_string(vertices));
    }
    if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  if (left_side_) {
    if (left_side_->size() != vertices) throw FormatError("bipartition size mismatch");
    for (const auto& [u, v] : edges_) {
      if ((*left_side_)[u] == (*left_side_)[v]) {
        throw FormatError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                          ") lies inside one side of the declared bipartition");
      }
    }
  }
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  std::vector<std::uint64_t> rows(vertices_, 0);
  for (const auto& [u, v] : edges_) {
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  return rows;
}

std::vector<std::vector<std::size_t>> Graph::adjacency_lists() const {
  std::vector<std::vector<std::size_t>> adj(vertices_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::optional<std::vector<bool>> bipartition(const Graph& g) {
  if (g.declared_bipartition()) return g.declared_bipartition();
  const auto adj = g.adjacency_lists();
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 1;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<bool> left(g.vertex_count());
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = colour[i] == 1;
  return left;
}

Graph parse_graph(std::string_view text) {
  bool header = false;
  std::size_t n = 0;
  std::size_t declared = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<bool>> left;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto vertex = [&](long long v, std::size_t line) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw FormatError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n), line, 1);
    }
    return static_cast<std::size_t>(v - 1);
  };
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    std::istringstream in(line);
    std::string tok;
    if (!(in >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      long long nn = -1;
      long long m = -1;
      if (header) throw FormatError("duplicate header", line_no, 1);
      if (!(in >> fmt >> nn >> m) || fmt != "edge" || nn < 0 || m < 0) {
        throw FormatError("expected header 'p edge <vertices> <edges>'", line_no, 1);
      }
      n = static_cast<std::size_t>(nn);
      declared = static_cast<std::size_t>(m);
      header = true;
    } else if (!header) {
      throw FormatError("data before 'p edge' header", line_no, 1);
    } else if (tok == "e") {
      long long u = 0;
      long long v = 0;
      std::string extra;
      if (!(in >> u >> v) || (in >> extra)) throw FormatError("expected 'e <u> <v>'", line_no, 1);
      edges.emplace_back(vertex(u, line_no), vertex(v, line_no));
    } else if (tok == "b") {
      if (left) throw FormatError("duplicate bipartition line", line_no, 1);
      left.emplace(n, false);
      std::string word;
      while (in >> word) {
        char* end = nullptr;
        long long v = std::strtoll(word.c_str(), &end, 10);
        if (*end != '\0') throw FormatError("not a vertex: '" + word + "'", line_no, 1);
        (*left)[vertex(v, line_no)] = true;
      }
    } else {
      throw FormatError("unknown line type '" + tok + "'", line_no, 1);
    }
  }
  if (!header) throw FormatError("missing 'p edge' header");
  if (edges.size() != declared) {
    throw FormatError("header declares " + std::to_string(declared) + " edges, found " +
                      std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges), std::move(left));
}

std::string to_edge_list(const Graph& g) {
  std::string s = "p edge " + std::to_string(g.vertex_count()) + " " +
                  std::to_string(g.edges().size()) + "\n";
  if (const auto& left = g.declared_bipartition()) {
    s += "b";
    for (std::size_t v = 0; v < left->size(); ++v) {
      if ((*left)[v]) s += " " + std::to_string(v + 1);
    }
    s += "\n";
  }
  for (const auto& [u, v] : g.edges()) s += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return s;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  if (n >= 3) {
    for (std::size_t u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  }
  return Graph(n, std::move(e));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < left; ++u)
    for (std::size_t v = 0; v < right; ++v) e.emplace_back(u, left + v);
  std::vector<bool> side(left + right, false);
  for (std::size_t u = 0; u < left; ++u) side[u] = true;
  return Graph(left + right, std::move(e), std::move(side));
}

Graph ladder_graph(std::size_t n) {
  // Top row 0..n-1, bottom row n..2n-1.
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.emplace_back(i, n + i);
    if (i + 1 < n) {
      e.emplace_back(i, i + 1);
      e.emplace_back(n + i, n + i + 1);
    }
  }
  return Graph(2 * n, std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t shift = a.vertex_count();
  std::vector<Edge> e = a.edges();
  for (const auto& [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
  std::optional<std::vector<bool>> side;
  if (a.declared_bipartition() && b.declared_bipartition()) {
    side = *a.declared_bipartition();
    side->insert(side->end(), b.declared_bipartition()->begin(), b.declared_bipartition()->end());
  }
  return Graph(shift + b.vertex_count(), std::move(e), std::move(side));
}

}  // namespace totp
