// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polygraph/errors.hpp"

namespace polygraph {

/// A simple path: vertex sequence plus the edge indices traversed.
/// Vertices and edge indices are 1-based throughout.
struct Path {
  std::vector<int> vertices;
  std::vector<int> edge_indices;

  int length() const { return static_cast<int>(edge_indices.size()); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Simple undirected graph. Vertices are 1..n, edges keep their input order
/// and the index of edge i names the polynomial variable x_i.
class Graph {
public:
  enum class Family { star, cycle, path, complete };

  Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_.assign(n_ + 1, {});
    edge_index_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);
    int idx = 0;
    for (auto [u, v] : edges_) {
      ++idx;
      if (u < 1 || u > n_ || v < 1 || v > n_)
        throw ParseError("edge " + std::to_string(idx) + " has vertex out of range 1.." + std::to_string(n_));
      if (u == v) throw ParseError("edge " + std::to_string(idx) + " is a self-loop at vertex " + std::to_string(u));
      if (edge_index_[cell(u, v)] != 0)
        throw ParseError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      edge_index_[cell(u, v)] = idx;
      edge_index_[cell(v, u)] = idx;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  /// DIMACS edge format: "c" comments, one "p edge n m" line, then m lines "e u v".
  static Graph parse_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string tag;
      if (!(ls >> tag)) continue;  // blank line
      if (tag == "c") continue;
      if (tag == "p") {
        if (n >= 0) throw ParseError("line " + std::to_string(lineno) + ": repeated problem line");
        std::string fmt;
        if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 1 || m < 0)
          throw ParseError("line " + std::to_string(lineno) + ": malformed problem line, expected 'p edge n m'");
        continue;
      }
      if (tag == "e") {
        if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": edge before problem line");
        int u = 0, v = 0;
        if (!(ls >> u >> v)) throw ParseError("line " + std::to_string(lineno) + ": malformed edge line");
        edges.emplace_back(u, v);
        continue;
      }
      throw ParseError("line " + std::to_string(lineno) + ": unknown line type '" + tag + "'");
    }
    if (n < 0) throw ParseError("missing problem line 'p edge n m'");
    if (static_cast<long long>(edges.size()) != m)
      throw ParseError("edge count mismatch: header declares " + std::to_string(m) + ", found " +
                       std::to_string(edges.size()));
    return Graph(n, std::move(edges));
  }

  static Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
  }

  /// Named families with a documented deterministic edge ordering.
  ///   star:     K_{1,size} — size leaves, center is vertex 1, e_i = (1, i+1)
  ///   cycle:    C_size — e_i = (i, i+1), e_size = (size, 1); size >= 3
  ///   path:     P_size — size vertices, e_i = (i, i+1)
  ///   complete: K_size — pairs in lexicographic order
  static Graph generate(Family family, int size) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
      case Family::star:
        if (size < 1) throw std::invalid_argument("star needs at least one leaf");
        for (int i = 1; i <= size; ++i) edges.emplace_back(1, i + 1);
        return Graph(size + 1, std::move(edges));
      case Family::cycle:
        if (size < 3) throw std::invalid_argument("cycle needs at least three vertices");
        for (int i = 1; i < size; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(size, 1);
        return Graph(size, std::move(edges));
      case Family::path:
        if (size < 1) throw std::invalid_argument("path needs at least one vertex");
        for (int i = 1; i < size; ++i) edges.emplace_back(i, i + 1);
        return Graph(size, std::move(edges));
      case Family::complete:
        if (size < 1) throw std::invalid_argument("complete graph needs at least one vertex");
        for (int i = 1; i <= size; ++i)
          for (int j = i + 1; j <= size; ++j) edges.emplace_back(i, j);
        return Graph(size, std::move(edges));
    }
    throw std::invalid_argument("unknown graph family");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::pair<int, int> edge(int i) const {  // 1-based
    if (i < 1 || i > edge_count()) throw std::invalid_argument("edge index out of range");
    return edges_[i - 1];
  }

  bool adjacent(int u, int v) const { return edge_index(u, v) != 0; }

  /// 1-based edge index of {u,v}, or 0 when not an edge.
  int edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return edge_index_[cell(u, v)];
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool connected() const {
    if (n_ == 1) return true;
    std::vector<char> seen(n_ + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == n_;
  }

  /// Max over vertex pairs of shortest-path length; nullopt when disconnected.
  std::optional<int> diameter() const {
    int best = 0;
    for (int s = 1; s <= n_; ++s) {
      std::vector<int> dist(n_ + 1, -1);
      std::queue<int> q;
      dist[s] = 0;
      q.push(s);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj_[u])
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            q.push(w);
          }
      }
      for (int v = 1; v <= n_; ++v) {
        if (dist[v] < 0) return std::nullopt;
        best = std::max(best, dist[v]);
      }
    }
    return best;
  }

  /// Every simple path from u to v with at most max_len edges, in
  /// lexicographic order of the vertex sequence.
  std::vector<Path> simple_paths(int u, int v, int max_len) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("simple_paths requires distinct endpoints");
    if (max_len < 1) throw std::invalid_argument("simple_paths requires max_len >= 1");
    std::vector<Path> out;
    std::vector<char> visited(n_ + 1, 0);
    Path cur;
    cur.vertices.push_back(u);
    visited[u] = 1;
    dfs_paths(u, v, max_len, visited, cur, out);
    return out;
  }

  /// All unordered non-adjacent distinct pairs, (i, j) with i < j, in lex order.
  std::vector<std::pair<int, int>> non_adjacent_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (!adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::string to_dimacs() const {
    std::ostringstream os;
    os << "p edge " << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) os << "e " << u << ' ' << v << '\n';
    return os.str();
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
  std::size_t cell(int u, int v) const { return static_cast<std::size_t>(u) * (n_ + 1) + v; }

  void check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }

  void dfs_paths(int at, int target, int max_len, std::vector<char>& visited, Path& cur,
                 std::vector<Path>& out) const {
    if (at == target) {
      out.push_back(cur);
      return;
    }
    if (cur.length() == max_len) return;
    for (int w : adj_[at]) {
      if (visited[w]) continue;
      visited[w] = 1;
      cur.vertices.push_back(w);
      cur.edge_indices.push_back(edge_index(at, w));
      dfs_paths(w, target, max_len, visited, cur, out);
      cur.vertices.pop_back();
      cur.edge_indices.pop_back();
      visited[w] = 0;
    }
  }

  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> edge_index_;
};

}  // namespace polygraph
