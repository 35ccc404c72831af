#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace outerdom {

/// Bit-set over the vertex ids 0..n-1 of an owning graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet full(int universe);
  static VertexSet of(int universe, const std::vector<int>& members);

  int universe_size() const { return n_; }
  bool test(int v) const;
  void set(int v);
  void reset(int v);
  int count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  std::vector<int> elements() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
  void check(int v) const;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Invariants: no self-loops, no parallel edges, symmetric adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  const std::vector<int>& neighbors(int v) const;
  /// All edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Subgraph induced by `keep`; second element maps local id -> original id.
  std::pair<Graph, std::vector<int>> induced(const VertexSet& keep) const;
  /// Relabel: vertex v of this graph becomes new_of_old[v] in the result.
  Graph permuted(const std::vector<int>& new_of_old) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  void check_vertex(int v) const;
};

/// Undirected multigraph: no self-loops, per-pair multiplicities >= 1.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : n_(n) {}

  int n() const { return n_; }
  void add(int u, int v, int count = 1);
  int multiplicity(int u, int v) const;
  /// Number of edges counted with multiplicity.
  int edge_count() const;
  /// Number of distinct endpoint pairs (edges of the underlying simple graph).
  int distinct_edge_count() const { return static_cast<int>(mult_.size()); }
  int max_multiplicity() const;
  const std::map<std::pair<int, int>, int>& edge_multiplicities() const { return mult_; }

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, int> mult_;  // key (u, v) with u < v
};

/// Contract a connected vertex set P into a single vertex, keeping simple
/// graph semantics (no parallel edges, no self-loops). Vertices outside P
/// keep their relative order as ids 0..n-|P|-1; the merged vertex is last.
Graph contract_set(const Graph& g, const VertexSet& p);

// Small named graphs used as patterns and test fixtures.
Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
// Parsing rejects self-loops, duplicate edges, out-of-range endpoints and
// count mismatches.
Graph read_graph_text(std::istream& in);
void write_graph_text(const Graph& g, std::ostream& out);
Graph read_graph_file(const std::string& path);

}  // namespace outerdom
