#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ekr {

// Finite simple graph, adjacency kept as per-vertex bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (adj_[(size_t)u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  const uint64_t* row(int v) const { return adj_.data() + (size_t)v * words_; }

  int degree(int v) const;
  long long edge_count() const;
  bool is_regular(int* valency = nullptr) const;

  std::vector<std::string> labels;  // optional vertex labels

  std::string to_dot() const;
  std::string to_adjacency_json() const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> adj_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// (x1,y1) ~ (x2,y2)  iff  x1~x2 and y1~y2; adjacency matrix is the tensor
// product of the factors'.
Graph direct_product(const Graph& a, const Graph& b);

// (x1,y1) ~ (x2,y2)  iff  x1~x2, or x1=x2 and y1~y2.
Graph lexicographic_product(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();

std::vector<std::vector<int>> connected_components(const Graph& g);
std::optional<std::vector<int>> bipartition(const Graph& g);  // 2-coloring or nullopt

// Pairs graph X_n on ordered pairs (i,j), i != j, from [n-1], lexicographic
// vertex order; (i,j) ~ (k,l) iff the pairs are disjoint, or i=l xor j=k.
Graph pairs_graph(int n);
std::vector<std::pair<int, int>> pairs_graph_vertices(int n);  // 1-based pairs

}  // namespace ekr
