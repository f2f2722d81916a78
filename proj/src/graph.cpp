#include "ekr/graph.hpp"

#include <bit>
#include <deque>
#include <sstream>

#include "ekr/errors.hpp"

namespace ekr {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), adj_((size_t)n * words_, 0) {}

void Graph::add_edge(int u, int v) {
  if (u == v) throw InvalidParameter("self-loop");
  adj_[(size_t)u * words_ + (v >> 6)] |= 1ull << (v & 63);
  adj_[(size_t)v * words_ + (u >> 6)] |= 1ull << (u & 63);
}

int Graph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(adj_[(size_t)v * words_ + w]);
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

bool Graph::is_regular(int* valency) const {
  if (n_ == 0) return true;
  int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return false;
  if (valency) *valency = d;
  return true;
}

std::string Graph::to_dot() const {
  std::ostringstream os;
  os << "graph {\n";
  for (int v = 0; v < n_; ++v) {
    os << "  v" << v;
    if (!labels.empty()) os << " [label=\"" << labels[v] << "\"]";
    os << ";\n";
  }
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string Graph::to_adjacency_json() const {
  std::ostringstream os;
  os << "{\"vertex_count\":" << n_ << ",\"adjacency\":[";
  for (int u = 0; u < n_; ++u) {
    if (u) os << ',';
    os << '[';
    bool first = true;
    for (int v = 0; v < n_; ++v)
      if (adjacent(u, v)) {
        if (!first) os << ',';
        os << v;
        first = false;
      }
    os << ']';
  }
  os << "]";
  if (!labels.empty()) {
    os << ",\"labels\":[";
    for (int v = 0; v < n_; ++v) {
      if (v) os << ',';
      os << '"' << labels[v] << '"';
    }
    os << ']';
  }
  os << "}";
  return os.str();
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v = u + 1; v < a.vertex_count(); ++v)
      if (a.adjacent(u, v)) g.add_edge(u, v);
  int off = a.vertex_count();
  for (int u = 0; u < b.vertex_count(); ++u)
    for (int v = u + 1; v < b.vertex_count(); ++v)
      if (b.adjacent(u, v)) g.add_edge(off + u, off + v);
  return g;
}

Graph direct_product(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  Graph g(na * nb);
  for (int x1 = 0; x1 < na; ++x1)
    for (int x2 = 0; x2 < na; ++x2) {
      if (!a.adjacent(x1, x2)) continue;
      for (int y1 = 0; y1 < nb; ++y1)
        for (int y2 = 0; y2 < nb; ++y2)
          if (b.adjacent(y1, y2) && x1 * nb + y1 < x2 * nb + y2)
            g.add_edge(x1 * nb + y1, x2 * nb + y2);
    }
  return g;
}

Graph lexicographic_product(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  Graph g(na * nb);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          int u = x1 * nb + y1, v = x2 * nb + y2;
          if (u >= v) continue;
          if (a.adjacent(x1, x2) || (x1 == x2 && b.adjacent(y1, y2))) g.add_edge(u, v);
        }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);        // outer cycle
    g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    g.add_edge(v, 5 + v);
  }
  return g;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = (int)out.size();
    std::vector<int> members{s};
    comp[s] = id;
    std::deque<int> todo{s};
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop_front();
      for (int v = 0; v < n; ++v)
        if (g.adjacent(u, v) && comp[v] < 0) {
          comp[v] = id;
          members.push_back(v);
          todo.push_back(v);
        }
    }
    out.push_back(std::move(members));
  }
  return out;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> todo{s};
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop_front();
      for (int v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          todo.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<std::pair<int, int>> pairs_graph_vertices(int n) {
  std::vector<std::pair<int, int>> verts;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (i != j) verts.push_back({i, j});
  return verts;
}

Graph pairs_graph(int n) {
  if (n <= 3) throw InvalidParameter("pairs graph needs n > 3");
  auto verts = pairs_graph_vertices(n);
  Graph g((int)verts.size());
  for (size_t u = 0; u < verts.size(); ++u)
    for (size_t v = u + 1; v < verts.size(); ++v) {
      auto [i, j] = verts[u];
      auto [k, l] = verts[v];
      bool disjoint = i != k && i != l && j != k && j != l;
      bool chained = (i == l && j != k) || (i != l && j == k);
      if (disjoint || chained) g.add_edge((int)u, (int)v);
    }
  return g;
}

}  // namespace ekr
