#include "ekr/cayley.hpp"

#include <algorithm>
#include <set>

#include "ekr/errors.hpp"

namespace ekr {

ConnectionSet ConnectionSet::from_elements(const PermGroup& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  ConnectionSet s;
  s.members = std::move(members);
  std::set<int> in(s.members.begin(), s.members.end());
  int id = g.identity_index();
  for (int e : s.members) {
    if (e == id) throw InvalidConnectionSet("connection set contains the identity");
    if (!in.count(g.inverse_index(e)))
      throw InvalidConnectionSet("connection set not closed under inversion");
  }
  s.normal = true;
  for (int e : s.members) {
    for (const Perm& gen : g.generators()) {
      int conj = g.index_of(g.element(e).conjugate_by(gen));
      if (!in.count(conj)) {
        s.normal = false;
        break;
      }
    }
    if (!s.normal) break;
  }
  return s;
}

ConnectionSet ConnectionSet::from_classes(const PermGroup& g, const std::vector<int>& class_ids) {
  std::vector<int> members;
  const auto& classes = g.conjugacy_classes();
  for (int cid : class_ids)
    members.insert(members.end(), classes[cid].members.begin(), classes[cid].members.end());
  ConnectionSet s = from_elements(g, std::move(members));
  return s;
}

Graph cayley_graph(const PermGroup& g, const ConnectionSet& s) {
  long long n = g.order();
  Graph graph((int)n);
  // neighbors of vertex h: { s*h } since g h^-1 in S  <=>  g = s h
  for (long long h = 0; h < n; ++h) {
    for (int e : s.members) {
      int nb = g.multiply(e, (int)h);
      if (nb > h) graph.add_edge((int)h, nb);
    }
  }
  graph.labels.reserve(n);
  for (long long i = 0; i < n; ++i) graph.labels.push_back(g.element((int)i).cycles());
  return graph;
}

Graph derangement_graph(const PermGroup& g) {
  return cayley_graph(g, ConnectionSet::from_elements(g, g.derangement_indices()));
}

Graph derangement_graph_wrt(const PermGroup& g, const std::vector<int>& class_ids) {
  const auto& classes = g.conjugacy_classes();
  for (int cid : class_ids)
    if (!classes[cid].is_derangement_class)
      throw NotDerangementClass("class " + std::to_string(cid) + " has fixed points");
  return cayley_graph(g, ConnectionSet::from_classes(g, class_ids));
}

QuotientCayley quotient_cayley(const PermGroup& g, const std::vector<int>& normal_subgroup,
                               const ConnectionSet& s) {
  long long n = g.order();
  std::set<int> nset(normal_subgroup.begin(), normal_subgroup.end());
  if (!nset.count(g.identity_index())) throw NotNormal("subgroup must contain the identity");
  // verify subgroup + normality by conjugation closure
  for (int a : normal_subgroup) {
    for (int b : normal_subgroup)
      if (!nset.count(g.multiply(a, b))) throw NotNormal("set is not a subgroup");
    for (const Perm& gen : g.generators())
      if (!nset.count(g.index_of(g.element(a).conjugate_by(gen))))
        throw NotNormal("subgroup is not normal");
  }
  for (int e : s.members)
    if (nset.count(e)) throw IntersectsConnectionSet("N meets the connection set");

  QuotientCayley q;
  // cosets via N*x orbits; coset of identity gets id 0
  std::vector<int> coset(n, -1);
  int next_id = 0;
  for (long long x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = next_id++;
    for (int a : normal_subgroup) coset[g.multiply(a, (int)x)] = id;
  }
  q.coset_of = coset;
  q.coset_count = next_id;
  std::set<int> conn_cosets;
  for (int e : s.members) conn_cosets.insert(coset[e]);
  q.connection_size = (long long)conn_cosets.size();
  Graph graph(next_id);
  // adjacency: xN ~ yN iff x y^-1 N in S/N; equivalently coset(x * y^-1) marked
  std::vector<char> conn_mark(next_id, 0);
  for (int c : conn_cosets) conn_mark[c] = 1;
  for (long long x = 0; x < n; ++x)
    for (int e : s.members) {
      int y = g.multiply(e, (int)x);
      int cx = coset[x], cy = coset[y];
      if (cx != cy && cx < cy && !graph.adjacent(cx, cy)) graph.add_edge(cx, cy);
    }
  q.graph = std::move(graph);
  // degree preserving iff N avoids s t^-1 for distinct s,t in S
  q.degree_preserving = true;
  for (int a : s.members) {
    for (int b : s.members) {
      if (a == b) continue;
      if (nset.count(g.multiply(a, g.inverse_index(b)))) {
        q.degree_preserving = false;
        break;
      }
    }
    if (!q.degree_preserving) break;
  }
  return q;
}

}  // namespace ekr
