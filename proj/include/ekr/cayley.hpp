#pragma once

#include <vector>

#include "ekr/graph.hpp"
#include "ekr/perm_group.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

// Connection set for a Cayley graph on g: element indices, no identity,
// closed under inversion; normal iff closed under conjugation.
struct ConnectionSet {
  std::vector<int> members;  // sorted element indices
  bool normal = false;

  static ConnectionSet from_elements(const PermGroup& g, std::vector<int> members);
  static ConnectionSet from_classes(const PermGroup& g, const std::vector<int>& class_ids);
};

// Vertices are group elements in canonical order; g ~ h iff g h^-1 in S.
Graph cayley_graph(const PermGroup& g, const ConnectionSet& s);

// Gamma_G: Cayley graph on the full derangement set.
Graph derangement_graph(const PermGroup& g);

// Gamma_G^C for a union of derangement classes.
Graph derangement_graph_wrt(const PermGroup& g, const std::vector<int>& class_ids);

struct QuotientCayley {
  Graph graph;                       // Cayley graph of G/N on coset classes
  std::vector<int> coset_of;         // element index -> coset id (0 = N)
  long long coset_count = 0;
  long long connection_size = 0;     // |S/N|
  bool degree_preserving = false;    // N avoids { s t^-1 : s != t in S }
};

// Quotient Cayley graph Gamma(G/N; S/N). N is given by element indices and is
// verified normal; throws if N meets S.
QuotientCayley quotient_cayley(const PermGroup& g, const std::vector<int>& normal_subgroup,
                               const ConnectionSet& s);

}  // namespace ekr
