#pragma once

#include "ekr/graph.hpp"
#include "ekr/quadratic.hpp"

namespace ekr {

// Ratio bound n / (1 - k/tau) for independent sets in a k-regular graph on n
// vertices with least eigenvalue tau < 0; exact rational.
Rational ratio_bound(long long n_vertices, long long k_valency, const Rational& tau);

// Equality case of the ratio bound: A (v_S - |S|/n 1) = tau (v_S - |S|/n 1),
// verified exactly over Q.
bool ratio_equality_witness(const Graph& g, const std::vector<int>& independent_set,
                            const Rational& tau);

// Clique-cover lower bound on the least eigenvalue: tau >= -k/(w-1) when every
// edge lies in equally many w-cliques.
Rational clique_cover_lower_bound(long long k_valency, long long w);

struct CliqueCocliqueCheck {
  bool holds = false;     // |C||S| <= v
  bool equality = false;  // |C||S| == v
};

CliqueCocliqueCheck clique_coclique_check(long long clique_size, long long coclique_size,
                                          long long vertex_count);

}  // namespace ekr
