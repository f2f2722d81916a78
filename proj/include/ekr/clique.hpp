#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ekr/graph.hpp"

namespace ekr {

struct IndependenceResult {
  int size = 0;                 // best independent-set size found
  std::vector<int> witness;     // one witness, sorted
  bool exhausted = true;        // true: search completed, size is exact alpha
  long long nodes = 0;          // search-tree nodes spent
};

constexpr long long kDefaultSearchBudget = 100000000;  // 1e8 nodes

// Exact maximum independent set by branch and bound (greedy-coloring bound on
// the complement clique problem). If the node budget runs out, returns the
// best found with exhausted = false.
IndependenceResult max_independent_set(const Graph& g, long long budget = kDefaultSearchBudget);

// Clique of size >= t if one is found within budget. absence_proven is set
// when the search ran to completion without finding one.
std::optional<std::vector<int>> find_clique_of_size(const Graph& g, int t,
                                                    long long budget = kDefaultSearchBudget,
                                                    bool* absence_proven = nullptr);

// Enumerates independent sets of size exactly `target` that contain all of
// `forced` (pass {} for none). The visitor gets each set sorted; returning
// false stops the enumeration. Returns true if the enumeration ran to
// completion within budget.
bool enumerate_independent_sets_of_size(const Graph& g, int target,
                                        const std::vector<int>& forced,
                                        const std::function<bool(const std::vector<int>&)>& visit,
                                        long long budget = kDefaultSearchBudget);

bool is_independent_set(const Graph& g, const std::vector<int>& s);
bool is_clique(const Graph& g, const std::vector<int>& s);

}  // namespace ekr
