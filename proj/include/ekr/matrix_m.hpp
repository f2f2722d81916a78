#pragma once

#include <vector>

#include "ekr/exact_rank.hpp"
#include "ekr/graph.hpp"
#include "ekr/perm_group.hpp"

namespace ekr {

// The derangement-by-pair incidence block: rows are the elements of the class
// union C (canonical order), columns the ordered pairs (i,j), i != j, from
// [n-1] in lexicographic order; entry 1 iff the row permutation maps i to j.
IntMatrix build_matrix_M(const PermGroup& g, const std::vector<int>& class_ids);

// Same rows, but restricted to an explicit element list (canonical order kept).
IntMatrix build_matrix_M_rows(const PermGroup& g, const std::vector<int>& row_elements);

// a*I + b*A(X_n) as an integer matrix on the pairs-graph vertex order.
IntMatrix pairs_gram(int n, long long a, long long b);

// The Lemma 6.1 matrix L for a transitive group: columns v_{i,j} for
// i,j in [n-1] (lex), rows all group elements.
IntMatrix build_matrix_L(const PermGroup& g);

// The full |G| x n^2 matrix H (columns v_{i,j}, all i,j in [n]) and H-bar with
// the (i,n), (n,j) columns for i,j in [n-1] deleted.
IntMatrix build_matrix_H(const PermGroup& g);
IntMatrix build_matrix_H_bar(const PermGroup& g);

}  // namespace ekr
