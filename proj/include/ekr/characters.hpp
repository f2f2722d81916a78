#pragma once

#include <vector>

#include "ekr/partition.hpp"

namespace ekr {

// Exact Sym(n) irreducible character value chi^lambda at the class of cycle
// type rho, by the Murnaghan-Nakayama recursion (largest cycle removed first,
// memoized per thread).
long long mn_character(const Partition& lambda, const Partition& rho);

// chi^lambda(id) clipped to long long; asserts it fits.
long long dimension_ll(const Partition& lambda);

struct CharBoundViolation {
  Partition lambda;
  Partition rho;
  long long value;      // chi^lambda(rho)
  int128 dim;           // chi^lambda(id)
};

// Tests |chi^lambda(sigma)| < chi^lambda(id)/(n-1) for every derangement
// cycle type rho != [2,2,...,2] and every lambda outside {[n],[1^n],[n-1,1]}.
// Returns all violations (empty expected for n >= 10).
std::vector<CharBoundViolation> conjecture_7_7_scan(int n);

// Derangement cycle types of Sym(n): partitions with no part equal to 1.
std::vector<Partition> derangement_cycle_types(int n);

}  // namespace ekr
