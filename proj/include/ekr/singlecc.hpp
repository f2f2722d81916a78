#pragma once

#include <vector>

#include "ekr/ekr_verify.hpp"
#include "ekr/partition.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

// Exact spectrum of Gamma_{n,m} = Gamma(Sym(n); m-cycles) via the closed
// skew-hook formula eta_lambda = (hl(lambda)/m) sum_mu (-1)^r(mu) / hl(mu),
// cross-checked against the generic Murnaghan-Nakayama path.
Spectrum gamma_nm_spectrum(int n, int m);

// eta for a single lambda by the skew-hook formula (exact integer).
long long gamma_nm_eigenvalue(const Partition& lambda, int m);

struct GammaNNFacts {
  long long least = 0;   // tau
  long long rank = 0;    // rank of the adjacency matrix, from the spectrum
};

// tau = -(n-2)! for odd n; rank = C(2n-2, n-1).
GammaNNFacts gamma_nn_least_and_rank(int n);

struct OddClassEvidence {
  long long alpha = 0;                  // n!/2
  bool bipartition_halves_maximum = false;
  bool only_maximum_sets_are_halves = false;  // exhaustive (small n)
};

// Thm 7.13 evidence for an odd class c of Sym(n): ratio bound meets n!/2, the
// two alternating halves achieve it, and (for n <= 5) exhaustive search finds
// no other maximum set.
OddClassEvidence odd_class_classification(int n, const Partition& c, bool exhaustive);

// Generalized module method for Alt(n) with respect to the n-cycle classes
// (n odd): ratio bound (n-1)!/2 with tau = -(n-2)!, unique-tau, and full rank
// of the n-cycle matrix M.
EkrReport alt_ncycle_strict_ekr(int n);

struct EvenOddDerangements {
  long long by_enumeration = 0;  // E(n) - O(n), only for n <= 9
  long long by_characters = 0;   // sign-weighted class-size sum
  long long closed_form = 0;     // (-1)^(n-1) (n-1)
};

EvenOddDerangements even_odd_derangement_difference(int n);

}  // namespace ekr
