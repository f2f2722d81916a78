#pragma once

#include "ekr/graph.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

struct NumericSpectrumOptions {
  double cluster_tol = 1e-9;    // relative clustering tolerance
  double snap_tol = 1e-6;       // integer snapping tolerance
  long long vertex_cap = 5100;  // refuse larger graphs
  long long nullity_cap = 1500; // modular nullity certification up to this size
  uint64_t seed = 12345;        // prime stream for modular nullity
};

// Floating eigenvalues of the adjacency matrix. Candidate integer eigenvalues
// (within snap_tol of an integer) are confirmed exactly: by modular nullity of
// A - lambda*I over >= 3 primes > 2^30 when the graph is small enough, else by
// a Weyl separation bound on the backward-stable eigensolve. Quadratic
// irrational pairs (x, y with integer x+y and x*y) are detected and made
// exact; anything else stays a certified float.
Spectrum spectrum_numeric_certified(const Graph& g, const NumericSpectrumOptions& opt = {});

// Nullity of (A - lambda*I) over GF(p); lambda integral.
long long nullity_mod_p(const Graph& g, long long lambda, uint64_t p);

}  // namespace ekr
