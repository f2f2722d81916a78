#pragma once

#include <vector>

#include "ekr/alt_characters.hpp"
#include "ekr/partition.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

// Exact spectrum of the normal Cayley graph Gamma(Sym(n); union of classes),
// classes given by cycle types: eta_lambda = sum_c |c| chi^lambda(c) / dim,
// multiplicity dim^2. All eigenvalues are integers (asserted).
Spectrum sym_cayley_spectrum(int n, const std::vector<Partition>& cycle_types);

// Exact spectrum of Gamma(Alt(n); union of Alt-classes). Split halves carry
// quadratic values; multiplicities are (chi(id))^2 per Alt-irreducible.
Spectrum alt_cayley_spectrum(int n, const std::vector<AltClass>& classes);

// All conjugacy classes of Alt(n) as AltClass descriptors (split pairs appear
// as two entries with half 0 and 1), identity class excluded on request.
std::vector<AltClass> alt_classes(int n, bool include_identity = false);

// Alt(n) derangement classes.
std::vector<AltClass> alt_derangement_classes(int n);

// eta for one Sym(n) irreducible over a class union (exact integer).
long long sym_eigenvalue(const Partition& lambda, const std::vector<Partition>& cycle_types);

}  // namespace ekr
