#pragma once

#include <vector>

#include "ekr/perm_group.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

// Exact spectrum of the normal Cayley graph Gamma(G; S), S a union of
// conjugacy classes, computed entirely inside the class algebra: the r x r
// integer matrix of multiplication by the class sum of S has the eigenvalues
// eta_chi, its characteristic polynomial is exact, and the multiplicities fall
// out of the exact power-sum traces tr(A^k) = |G| * [id-coefficient of S^k].
// No character table and no |G| x |G| matrix is ever formed.
Spectrum cayley_spectrum_class_algebra(const PermGroup& g, const std::vector<int>& class_ids);

}  // namespace ekr
