#pragma once

#include <string>
#include <vector>

#include "ekr/perm.hpp"
#include "ekr/perm_group.hpp"
#include "ekr/spectrum.hpp"

namespace ekr {

// ---- basic families --------------------------------------------------------

PermGroup cyclic_group(const Perm& sigma);
PermGroup dihedral_group(int n);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);

// Z_p : Z_k <= AGL(1,p) acting on p points, k | p-1 (Frobenius for k > 1).
PermGroup frobenius_affine(int p, int k);

// Full one-dimensional affine group AGL(1,q) on q points.
PermGroup agl1(int q);

// ---- projective families over F_q ------------------------------------------

PermGroup psl2(int q);                  // degree q+1
PermGroup pgl2(int q);                  // degree q+1
PermGroup psl2_ext_frobenius(int q);    // PSL(2,q) extended by z -> z^p
PermGroup pgl2_ext_frobenius(int q);    // PGL(2,q) extended by z -> z^p
PermGroup psl3_2_on_7();                // PSL(3,2) on the Fano plane
PermGroup psl3_4_on_21();               // PSL(3,4) = M21

// ---- affine groups over small vector spaces --------------------------------

PermGroup agl3_2();                     // AGL(3,2) on 8 points
PermGroup agl2_3();                     // AGL(2,3) on 9 points
PermGroup z3z3_q8();                    // (Z3 x Z3) : Q8 on 9 points

// ---- Mathieu groups ---------------------------------------------------------

PermGroup mathieu(int n);               // n in {10, 11, 12, 20, 21, 22}
PermGroup m11_on_12();                  // exceptional 12-point action

// PSL(2,11) in its exceptional action on 11 points (cosets of an A5).
PermGroup psl2_11_on_11();

// ---- products ---------------------------------------------------------------

PermGroup external_product(const std::vector<PermGroup>& factors);
PermGroup internal_product(const std::vector<PermGroup>& factors);  // disjoint blocks
PermGroup young_subgroup(const std::vector<int>& lambda);
PermGroup wreath_product(const PermGroup& g, const PermGroup& h);   // on [m] x [n]

// ---- derived constructions ---------------------------------------------------

// Action of g on the right cosets of the subgroup generated by `subgroup`
// elements (given as indices into g); degree = index.
PermGroup coset_action(const PermGroup& g, const std::vector<int>& subgroup_indices);

// Stabilizer of 1-based point x, restricted to the remaining points (which it
// must permute); the point is dropped and higher points shift down.
PermGroup point_stabilizer_action(const PermGroup& g, int x);

// ---- closed forms and structure checks ---------------------------------------

// Spectrum of the derangement graph of PSL(2,q) per the four-eigenvalue
// closed form (parity split).
Spectrum psl2_spectrum_closed_form(int q);

struct FrobeniusEvidence {
  long long component_count = 0;    // must be |H|
  bool components_complete = true;  // each component a K_n
  bool spectrum_matches = true;     // {n-1: |H|, -1: |H|(n-1)}
  bool ekr = false;
  bool strict = false;              // iff |H| == 2 (by brute force)
};

FrobeniusEvidence frobenius_structure_check(const PermGroup& g);

}  // namespace ekr
