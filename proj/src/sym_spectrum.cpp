#include "ekr/sym_spectrum.hpp"

#include <cassert>

#include "ekr/characters.hpp"
#include "ekr/errors.hpp"

namespace ekr {

long long sym_eigenvalue(const Partition& lambda, const std::vector<Partition>& cycle_types) {
  int128 sum = 0;
  for (const Partition& rho : cycle_types)
    sum += class_size(rho) * (int128)mn_character(lambda, rho);
  int128 dim = dimension(lambda);
  assert(sum % dim == 0);  // normal Cayley eigenvalues on Sym(n) are integers
  int128 eta = sum / dim;
  assert(eta <= (int128)0x7fffffffffffffffLL && eta >= -(int128)0x7fffffffffffffffLL);
  return (long long)eta;
}

Spectrum sym_cayley_spectrum(int n, const std::vector<Partition>& cycle_types) {
  for (const Partition& rho : cycle_types) {
    if (rho.n() != n) throw InvalidParameter("cycle type does not partition n");
    bool identity = (rho.rows() == n);
    if (identity) throw InvalidConnectionSet("identity class in connection set");
  }
  Spectrum spec;
  for (const Partition& lambda : partitions_of(n)) {
    long long eta = sym_eigenvalue(lambda, cycle_types);
    int128 dim = dimension(lambda);
    int128 mult = dim * dim;
    assert(mult <= (int128)0x7fffffffffffffffLL);
    spec.entries.push_back(
        {QuadraticValue(Rational(eta)), (long long)mult, true, (double)eta});
  }
  spec.sort_descending();
  return spec;
}

std::vector<AltClass> alt_classes(int n, bool include_identity) {
  std::vector<AltClass> out;
  for (const Partition& rho : partitions_of(n)) {
    if (sign_of_class(rho) != 1) continue;  // odd classes are not in Alt(n)
    bool identity = (rho.rows() == n);
    if (identity && !include_identity) continue;
    if (class_splits(rho)) {
      out.push_back({rho, true, 0});
      out.push_back({rho, true, 1});
    } else {
      out.push_back({rho, false, 0});
    }
  }
  return out;
}

std::vector<AltClass> alt_derangement_classes(int n) {
  std::vector<AltClass> out;
  for (const AltClass& c : alt_classes(n)) {
    bool derangement = true;
    for (int part : c.cycle_type.parts())
      if (part == 1) derangement = false;
    if (derangement) out.push_back(c);
  }
  return out;
}

Spectrum alt_cayley_spectrum(int n, const std::vector<AltClass>& classes) {
  if (n < 3) throw InvalidParameter("alt_cayley_spectrum needs n >= 3");
  Spectrum spec;
  for (const AltCharacter& chi : alt_irreducibles(n)) {
    QuadraticValue sum(Rational(0));
    for (const AltClass& c : classes) {
      if (c.cycle_type.rows() == n) throw InvalidConnectionSet("identity class");
      if (sign_of_class(c.cycle_type) != 1)
        throw InvalidParameter("odd class is not an Alt(n) class");
      QuadraticValue val = alt_character(chi, c);
      int128 sz = alt_class_size(c);
      assert(sz <= (int128)0x7fffffffffffffffLL);
      sum = sum + val * QuadraticValue(Rational((long long)sz));
    }
    int128 d = chi.dim();
    assert(d <= (int128)0x7fffffffffffffffLL);
    long long dim = (long long)d;
    QuadraticValue eta = sum * QuadraticValue(Rational(1, dim));
    SpectrumEntry e;
    e.value = eta;
    e.multiplicity = dim * dim;
    e.exact = true;
    e.approx = eta.to_double();
    spec.entries.push_back(e);
  }
  spec.sort_descending();
  return spec;
}

}  // namespace ekr
