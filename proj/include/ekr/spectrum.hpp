#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekr/quadratic.hpp"

namespace ekr {

struct SpectrumEntry {
  QuadraticValue value;     // meaningful when exact
  long long multiplicity = 0;
  bool exact = true;
  double approx = 0.0;      // always set

  double as_double() const { return exact ? value.to_double() : approx; }
};

// Eigenvalue/multiplicity list, sorted by descending value.
class Spectrum {
 public:
  std::vector<SpectrumEntry> entries;

  long long total() const;
  void sort_descending();
  const SpectrumEntry& least() const { return entries.back(); }
  const SpectrumEntry& largest() const { return entries.front(); }

  // multiplicity of an exact value (0 if absent)
  long long multiplicity_of(const QuadraticValue& v) const;

  bool all_exact() const;
  bool all_integer() const;

  // exact trace (sum value*mult); requires all_exact
  QuadraticValue trace() const;

  // multiset equality on entries, requiring both sides exact
  bool same_as(const Spectrum& other) const;

  // spectrum symmetric about the origin (bipartiteness witness)
  bool symmetric_about_origin() const;

  std::string str() const;
};

}  // namespace ekr
