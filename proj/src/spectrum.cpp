#include "ekr/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "ekr/errors.hpp"

namespace ekr {

long long Spectrum::total() const {
  long long t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

void Spectrum::sort_descending() {
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return a.as_double() > b.as_double();
  });
}

long long Spectrum::multiplicity_of(const QuadraticValue& v) const {
  long long m = 0;
  for (const auto& e : entries)
    if (e.exact && e.value == v) m += e.multiplicity;
  return m;
}

bool Spectrum::all_exact() const {
  for (const auto& e : entries)
    if (!e.exact) return false;
  return true;
}

bool Spectrum::all_integer() const {
  for (const auto& e : entries)
    if (!e.exact || !e.value.is_integer()) return false;
  return true;
}

QuadraticValue Spectrum::trace() const {
  QuadraticValue t(Rational(0));
  for (const auto& e : entries) {
    if (!e.exact) throw NumericAmbiguity("trace of a non-exact spectrum");
    t = t + e.value * QuadraticValue(Rational(e.multiplicity));
  }
  return t;
}

bool Spectrum::same_as(const Spectrum& other) const {
  if (!all_exact() || !other.all_exact()) return false;
  auto norm = [](const Spectrum& s) {
    std::vector<std::pair<std::string, long long>> v;
    for (const auto& e : s.entries)
      if (e.multiplicity != 0) v.push_back({e.value.str(), e.multiplicity});
    std::sort(v.begin(), v.end());
    // merge equal values
    std::vector<std::pair<std::string, long long>> merged;
    for (auto& p : v) {
      if (!merged.empty() && merged.back().first == p.first)
        merged.back().second += p.second;
      else
        merged.push_back(p);
    }
    return merged;
  };
  return norm(*this) == norm(other);
}

bool Spectrum::symmetric_about_origin() const {
  for (const auto& e : entries) {
    if (!e.exact) throw NumericAmbiguity("symmetry test on non-exact spectrum");
    if (multiplicity_of(e.value) != multiplicity_of(-e.value)) return false;
  }
  return true;
}

std::string Spectrum::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    const auto& e = entries[i];
    if (e.exact)
      os << e.value.str();
    else
      os << "~" << e.approx;
    os << ": " << e.multiplicity;
  }
  os << "}";
  return os.str();
}

}  // namespace ekr
