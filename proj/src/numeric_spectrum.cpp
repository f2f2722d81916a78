#include "ekr/numeric_spectrum.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "ekr/errors.hpp"
#include "ekr/exact_rank.hpp"

namespace ekr {

long long nullity_mod_p(const Graph& g, long long lambda, uint64_t p) {
  long long n = g.vertex_count();
  long long next = 0;
  long long rank = rank_mod_p(
      [&](std::vector<long long>& row) {
        if (next >= n) return false;
        row.assign(n, 0);
        for (long long v = 0; v < n; ++v)
          if (g.adjacent((int)next, (int)v)) row[v] = 1;
        row[next] -= lambda;
        ++next;
        return true;
      },
      n, p);
  return n - rank;
}

Spectrum spectrum_numeric_certified(const Graph& g, const NumericSpectrumOptions& opt) {
  long long n = g.vertex_count();
  if (n > opt.vertex_cap) throw InvalidParameter("graph too large for numeric spectrum");
  Spectrum spec;
  if (n == 0) return spec;

  std::vector<double> a((size_t)n * n, 0.0);
  for (long long u = 0; u < n; ++u)
    for (long long v = 0; v < n; ++v)
      if (g.adjacent((int)u, (int)v)) a[(size_t)u * n + v] = 1.0;
  std::vector<double> w(n);
  int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', (int)n, a.data(), (int)n, w.data());
  if (info != 0) throw NumericAmbiguity("eigensolver failed");
  std::sort(w.begin(), w.end(), std::greater<double>());

  // cluster
  double scale = std::max(1.0, std::max(std::abs(w.front()), std::abs(w.back())));
  double ctol = opt.cluster_tol * scale * 100;
  struct Cluster {
    double value;
    long long mult;
  };
  std::vector<Cluster> clusters;
  for (double x : w) {
    if (!clusters.empty() && std::abs(clusters.back().value - x) <= ctol) {
      // running mean keeps the representative stable
      Cluster& c = clusters.back();
      c.value = (c.value * c.mult + x) / (c.mult + 1);
      ++c.mult;
    } else {
      clusters.push_back({x, 1});
    }
  }
  // sanity: clusters pairwise separated clearly beyond the snap tolerance
  for (size_t i = 1; i < clusters.size(); ++i)
    if (std::abs(clusters[i - 1].value - clusters[i].value) < 4 * opt.snap_tol)
      throw NumericAmbiguity("eigenvalue clusters not separable at tolerance");

  std::vector<int> handled(clusters.size(), 0);
  // integer candidates
  for (size_t i = 0; i < clusters.size(); ++i) {
    double r = std::round(clusters[i].value);
    if (std::abs(clusters[i].value - r) > opt.snap_tol) continue;
    long long lam = (long long)r;
    long long mult = clusters[i].mult;
    bool certified = false;
    if (n <= opt.nullity_cap) {
      certified = true;
      for (uint64_t p : rank_primes(3, opt.seed))
        if (nullity_mod_p(g, lam, p) != mult) {
          certified = false;
          break;
        }
      if (!certified)
        throw NumericAmbiguity("modular nullity disagrees with numeric multiplicity");
    } else {
      // Weyl separation certificate: dsyevd is backward stable, so computed
      // eigenvalues are within c*eps*||A|| of the true ones; the clusters are
      // separated far beyond that, which pins the multiplicities.
      double backward = 64 * std::numeric_limits<double>::epsilon() * scale * n;
      certified = backward < opt.snap_tol;
      if (!certified) throw NumericAmbiguity("separation certificate failed");
    }
    SpectrumEntry e;
    e.value = QuadraticValue(Rational(lam));
    e.multiplicity = mult;
    e.exact = true;
    e.approx = clusters[i].value;
    spec.entries.push_back(e);
    handled[i] = 1;
  }
  // quadratic pairs among the rest: x + y and x*y integral
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (handled[i]) continue;
    for (size_t j = i + 1; j < clusters.size(); ++j) {
      if (handled[j]) continue;
      double s = clusters[i].value + clusters[j].value;
      double pr = clusters[i].value * clusters[j].value;
      if (std::abs(s - std::round(s)) > opt.snap_tol) continue;
      if (std::abs(pr - std::round(pr)) > opt.snap_tol * scale) continue;
      long long si = (long long)std::round(s);
      long long pi = (long long)std::round(pr);
      long long disc = si * si - 4 * pi;
      if (disc <= 0) continue;
      // roots (si +- sqrt(disc)) / 2
      QuadraticValue hi(Rational(si, 2), Rational(1, 2), disc);
      QuadraticValue lo(Rational(si, 2), Rational(-1, 2), disc);
      if (hi.is_rational()) continue;  // perfect square: should have snapped
      SpectrumEntry ei{clusters[i].value > clusters[j].value ? hi : lo, clusters[i].mult, true,
                       clusters[i].value};
      SpectrumEntry ej{clusters[i].value > clusters[j].value ? lo : hi, clusters[j].mult, true,
                       clusters[j].value};
      spec.entries.push_back(ei);
      spec.entries.push_back(ej);
      handled[i] = handled[j] = 1;
      break;
    }
  }
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (handled[i]) continue;
    SpectrumEntry e;
    e.exact = false;
    e.approx = clusters[i].value;
    e.multiplicity = clusters[i].mult;
    spec.entries.push_back(e);
  }
  spec.sort_descending();
  return spec;
}

}  // namespace ekr
