#include "ekr/bounds.hpp"

#include "ekr/errors.hpp"

namespace ekr {

Rational ratio_bound(long long n_vertices, long long k_valency, const Rational& tau) {
  if (!(tau < Rational(0))) throw InvalidParameter("ratio bound needs tau < 0");
  // n / (1 - k/tau) = n * tau / (tau - k)
  return (Rational(n_vertices) * tau) / (tau - Rational(k_valency));
}

bool ratio_equality_witness(const Graph& g, const std::vector<int>& s, const Rational& tau) {
  long long n = g.vertex_count();
  long long size = (long long)s.size();
  std::vector<char> in_s(n, 0);
  for (int v : s) in_s[v] = 1;
  // check n * (A v_S)_x - k-free formulation:
  //   (A v_S)_x - |S|/n * deg(x) == tau * (v_S_x - |S|/n)   for all x
  // cross-multiplied by n and tau.den:
  for (long long x = 0; x < n; ++x) {
    long long av = 0;
    for (long long y = 0; y < n; ++y)
      if (in_s[y] && g.adjacent((int)x, (int)y)) ++av;
    long long deg = g.degree((int)x);
    // lhs = av - size*deg/n ; rhs = tau*(in_s[x] - size/n)
    // multiply both by n*tau.den:
    long long lhs = (av * n - size * deg) * tau.den();
    long long rhs = tau.num() * (((long long)in_s[x]) * n - size);
    if (lhs != rhs) return false;
  }
  return true;
}

Rational clique_cover_lower_bound(long long k_valency, long long w) {
  if (w < 2) throw InvalidParameter("clique size must be >= 2");
  return Rational(-k_valency, w - 1);
}

CliqueCocliqueCheck clique_coclique_check(long long clique_size, long long coclique_size,
                                          long long vertex_count) {
  CliqueCocliqueCheck r;
  long long prod = clique_size * coclique_size;
  r.holds = prod <= vertex_count;
  r.equality = prod == vertex_count;
  return r;
}

}  // namespace ekr
