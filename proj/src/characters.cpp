#include "ekr/characters.hpp"

#include <cassert>
#include <unordered_map>

#include "ekr/errors.hpp"

namespace ekr {

namespace {

struct MnCache {
  std::unordered_map<std::string, long long> memo;
};

long long mn_rec(const Partition& lambda, const std::vector<int>& rho, size_t pos,
                 MnCache& cache) {
  if (pos == rho.size()) {
    assert(lambda.empty());
    return 1;
  }
  std::string k = lambda.key();
  k.push_back('\x7f');
  for (size_t i = pos; i < rho.size(); ++i) k.push_back(static_cast<char>(rho[i]));
  auto it = cache.memo.find(k);
  if (it != cache.memo.end()) return it->second;
  long long total = 0;
  for (const SkewHookRemoval& h : skew_hooks(lambda, rho[pos])) {
    long long term = mn_rec(h.remainder, rho, pos + 1, cache);
    total += (h.height_minus_one % 2 == 0) ? term : -term;
  }
  cache.memo.emplace(std::move(k), total);
  return total;
}

MnCache& tls_cache() {
  thread_local MnCache cache;
  return cache;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.n() != rho.n())
    throw InvalidParameter("mn_character: lambda and rho must partition the same n");
  return mn_rec(lambda, rho.parts(), 0, tls_cache());
}

long long dimension_ll(const Partition& lambda) {
  int128 d = dimension(lambda);
  assert(d <= (int128)0x7fffffffffffffffLL);
  return (long long)d;
}

std::vector<Partition> derangement_cycle_types(int n) {
  std::vector<Partition> out;
  for (const Partition& rho : partitions_of(n)) {
    if (rho.rows() == 0 || rho.part(rho.rows() - 1) >= 2) {
      if (n > 0 && rho.rows() > 0) out.push_back(rho);
    }
  }
  return out;
}

std::vector<CharBoundViolation> conjecture_7_7_scan(int n) {
  if (n < 5) throw InvalidParameter("conjecture_7_7_scan: n must be >= 5");
  std::vector<CharBoundViolation> violations;
  Partition all_twos;
  if (n % 2 == 0) all_twos = Partition(std::vector<int>(n / 2, 2));
  std::vector<Partition> lambdas = partitions_of(n);
  Partition triv(std::vector<int>{n});
  Partition sgn(std::vector<int>(n, 1));
  Partition standard(std::vector<int>{n - 1, 1});
  // the sign-twisted standard [2,1^(n-2)] sits exactly at the bound
  // (|chi| = dim/(n-1) on every derangement class), so it is excluded along
  // with the standard partition
  Partition standard_t = standard.transpose();
  for (const Partition& rho : derangement_cycle_types(n)) {
    if (n % 2 == 0 && rho == all_twos) continue;
    for (const Partition& lambda : lambdas) {
      if (lambda == triv || lambda == sgn || lambda == standard || lambda == standard_t)
        continue;
      long long chi = mn_character(lambda, rho);
      int128 dim = dimension(lambda);
      // |chi| < dim/(n-1)  <=>  |chi| * (n-1) < dim
      int128 lhs = (int128)(chi < 0 ? -chi : chi) * (n - 1);
      if (!(lhs < dim)) violations.push_back({lambda, rho, chi, dim});
    }
  }
  return violations;
}

}  // namespace ekr
