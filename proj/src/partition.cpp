#include "ekr/partition.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "ekr/errors.hpp"

namespace ekr {

std::string int128_str(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  std::string s;
  while (u) {
    s.push_back(char('0' + (int)(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidParameter("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw InvalidParameter("partition parts must be weakly decreasing");
  }
}

int Partition::n() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> t(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

bool Partition::is_hook() const {
  if (rows() < 1 || parts_[0] < 2) return false;
  for (int i = 1; i < rows(); ++i)
    if (parts_[i] != 1) return false;
  return true;
}

bool Partition::is_near_hook() const {
  if (rows() < 2 || parts_[0] < 2 || parts_[1] != 2) return false;
  for (int i = 2; i < rows(); ++i)
    if (parts_[i] != 1) return false;
  return true;
}

bool Partition::is_two_layer_hook() const {
  // k >= 3, lambda_2 + lambda^_2 >= 5, lambda_3 <= 2, and equal first-row /
  // first-column overhangs (nonzero).
  if (rows() < 3) return false;
  Partition t = transpose();
  if (parts_[1] + t.part(1) < 5) return false;
  if (parts_[2] > 2) return false;
  int s = parts_[0] - parts_[1];
  int u = t.part(0) - t.part(1);
  return s == u && s > 0;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

std::string Partition::key() const {
  std::string s;
  s.reserve(parts_.size());
  for (int p : parts_) s.push_back(static_cast<char>(p));
  return s;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidParameter("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

long long partition_count(int n) {
  // Euler pentagonal-number recurrence
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long s = 0;
    for (int k = 1;; ++k) {
      long long g1 = (long long)k * (3 * k - 1) / 2;
      long long g2 = (long long)k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      long long sgn = (k % 2) ? 1 : -1;
      if (g1 <= m) s += sgn * p[m - g1];
      if (g2 <= m) s += sgn * p[m - g2];
    }
    p[m] = s;
  }
  return p[n];
}

int128 class_size(const Partition& rho) {
  int n = rho.n();
  int128 fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  // centralizer order: prod_i i^{m_i} * m_i!
  int128 centralizer = 1;
  int i = 0;
  while (i < rho.rows()) {
    int j = i;
    while (j < rho.rows() && rho.part(j) == rho.part(i)) ++j;
    int mult = j - i;
    for (int t = 0; t < mult; ++t) centralizer *= rho.part(i);
    for (int t = 2; t <= mult; ++t) centralizer *= t;
    i = j;
  }
  assert(fact % centralizer == 0);
  return fact / centralizer;
}

int sign_of_class(const Partition& rho) {
  return ((rho.n() - rho.rows()) % 2 == 0) ? 1 : -1;
}

std::vector<SkewHookRemoval> skew_hooks(const Partition& lambda, int m) {
  // beta-set formulation: B = { lambda_i + (k - 1 - i) }, removing a strip of
  // length m means replacing some b in B by b - m (when b - m is free).
  if (m < 1) throw InvalidParameter("skew hook length must be >= 1");
  std::vector<SkewHookRemoval> out;
  int k = lambda.rows();
  if (k == 0) return out;
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = lambda.part(i) + (k - 1 - i);
  std::vector<char> in_beta(beta[0] + 1, 0);
  for (int b : beta) in_beta[b] = 1;
  for (int i = 0; i < k; ++i) {
    int b = beta[i];
    int t = b - m;
    if (t < 0 || in_beta[t]) continue;
    // height-1 = number of beta entries strictly between t and b
    int rows_crossed = 0;
    for (int j = 0; j < k; ++j)
      if (beta[j] > t && beta[j] < b) ++rows_crossed;
    std::vector<int> nb = beta;
    nb[i] = t;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts;
    for (int j = 0; j < k; ++j) {
      int part = nb[j] - (k - 1 - j);
      if (part > 0) parts.push_back(part);
    }
    out.push_back({Partition(std::move(parts)), rows_crossed});
  }
  return out;
}

int128 hook_length_product(const Partition& lambda) {
  int k = lambda.rows();
  Partition t = lambda.transpose();
  int128 prod = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < lambda.part(i); ++j) {
      int arm = lambda.part(i) - j - 1;
      int leg = t.part(j) - i - 1;
      prod *= (arm + leg + 1);
    }
  return prod;
}

int128 dimension(const Partition& lambda) {
  int n = lambda.n();
  int128 fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  int128 hl = hook_length_product(lambda);
  assert(hl != 0 && fact % hl == 0);
  return fact / hl;
}

}  // namespace ekr
