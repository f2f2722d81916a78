#include "ekr/alt_characters.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "ekr/characters.hpp"
#include "ekr/errors.hpp"

namespace ekr {

bool class_splits(const Partition& cycle_type) {
  std::set<int> seen;
  for (int len : cycle_type.parts()) {
    if (len % 2 == 0) return false;
    if (!seen.insert(len).second) return false;
  }
  return true;
}

int128 alt_class_size(const AltClass& c) {
  int128 full = class_size(c.cycle_type);
  if (c.split) {
    assert(full % 2 == 0);
    return full / 2;
  }
  return full;
}

Partition split_class_partition(const std::vector<int>& odd_lengths) {
  int r = (int)odd_lengths.size();
  if (r == 0) throw InvalidSplitClass("empty cycle length list");
  for (int i = 0; i < r; ++i) {
    if (odd_lengths[i] % 2 == 0) throw InvalidSplitClass("cycle lengths must be odd");
    if (i && odd_lengths[i] >= odd_lengths[i - 1])
      throw InvalidSplitClass("cycle lengths must be strictly decreasing");
  }
  // principal hooks: q_i = 2*a_i + 1 with arm a_i = leg l_i; build the diagram
  // from its diagonal hooks.
  std::vector<int> arm(r);
  for (int i = 0; i < r; ++i) {
    arm[i] = (odd_lengths[i] - 1) / 2;
    if (i && arm[i] >= arm[i - 1]) throw InvalidSplitClass("hooks do not nest");
  }
  int total_rows = arm[0] + 1;
  std::vector<int> parts(total_rows, 0);
  for (int i = 0; i < r; ++i) {
    parts[i] = (i + 1) + arm[i];        // row i: diagonal cell + arm
    for (int row = i + 1; row <= i + arm[i]; ++row) parts[row] += 1;  // leg cells
  }
  // rows i in [r, ...) accumulated only leg contributions; also rows between
  // r-1 and legs. Validate the result.
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw InvalidSplitClass("lengths do not form a partition");
  Partition lambda(parts);
  int n = 0;
  for (int q : odd_lengths) n += q;
  if (lambda.n() != n || !lambda.is_symmetric())
    throw InvalidSplitClass("resulting partition is not symmetric");
  return lambda;
}

int128 AltCharacter::dim() const {
  int128 d = dimension(lambda);
  if (symmetric_half) {
    assert(d % 2 == 0);
    return d / 2;
  }
  return d;
}

std::vector<AltCharacter> alt_irreducibles(int n) {
  std::vector<AltCharacter> out;
  for (const Partition& lambda : partitions_of(n)) {
    Partition t = lambda.transpose();
    if (lambda == t) {
      out.push_back({lambda, true, 0});
      out.push_back({lambda, true, 1});
    } else if (lambda.parts() < t.parts()) {
      // keep one representative of each {lambda, transpose} pair
      out.push_back({lambda, false, 0});
    }
  }
  return out;
}

std::pair<QuadraticValue, QuadraticValue> split_character_pair(const Partition& lambda) {
  if (!lambda.is_symmetric()) throw InvalidSplitClass("lambda must be symmetric");
  // cycle lengths q_i of the corresponding split class
  Partition t = lambda.transpose();
  std::vector<int> q;
  for (int i = 0; i < lambda.rows(); ++i) {
    int arm = lambda.part(i) - (i + 1);
    if (arm < 0) break;
    q.push_back(2 * arm + 1);
  }
  int r = (int)q.size();
  int n = lambda.n();
  assert((n - r) % 2 == 0);
  int m = (n - r) / 2;
  long long prod = 1;
  for (int qi : q) prod *= qi;
  long long sign = (m % 2 == 0) ? 1 : -1;
  // x, y = (sign +- sqrt(sign * prod)) / 2
  QuadraticValue x(Rational(sign, 2), Rational(1, 2), sign * prod);
  QuadraticValue y(Rational(sign, 2), Rational(-1, 2), sign * prod);
  return {x, y};
}

QuadraticValue alt_character(const AltCharacter& chi, const AltClass& c) {
  long long full = mn_character(chi.lambda, c.cycle_type);
  if (!chi.symmetric_half) {
    // restriction of a non-symmetric S^lambda: same value on both halves
    return QuadraticValue(Rational(full));
  }
  if (!c.split) return QuadraticValue(Rational(full, 2));
  Partition corresponding = split_class_partition(c.cycle_type.parts());
  if (corresponding != chi.lambda) return QuadraticValue(Rational(full, 2));
  auto [x, y] = split_character_pair(chi.lambda);
  // chi'(c') = chi''(c'') = x and chi'(c'') = chi''(c') = y
  bool same = (chi.which == c.half);
  return same ? x : y;
}

}  // namespace ekr
