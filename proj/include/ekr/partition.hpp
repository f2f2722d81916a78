#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ekr {

using int128 = __int128;

std::string int128_str(int128 v);

// Weakly decreasing positive parts summing to n. The empty partition (n = 0)
// is allowed internally as the Murnaghan-Nakayama recursion base.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int n() const;
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i]; }  // 0-based row
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;
  bool is_symmetric() const { return *this == transpose(); }

  bool is_hook() const;        // [a, 1^b], a > 1
  bool is_near_hook() const;   // [a, 2, 1^b], a > 1
  bool is_two_layer_hook() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  std::string str() const;  // e.g. [5,3,3,2,1,1]
  std::string key() const;  // packed bytes for hashing

 private:
  std::vector<int> parts_;
};

// All partitions of n in reverse-lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions_of(int n);

// Number of partitions of n (Euler recurrence), for cross-checks.
long long partition_count(int n);

// Size of the Sym(n) conjugacy class with cycle type rho.
int128 class_size(const Partition& rho);

// sign of any permutation with cycle type rho: (-1)^(n - #parts)
int sign_of_class(const Partition& rho);

struct SkewHookRemoval {
  Partition remainder;     // partition of n - m
  int height_minus_one;    // r(mu): rows of the removed strip, minus one
};

// All ways to remove a connected boundary strip of length m from lambda.
std::vector<SkewHookRemoval> skew_hooks(const Partition& lambda, int m);

int128 hook_length_product(const Partition& lambda);
int128 dimension(const Partition& lambda);  // n! / hl(lambda), exact

}  // namespace ekr
