#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ekr {

// Permutation of {1..n}, stored 0-based: img_[i] is the image of point i.
// All I/O (cycle notation, one-line strings) is 1-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);                     // identity on n points
  explicit Perm(std::vector<int> images);   // 0-based images, must be a bijection

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  // (p*q)(i) = p(q(i))
  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  Perm conjugate_by(const Perm& g) const;   // g * this * g^-1

  bool is_identity() const;
  int fixed_points() const;
  bool is_derangement() const { return fixed_points() == 0; }
  bool even() const;
  int order() const;

  // Cycle lengths sorted descending, fixed points included as 1s.
  std::vector<int> cycle_type() const;

  // Restriction to points the permutation maps within [0..m): caller must
  // guarantee closure (used to drop fixed tail points).
  Perm restricted(int m) const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm& o) const { return img_ <=> o.img_; }

  std::string one_line() const;       // e.g. [2,3,1]
  std::string cycles() const;         // e.g. (1,2,3)
  std::string key() const;            // packed bytes, for hashing

  // Parses disjoint-cycle notation, e.g. "(1,2,3)(4,5)"; whitespace ignored.
  static Perm parse_cycles(int n, const std::string& text);

 private:
  std::vector<int> img_;
};

}  // namespace ekr
