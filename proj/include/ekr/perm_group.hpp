#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ekr/perm.hpp"

namespace ekr {

struct ConjugacyClass {
  int representative = -1;          // element index, minimal in canonical order
  std::vector<int> members;         // element indices, sorted
  std::vector<int> cycle_type;      // shared by all members
  bool is_derangement_class = false;
  long long size() const { return static_cast<long long>(members.size()); }
};

struct FrobeniusInfo {
  bool frobenius = false;
  long long kernel_size = 0;      // |K| = n
  long long complement_size = 0;  // |H| = |G|/n
};

// Finitely generated permutation group with a lazily enumerated element set.
// Elements are cached in canonical order (lexicographic on one-line images),
// so every index-valued result is deterministic.
class PermGroup {
 public:
  static constexpr long long kDefaultCap = 500000;

  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  // Breadth-first closure of the generators; throws CapExceeded past cap.
  const std::vector<Perm>& elements(long long cap = kDefaultCap) const;
  long long order(long long cap = kDefaultCap) const;

  const Perm& element(int idx) const { return elements()[idx]; }
  int index_of(const Perm& p) const;          // -1 if absent
  int inverse_index(int idx) const;
  int multiply(int a, int b) const;           // index of element(a)*element(b)
  int identity_index() const;

  const std::vector<ConjugacyClass>& conjugacy_classes() const;
  int class_of(int element_index) const;

  std::vector<int> derangement_indices() const;
  std::vector<int> derangement_class_ids() const;

  std::vector<std::vector<int>> point_orbits() const;
  bool is_transitive() const;
  int transitivity_degree(int max_k) const;

  std::vector<int> stabilizer(int x) const;              // 1-based point
  std::vector<int> coset_of_stabilizer(int i, int j) const;  // S_{i,j}, 1-based

  FrobeniusInfo frobenius_info() const;   // throws NotTransitive

  // Derived subgroup (element indices) and the index of G' in G.
  std::vector<int> derived_subgroup() const;

 private:
  void ensure_enumerated(long long cap) const;

  int degree_;
  std::vector<Perm> gens_;
  mutable std::vector<Perm> elems_;
  mutable std::unordered_map<std::string, int> index_;
  mutable std::vector<int> inverse_;
  mutable std::vector<ConjugacyClass> classes_;
  mutable std::vector<int> class_of_;
};

// Closure of an arbitrary element set (permutations of equal degree).
std::vector<Perm> group_closure(const std::vector<Perm>& gens, long long cap);

// Greedy small generating set for the subgroup formed by `elements`
// (which must be closed under the group operation).
std::vector<Perm> small_generating_set(const std::vector<Perm>& elements);

}  // namespace ekr
