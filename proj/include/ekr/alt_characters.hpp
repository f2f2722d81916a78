#pragma once

#include <optional>
#include <vector>

#include "ekr/partition.hpp"
#include "ekr/quadratic.hpp"

namespace ekr {

// A conjugacy class of Alt(n), described by cycle type alone plus, for split
// classes, which half it is. The character layer never touches group elements.
struct AltClass {
  Partition cycle_type;
  bool split = false;   // all cycle lengths odd and distinct
  int half = 0;         // 0 = c', 1 = c'' (order fixed by canonical class reps)
};

// Does the Sym(n) class of this cycle type split in Alt(n)?
bool class_splits(const Partition& cycle_type);

// Size of the Alt(n) class: |c| for non-split classes, |c|/2 per split half.
int128 alt_class_size(const AltClass& c);

// The symmetric partition corresponding to a split class with odd distinct
// cycle lengths q1 > ... > qr (q_i = 2*lambda_i - (2i-1)).
Partition split_class_partition(const std::vector<int>& odd_lengths);

// An irreducible character of Alt(n): either the restriction of a non-symmetric
// S^lambda (lambda identified with its transpose), or one of the halves of the
// restriction of a symmetric S^lambda.
struct AltCharacter {
  Partition lambda;
  bool symmetric_half = false;  // true: lambda symmetric, this is W' or W''
  int which = 0;                // 0 = chi', 1 = chi'' (meaningful when half)
  int128 dim() const;           // chi(id)
};

// All irreducible characters of Alt(n): one per non-symmetric pair {l, l^},
// two per symmetric l.
std::vector<AltCharacter> alt_irreducibles(int n);

// Exact character value per the split-class evaluation rules. For a symmetric
// lambda on its corresponding split class the value is quadratic irrational.
QuadraticValue alt_character(const AltCharacter& chi, const AltClass& c);

// Both values {x, y} on a corresponding split class (order matching halves 0,1
// for chi'; swapped for chi''). Provided so callers can check symmetric
// functions of the pair without fixing which half is which.
std::pair<QuadraticValue, QuadraticValue> split_character_pair(const Partition& lambda);

}  // namespace ekr
