#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ekr {

// Dense integer matrix (all matrices in this project have integer entries).
struct IntMatrix {
  long long rows = 0;
  long long cols = 0;
  std::vector<std::vector<long long>> data;

  static IntMatrix zero(long long r, long long c);
  static IntMatrix identity(long long n);
  IntMatrix transpose_times_self() const;  // A^T A
  bool operator==(const IntMatrix&) const = default;
};

struct RankResult {
  long long rank = 0;
  bool certified_exact = false;  // true: rank over Q is exactly `rank`
  std::string method;
};

// Rank of the matrix emitted row-by-row, over GF(p). row_source returns false
// when exhausted; it fills `row` with `cols` entries.
long long rank_mod_p(const std::function<bool(std::vector<long long>&)>& row_source,
                     long long cols, uint64_t p);

// Same, but stops once `max_rank` pivots have been found (useful when an
// independent argument already bounds the rank above).
long long rank_mod_p_bounded(const std::function<bool(std::vector<long long>&)>& row_source,
                             long long cols, uint64_t p, long long max_rank);

long long rank_mod_p(const IntMatrix& m, uint64_t p);

// Deterministic stream of primes above 2^30 derived from `seed`.
std::vector<uint64_t> rank_primes(int count, uint64_t seed);

// Rank over Q: max of ranks mod 3 seeded primes; a mod-p rank equal to
// min(rows, cols) certifies itself; otherwise a fraction-free elimination
// confirms exactness when rows*cols <= 4e6, else the result is the certified
// lower bound "rank >= r".
RankResult exact_rank(const IntMatrix& m, uint64_t seed = 12345);

// Fraction-free (Bareiss) elimination rank over Q; exact but slower.
long long rank_bareiss(const IntMatrix& m);

}  // namespace ekr
