#include "ekr/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>

#include "ekr/errors.hpp"

namespace ekr {

using boost::multiprecision::cpp_int;

IntMatrix IntMatrix::zero(long long r, long long c) {
  IntMatrix m;
  m.rows = r;
  m.cols = c;
  m.data.assign(r, std::vector<long long>(c, 0));
  return m;
}

IntMatrix IntMatrix::identity(long long n) {
  IntMatrix m = zero(n, n);
  for (long long i = 0; i < n; ++i) m.data[i][i] = 1;
  return m;
}

IntMatrix IntMatrix::transpose_times_self() const {
  IntMatrix g = zero(cols, cols);
  for (long long r = 0; r < rows; ++r)
    for (long long i = 0; i < cols; ++i) {
      if (data[r][i] == 0) continue;
      for (long long j = 0; j < cols; ++j) g.data[i][j] += data[r][i] * data[r][j];
    }
  return g;
}

namespace {

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t m) {
  unsigned __int128 r = 1, base = b % m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return (uint64_t)r;
}

bool is_prime64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (a % n == 0) continue;
    uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = (uint64_t)((unsigned __int128)x * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

std::vector<uint64_t> rank_primes(int count, uint64_t seed) {
  std::vector<uint64_t> primes;
  uint64_t x = (1ull << 30) + 1 + (seed * 2654435761u) % (1ull << 20);
  if (x % 2 == 0) ++x;
  while ((int)primes.size() < count) {
    if (is_prime64(x)) primes.push_back(x);
    x += 2;
  }
  return primes;
}

namespace {

// Barrett reduction for a fixed modulus p < 2^31, inputs < 2^63.
struct Barrett {
  uint64_t p;
  uint64_t magic;  // floor(2^64 / p)
  explicit Barrett(uint64_t p_) : p(p_), magic(~0ull / p_) {}
  uint64_t reduce(uint64_t t) const {
    uint64_t q = (uint64_t)(((unsigned __int128)t * magic) >> 64);
    uint64_t r = t - q * p;
    while (r >= p) r -= p;
    return r;
  }
};

}  // namespace

long long rank_mod_p_bounded(const std::function<bool(std::vector<long long>&)>& row_source,
                             long long cols, uint64_t p, long long max_rank) {
  // incremental echelon basis: pivot_col -> reduced row (pivot normalized to 1)
  Barrett bar(p);
  std::vector<std::vector<uint64_t>> basis;
  std::vector<long long> pivot_col;
  std::vector<long long> raw(cols);
  std::vector<uint64_t> row(cols);
  long long rank = 0;
  long long stop = std::min<long long>(max_rank, cols);
  while (row_source(raw)) {
    for (long long j = 0; j < cols; ++j) {
      long long v = raw[j] % (long long)p;
      row[j] = (uint64_t)(v < 0 ? v + (long long)p : v);
    }
    for (size_t b = 0; b < basis.size(); ++b) {
      uint64_t f = row[pivot_col[b]];
      if (f == 0) continue;
      const uint64_t* br = basis[b].data();
      uint64_t neg = p - f;
      for (long long j = pivot_col[b]; j < cols; ++j)
        row[j] = bar.reduce(row[j] + neg * br[j]);
    }
    long long pc = -1;
    for (long long j = 0; j < cols; ++j)
      if (row[j]) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    uint64_t inv = mod_pow(row[pc], p - 2, p);
    for (long long j = pc; j < cols; ++j)
      row[j] = (uint64_t)((unsigned __int128)row[j] * inv % p);
    size_t pos = 0;
    while (pos < basis.size() && pivot_col[pos] < pc) ++pos;
    basis.insert(basis.begin() + pos, row);
    pivot_col.insert(pivot_col.begin() + pos, pc);
    if (++rank >= stop) break;
  }
  return rank;
}

long long rank_mod_p(const std::function<bool(std::vector<long long>&)>& row_source,
                     long long cols, uint64_t p) {
  return rank_mod_p_bounded(row_source, cols, p, cols);
}

long long rank_mod_p(const IntMatrix& m, uint64_t p) {
  long long next = 0;
  return rank_mod_p(
      [&](std::vector<long long>& row) {
        if (next >= m.rows) return false;
        row = m.data[next++];
        return true;
      },
      m.cols, p);
}

long long rank_bareiss(const IntMatrix& m) {
  std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols));
  for (long long i = 0; i < m.rows; ++i)
    for (long long j = 0; j < m.cols; ++j) a[i][j] = m.data[i][j];
  long long rank = 0;
  cpp_int prev = 1;
  long long row = 0;
  for (long long col = 0; col < m.cols && row < m.rows; ++col) {
    long long piv = -1;
    for (long long i = row; i < m.rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    for (long long i = row + 1; i < m.rows; ++i) {
      for (long long j = col + 1; j < m.cols; ++j) {
        cpp_int t = a[i][j] * a[row][col] - a[i][col] * a[row][j];
        assert(t % prev == 0);
        a[i][j] = t / prev;
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

RankResult exact_rank(const IntMatrix& m, uint64_t seed) {
  RankResult res;
  long long best = 0;
  for (uint64_t p : rank_primes(3, seed)) best = std::max(best, rank_mod_p(m, p));
  res.rank = best;
  if (best == std::min(m.rows, m.cols)) {
    // a full-rank mod-p witness certifies rank over Q
    res.certified_exact = true;
    res.method = "mod-p full";
    return res;
  }
  if (m.rows * m.cols <= 4000000) {
    long long exact = rank_bareiss(m);
    assert(exact >= best);
    res.rank = exact;
    res.certified_exact = true;
    res.method = "bareiss";
    return res;
  }
  res.certified_exact = false;
  res.method = "mod-p lower bound";
  return res;
}

}  // namespace ekr
