#include "ekr/clique.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace ekr {

namespace {

// Max-clique branch and bound on an adjacency-bitset matrix, Tomita-style
// greedy coloring bound. All higher-level searches reduce to this.
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<uint64_t>& adj, int n, int words)
      : adj_(adj), n_(n), words_(words) {}

  long long budget = kDefaultSearchBudget;
  long long nodes = 0;
  bool aborted = false;   // budget ran out
  bool stopped = false;   // visitor asked to stop

  int best = 0;                       // size threshold for pruning
  bool enumerate_equal = false;       // keep exploring ties, report size==best
  std::function<bool(const std::vector<int>&)> on_clique;  // called on improvements/ties

  void run(std::vector<uint64_t> start, std::vector<int> base) {
    current_ = std::move(base);
    expand(start);
  }

 private:
  const std::vector<uint64_t>& adj_;
  int n_, words_;
  std::vector<int> current_;

  const uint64_t* row(int v) const { return adj_.data() + (size_t)v * words_; }

  static int popcount_all(const uint64_t* w, int words) {
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
    return c;
  }

  void report() {
    int sz = (int)current_.size();
    if (enumerate_equal) {
      if (sz == best && on_clique) {
        std::vector<int> s = current_;
        std::sort(s.begin(), s.end());
        if (!on_clique(s)) stopped = true;
      }
    } else if (sz > best) {
      best = sz;
      if (on_clique) {
        std::vector<int> s = current_;
        std::sort(s.begin(), s.end());
        if (!on_clique(s)) stopped = true;
      }
    }
  }

  // Greedy coloring of candidate set P; emits vertices ordered by color
  // (ascending) with their color number (1-based).
  void color_sort(const std::vector<uint64_t>& P, std::vector<int>& order,
                  std::vector<int>& colors) {
    order.clear();
    colors.clear();
    std::vector<uint64_t> uncolored = P;
    std::vector<uint64_t> cls(words_);
    int color = 0;
    while (true) {
      bool any = false;
      for (int w = 0; w < words_; ++w)
        if (uncolored[w]) {
          any = true;
          break;
        }
      if (!any) break;
      ++color;
      std::copy(uncolored.begin(), uncolored.end(), cls.begin());
      // take vertices from cls greedily, removing neighbors from the class
      for (int w = 0; w < words_; ++w) {
        while (cls[w]) {
          int b = std::countr_zero(cls[w]);
          int v = w * 64 + b;
          cls[w] &= cls[w] - 1;
          order.push_back(v);
          colors.push_back(color);
          uncolored[w2_(v)] &= ~bit_(v);
          const uint64_t* rv = row(v);
          for (int x = 0; x < words_; ++x) cls[x] &= ~rv[x];
        }
      }
    }
  }

  static int w2_(int v) { return v >> 6; }
  static uint64_t bit_(int v) { return 1ull << (v & 63); }

  void expand(std::vector<uint64_t>& P) {
    if (stopped || aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (popcount_all(P.data(), words_) == 0) {
      report();
      return;
    }
    std::vector<int> order, colors;
    color_sort(P, order, colors);
    std::vector<uint64_t> newP(words_);
    for (int idx = (int)order.size() - 1; idx >= 0; --idx) {
      int bound = (int)current_.size() + colors[idx];
      if (enumerate_equal ? bound < best : bound <= best) return;
      int v = order[idx];
      current_.push_back(v);
      const uint64_t* rv = row(v);
      for (int w = 0; w < words_; ++w) newP[w] = P[w] & rv[w];
      bool empty = popcount_all(newP.data(), words_) == 0;
      if (empty) {
        report();
      } else {
        expand(newP);  // mutates newP; it is recomputed for the next candidate
      }
      current_.pop_back();
      if (stopped || aborted) return;
      P[w2_(v)] &= ~bit_(v);
    }
  }
};

std::vector<uint64_t> full_set(int n, int words) {
  std::vector<uint64_t> s(words, 0);
  for (int v = 0; v < n; ++v) s[v >> 6] |= 1ull << (v & 63);
  return s;
}

std::vector<uint64_t> complement_adjacency(const Graph& g) {
  int n = g.vertex_count(), words = g.words();
  std::vector<uint64_t> adj((size_t)n * words, 0);
  std::vector<uint64_t> all = full_set(n, words);
  for (int v = 0; v < n; ++v) {
    const uint64_t* rv = g.row(v);
    uint64_t* out = adj.data() + (size_t)v * words;
    for (int w = 0; w < words; ++w) out[w] = all[w] & ~rv[w];
    out[v >> 6] &= ~(1ull << (v & 63));  // no self-loop
  }
  return adj;
}

}  // namespace

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_clique(const Graph& g, const std::vector<int>& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

IndependenceResult max_independent_set(const Graph& g, long long budget) {
  // independent sets of g = cliques of the complement
  int n = g.vertex_count(), words = g.words();
  std::vector<uint64_t> cadj = complement_adjacency(g);
  CliqueSearch search(cadj, n, words);
  search.budget = budget;
  IndependenceResult res;
  search.on_clique = [&](const std::vector<int>& s) {
    res.witness = s;
    return true;
  };
  std::vector<uint64_t> P = full_set(n, words);
  search.run(std::move(P), {});
  res.size = search.best;
  res.exhausted = !search.aborted;
  res.nodes = search.nodes;
  return res;
}

std::optional<std::vector<int>> find_clique_of_size(const Graph& g, int t, long long budget,
                                                    bool* absence_proven) {
  int n = g.vertex_count(), words = g.words();
  if (absence_proven) *absence_proven = false;
  if (t <= 0) return std::vector<int>{};
  std::vector<uint64_t> adj((size_t)n * words);
  for (int v = 0; v < n; ++v)
    std::copy(g.row(v), g.row(v) + words, adj.begin() + (size_t)v * words);
  CliqueSearch search(adj, n, words);
  search.budget = budget;
  search.best = t - 1;  // prune anything that cannot beat t-1
  std::optional<std::vector<int>> found;
  search.on_clique = [&](const std::vector<int>& s) {
    if ((int)s.size() >= t) {
      found = s;
      return false;  // stop at first witness
    }
    return true;
  };
  std::vector<uint64_t> P = full_set(n, words);
  search.run(std::move(P), {});
  if (found) {
    found->resize(t);  // any t vertices of a bigger clique still form one
    return found;
  }
  if (absence_proven) *absence_proven = !search.aborted;
  return std::nullopt;
}

bool enumerate_independent_sets_of_size(const Graph& g, int target,
                                        const std::vector<int>& forced,
                                        const std::function<bool(const std::vector<int>&)>& visit,
                                        long long budget) {
  int n = g.vertex_count(), words = g.words();
  std::vector<uint64_t> cadj = complement_adjacency(g);
  CliqueSearch search(cadj, n, words);
  search.budget = budget;
  search.best = target;
  search.enumerate_equal = true;
  search.on_clique = visit;
  // candidate set: common complement-neighbors of all forced vertices
  std::vector<uint64_t> P = full_set(n, words);
  for (int f : forced) {
    const uint64_t* rf = cadj.data() + (size_t)f * words;
    for (int w = 0; w < words; ++w) P[w] &= rf[w];
  }
  if (!is_independent_set(g, forced)) return true;  // nothing to enumerate
  search.run(std::move(P), forced);
  return !search.aborted;
}

}  // namespace ekr
