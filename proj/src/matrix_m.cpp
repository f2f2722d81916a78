#include "ekr/matrix_m.hpp"

#include <algorithm>

#include "ekr/errors.hpp"

namespace ekr {

IntMatrix build_matrix_M_rows(const PermGroup& g, const std::vector<int>& rows) {
  int n = g.degree();
  long long cols = (long long)(n - 1) * (n - 2);
  IntMatrix m = IntMatrix::zero((long long)rows.size(), cols);
  // precompute pair -> column
  std::vector<std::vector<int>> colof(n, std::vector<int>(n, -1));
  {
    int col = 0;
    for (int a = 1; a <= n - 1; ++a)
      for (int b = 1; b <= n - 1; ++b) {
        if (a == b) continue;
        colof[a - 1][b - 1] = col++;
      }
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    const Perm& p = g.element(rows[r]);
    for (int i = 0; i < n - 1; ++i) {
      int j = p(i);
      if (j < n - 1 && j != i) m.data[r][colof[i][j]] = 1;
    }
  }
  return m;
}

IntMatrix build_matrix_M(const PermGroup& g, const std::vector<int>& class_ids) {
  const auto& classes = g.conjugacy_classes();
  std::vector<int> rows;
  for (int cid : class_ids)
    rows.insert(rows.end(), classes[cid].members.begin(), classes[cid].members.end());
  std::sort(rows.begin(), rows.end());
  return build_matrix_M_rows(g, rows);
}

IntMatrix pairs_gram(int n, long long a, long long b) {
  Graph x = pairs_graph(n);
  long long v = x.vertex_count();
  IntMatrix m = IntMatrix::zero(v, v);
  for (long long i = 0; i < v; ++i) {
    m.data[i][i] = a;
    for (long long j = 0; j < v; ++j)
      if (x.adjacent((int)i, (int)j)) m.data[i][j] = b;
  }
  return m;
}

IntMatrix build_matrix_L(const PermGroup& g) {
  int n = g.degree();
  long long order = g.order();
  long long cols = (long long)(n - 1) * (n - 1);
  IntMatrix m = IntMatrix::zero(order, cols);
  for (long long r = 0; r < order; ++r) {
    const Perm& p = g.element((int)r);
    for (int i = 0; i < n - 1; ++i) {
      int j = p(i);
      if (j < n - 1) m.data[r][(long long)i * (n - 1) + j] = 1;
    }
  }
  return m;
}

IntMatrix build_matrix_H(const PermGroup& g) {
  int n = g.degree();
  long long order = g.order();
  IntMatrix m = IntMatrix::zero(order, (long long)n * n);
  for (long long r = 0; r < order; ++r) {
    const Perm& p = g.element((int)r);
    for (int i = 0; i < n; ++i) m.data[r][(long long)i * n + p(i)] = 1;
  }
  return m;
}

IntMatrix build_matrix_H_bar(const PermGroup& g) {
  int n = g.degree();
  IntMatrix h = build_matrix_H(g);
  IntMatrix m = IntMatrix::zero(h.rows, 0);
  std::vector<long long> keep;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool drop = (i < n - 1 && j == n - 1) || (i == n - 1 && j < n - 1);
      if (!drop) keep.push_back((long long)i * n + j);
    }
  m.cols = (long long)keep.size();
  for (long long r = 0; r < h.rows; ++r) {
    m.data[r].resize(m.cols);
    for (size_t c = 0; c < keep.size(); ++c) m.data[r][c] = h.data[r][keep[c]];
  }
  return m;
}

}  // namespace ekr
