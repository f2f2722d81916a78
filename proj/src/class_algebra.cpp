#include "ekr/class_algebra.hpp"

#include <lapacke.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cmath>

#include "ekr/errors.hpp"

namespace ekr {

using boost::multiprecision::cpp_int;

namespace {

// characteristic polynomial of an integer matrix, monic, via Faddeev-LeVerrier;
// coefficients c[0..r] with c[r] = 1 (c[i] multiplies x^i).
std::vector<cpp_int> char_poly(const std::vector<std::vector<long long>>& m) {
  int r = (int)m.size();
  std::vector<std::vector<cpp_int>> M(r, std::vector<cpp_int>(r));
  std::vector<std::vector<cpp_int>> A(r, std::vector<cpp_int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) M[i][j] = m[i][j];
  std::vector<cpp_int> c(r + 1, 0);
  c[r] = 1;
  // A_1 = M, c_{r-1} = -tr(A_1); A_{k+1} = M (A_k + c_{r-k} I)
  std::vector<std::vector<cpp_int>> Ak = M;
  for (int k = 1; k <= r; ++k) {
    cpp_int tr = 0;
    for (int i = 0; i < r; ++i) tr += Ak[i][i];
    assert(tr % k == 0);
    c[r - k] = -tr / k;
    if (k == r) break;
    // Ak <- M * (Ak + c[r-k] I)
    for (int i = 0; i < r; ++i) Ak[i][i] += c[r - k];
    std::vector<std::vector<cpp_int>> next(r, std::vector<cpp_int>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int l = 0; l < r; ++l) {
        if (M[i][l] == 0) continue;
        const cpp_int& f = M[i][l];
        for (int j = 0; j < r; ++j) next[i][j] += f * Ak[l][j];
      }
    Ak = std::move(next);
  }
  return c;
}

cpp_int eval_poly(const std::vector<cpp_int>& c, const cpp_int& x) {
  cpp_int v = 0;
  for (int i = (int)c.size() - 1; i >= 0; --i) v = v * x + c[i];
  return v;
}

// divide polynomial by (x^2 - s x + p); returns true when division is exact
bool divide_by_quadratic(std::vector<cpp_int>& c, long long s, long long p) {
  int deg = (int)c.size() - 1;
  if (deg < 2) return false;
  std::vector<cpp_int> q(deg - 1, 0);
  std::vector<cpp_int> rem = c;
  for (int i = deg; i >= 2; --i) {
    cpp_int f = rem[i];
    q[i - 2] = f;
    rem[i] -= f;             // subtract f * x^i
    rem[i - 1] += f * s;     // -(-s x) * f
    rem[i - 2] -= f * p;
  }
  if (rem[0] != 0 || rem[1] != 0) return false;
  c = std::move(q);
  return true;
}

bool divide_by_linear(std::vector<cpp_int>& c, const cpp_int& root) {
  int deg = (int)c.size() - 1;
  if (deg < 1) return false;
  std::vector<cpp_int> q(deg, 0);
  cpp_int carry = 0;
  for (int i = deg; i >= 1; --i) {
    carry = carry * root + c[i];
    q[i - 1] = carry;
  }
  if (carry * root + c[0] != 0) return false;
  c = std::move(q);
  return true;
}

struct RootGroup {
  QuadraticValue value;        // one representative root
  bool quadratic_pair = false; // value and its conjugate share the multiplicity
};

}  // namespace

Spectrum cayley_spectrum_class_algebra(const PermGroup& g, const std::vector<int>& class_ids) {
  const auto& classes = g.conjugacy_classes();
  int r = (int)classes.size();
  long long order = g.order();
  int idclass = g.class_of(g.identity_index());

  // connection set S
  std::vector<int> conn;
  for (int cid : class_ids) {
    if (cid == idclass) throw InvalidConnectionSet("connection set contains the identity class");
    for (int e : classes[cid].members) conn.push_back(e);
  }
  // closure under inversion
  {
    std::vector<char> in(g.order(), 0);
    for (int e : conn) in[e] = 1;
    for (int e : conn)
      if (!in[g.inverse_index(e)])
        throw InvalidConnectionSet("class union not closed under inversion");
  }

  // multiplication-by-K_S matrix in the class-sum basis:
  // T[j'][j] = #{ d in S : d^{-1} * rep(j') lies in class j }
  std::vector<std::vector<long long>> T(r, std::vector<long long>(r, 0));
  for (int jp = 0; jp < r; ++jp) {
    const Perm& rep = g.element(classes[jp].representative);
    for (int d : conn) {
      Perm x = g.element(d).inverse() * rep;
      int cls = g.class_of(g.index_of(x));
      ++T[cls][jp];
    }
  }

  // exact characteristic polynomial and numeric roots
  std::vector<cpp_int> poly = char_poly(T);
  std::vector<double> td((size_t)r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) td[(size_t)i * r + j] = (double)T[i][j];
  std::vector<double> wr(r), wi(r);
  int info = LAPACKE_dgeev(LAPACK_ROW_MAJOR, 'N', 'N', r, td.data(), r, wr.data(), wi.data(),
                           nullptr, r, nullptr, r);
  if (info != 0) throw NumericAmbiguity("class-matrix eigensolve failed");
  for (int i = 0; i < r; ++i)
    if (std::abs(wi[i]) > 1e-6 * std::max(1.0, std::abs(wr[i])))
      throw NumericAmbiguity("class matrix has non-real eigenvalue");
  std::sort(wr.begin(), wr.end(), std::greater<double>());

  // identify distinct exact roots: integers first, then conjugate quadratic pairs
  std::vector<cpp_int> remaining = poly;
  std::vector<RootGroup> groups;
  std::vector<double> candidates;
  double scale = std::max(1.0, std::max(std::abs(wr.front()), std::abs(wr.back())));
  for (int i = 0; i < r; ++i) {
    bool dup = false;
    for (double c : candidates)
      if (std::abs(c - wr[i]) < 1e-6 * scale) dup = true;
    if (!dup) candidates.push_back(wr[i]);
  }
  std::vector<double> leftovers;
  for (double c : candidates) {
    double rd = std::round(c);
    if (std::abs(c - rd) < 1e-6 * scale) {
      cpp_int root = (long long)rd;
      if (eval_poly(poly, root) == 0) {
        bool already = false;
        for (auto& grp : groups)
          if (!grp.quadratic_pair && grp.value == QuadraticValue(Rational((long long)rd)))
            already = true;
        if (!already) {
          groups.push_back({QuadraticValue(Rational((long long)rd)), false});
          while (divide_by_linear(remaining, root)) {
          }
        }
        continue;
      }
    }
    leftovers.push_back(c);
  }
  // pair leftovers into quadratic conjugates
  std::vector<char> used(leftovers.size(), 0);
  for (size_t i = 0; i < leftovers.size(); ++i) {
    if (used[i]) continue;
    bool paired = false;
    for (size_t j = i + 1; j < leftovers.size() && !paired; ++j) {
      if (used[j]) continue;
      double s = leftovers[i] + leftovers[j];
      double p = leftovers[i] * leftovers[j];
      if (std::abs(s - std::round(s)) > 1e-5 * scale) continue;
      if (std::abs(p - std::round(p)) > 1e-5 * scale * scale) continue;
      long long si = (long long)std::round(s), pi = (long long)std::round(p);
      std::vector<cpp_int> test = remaining;
      if (divide_by_quadratic(test, si, pi)) {
        while (divide_by_quadratic(remaining, si, pi)) {
        }
        long long disc = si * si - 4 * pi;
        QuadraticValue hi(Rational(si, 2), Rational(1, 2), disc);
        groups.push_back({hi, true});
        used[i] = used[j] = 1;
        paired = true;
      }
    }
    if (!paired) throw NumericAmbiguity("class-matrix root not integer or quadratic");
  }

  // exact power-sum traces tr(A^k) = |G| * w_k[idclass]
  int unknowns = (int)groups.size();
  int equations = unknowns + 2;
  std::vector<cpp_int> traces(equations);
  {
    std::vector<cpp_int> w(r, 0);
    w[idclass] = 1;
    traces[0] = order;  // tr(A^0) = |G|
    for (int k = 1; k < equations; ++k) {
      std::vector<cpp_int> next(r, 0);
      for (int j = 0; j < r; ++j) {
        if (w[j] == 0) continue;
        for (int jp = 0; jp < r; ++jp)
          if (T[jp][j] != 0) next[jp] += w[j] * T[jp][j];
      }
      w = std::move(next);
      traces[k] = cpp_int(order) * w[idclass];
    }
  }

  // solve sum_i m_i * powsum_i(k) = traces[k] exactly
  // powsum for integer root v: v^k; for a quadratic pair: v^k + conj(v)^k via
  // the recurrence s_k = s*s_{k-1} - p*s_{k-2}
  std::vector<std::vector<cpp_int>> powsum(unknowns, std::vector<cpp_int>(equations));
  for (int i = 0; i < unknowns; ++i) {
    if (!groups[i].quadratic_pair) {
      cpp_int v = groups[i].value.a().num();
      assert(groups[i].value.a().den() == 1);
      cpp_int acc = 1;
      for (int k = 0; k < equations; ++k) {
        powsum[i][k] = acc;
        acc *= v;
      }
    } else {
      // roots of x^2 - s x + p
      Rational a = groups[i].value.a();
      long long s = (a * Rational(2)).num();
      assert((a * Rational(2)).den() == 1);
      // p = a^2 - b^2 d
      QuadraticValue prod = groups[i].value * groups[i].value.conjugate();
      assert(prod.is_rational() && prod.a().den() == 1);
      long long p = prod.a().num();
      powsum[i][0] = 2;
      powsum[i][1] = s;
      for (int k = 2; k < equations; ++k)
        powsum[i][k] = cpp_int(s) * powsum[i][k - 1] - cpp_int(p) * powsum[i][k - 2];
    }
  }
  // Gaussian elimination over rationals (cpp_int with common scaling): use
  // fraction-free elimination on the (equations x unknowns | traces) system.
  int rows = equations, cols = unknowns;
  std::vector<std::vector<cpp_int>> aug(rows, std::vector<cpp_int>(cols + 1));
  for (int k = 0; k < rows; ++k) {
    for (int i = 0; i < cols; ++i) aug[k][i] = powsum[i][k];
    aug[k][cols] = traces[k];
  }
  std::vector<int> pivot_row(cols, -1);
  int prow = 0;
  for (int c = 0; c < cols && prow < rows; ++c) {
    int pv = -1;
    for (int i = prow; i < rows; ++i)
      if (aug[i][c] != 0) {
        pv = i;
        break;
      }
    if (pv < 0) throw NumericAmbiguity("multiplicity system is singular");
    std::swap(aug[prow], aug[pv]);
    for (int i = 0; i < rows; ++i) {
      if (i == prow || aug[i][c] == 0) continue;
      cpp_int f1 = aug[prow][c], f2 = aug[i][c];
      for (int j = 0; j <= cols; ++j) aug[i][j] = aug[i][j] * f1 - aug[prow][j] * f2;
    }
    pivot_row[c] = prow;
    ++prow;
  }
  // consistency of the extra equations
  for (int i = prow; i < rows; ++i)
    if (aug[i][cols] != 0) throw NumericAmbiguity("multiplicity system inconsistent");

  Spectrum spec;
  for (int c = 0; c < cols; ++c) {
    int pr = pivot_row[c];
    cpp_int num = aug[pr][cols], den = aug[pr][c];
    assert(den != 0 && num % den == 0);
    cpp_int m = num / den;
    assert(m >= 0 && m <= cpp_int(order));
    long long mult = (long long)m;
    if (mult == 0) continue;
    if (!groups[c].quadratic_pair) {
      spec.entries.push_back({groups[c].value, mult, true, groups[c].value.to_double()});
    } else {
      QuadraticValue hi = groups[c].value;
      QuadraticValue lo = hi.conjugate();
      spec.entries.push_back({hi, mult, true, hi.to_double()});
      spec.entries.push_back({lo, mult, true, lo.to_double()});
    }
  }
  spec.sort_descending();
  if (spec.total() != order) throw NumericAmbiguity("spectrum multiplicities do not sum to |G|");
  QuadraticValue tr = spec.trace();
  if (!(tr == QuadraticValue(Rational(0))))
    throw NumericAmbiguity("spectrum trace is not zero");
  return spec;
}

}  // namespace ekr
