#include "ekr/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ekr/cayley.hpp"
#include "ekr/class_algebra.hpp"
#include "ekr/clique.hpp"
#include "ekr/ekr_verify.hpp"
#include "ekr/errors.hpp"
#include "ekr/gf.hpp"
#include "ekr/graph.hpp"

namespace ekr {

PermGroup cyclic_group(const Perm& sigma) { return PermGroup(sigma.degree(), {sigma}); }

PermGroup dihedral_group(int n) {
  if (n < 3) throw InvalidParameter("dihedral group needs n >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;  // fixes 0; 1-based: fixes 1, swaps i <-> n+2-i
  }
  return PermGroup(n, {Perm(rot), Perm(refl)});
}

PermGroup symmetric_group(int n) {
  if (n == 1) return PermGroup(1, {Perm(1)});
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::vector<int> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  return PermGroup(n, {Perm(swap01), Perm(cyc)});
}

PermGroup alternating_group(int n) {
  if (n <= 2) return PermGroup(std::max(n, 1), {Perm(std::max(n, 1))});
  std::vector<Perm> gens;
  for (int i = 2; i < n; ++i) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    img[0] = 1;
    img[1] = i;
    img[i] = 0;  // 3-cycle (1, 2, i+1)
    gens.push_back(Perm(img));
  }
  return PermGroup(n, gens);
}

PermGroup frobenius_affine(int p, int k) {
  GF f(p);
  if (f.k() != 1) throw InvalidParameter("frobenius_affine needs a prime p");
  if ((p - 1) % k != 0) throw InvalidParameter("k must divide p-1");
  std::vector<int> t(p), m(p);
  int a = f.pow(f.generator(), (p - 1) / k);
  for (int x = 0; x < p; ++x) {
    t[x] = f.add(x, 1);
    m[x] = f.mul(a, x);
  }
  return PermGroup(p, {Perm(t), Perm(m)});
}

PermGroup agl1(int q) {
  GF f(q);
  std::vector<Perm> gens;
  for (int i = 0; i < f.k(); ++i) {
    int e = f.pow(f.generator(), i);  // additive basis 1, x, x^2, ...
    if (f.k() == 1) e = 1;
    std::vector<int> t(q);
    for (int x = 0; x < q; ++x) t[x] = f.add(x, e);
    gens.push_back(Perm(t));
  }
  std::vector<int> m(q);
  for (int x = 0; x < q; ++x) m[x] = f.mul(f.generator(), x);
  gens.push_back(Perm(m));
  return PermGroup(q, gens);
}

namespace {

// Moebius permutation of P_q = {0..q-1, infinity=q} for matrix [[a,b],[c,d]].
Perm mobius(const GF& f, int a, int b, int c, int d) {
  int q = f.q();
  std::vector<int> img(q + 1);
  for (int z = 0; z < q; ++z) {
    int num = f.add(f.mul(a, z), b);
    int den = f.add(f.mul(c, z), d);
    img[z] = (den == 0) ? q : f.div(num, den);
  }
  img[q] = (c == 0) ? q : f.div(a, c);
  return Perm(img);
}

Perm projective_frobenius(const GF& f) {
  int q = f.q();
  std::vector<int> img(q + 1);
  for (int z = 0; z < q; ++z) img[z] = f.frobenius(z);
  img[q] = q;
  return Perm(img);
}

std::vector<Perm> sl2_generators(const GF& f) {
  std::vector<Perm> gens;
  // upper transvections over an additive basis, plus the Weyl element
  for (int i = 0; i < f.k(); ++i) {
    int e = f.pow(f.generator(), i);
    if (f.k() == 1) e = 1;
    gens.push_back(mobius(f, 1, e, 0, 1));
  }
  gens.push_back(mobius(f, 0, f.neg(1), 1, 0));
  return gens;
}

}  // namespace

PermGroup psl2(int q) {
  GF f(q);
  return PermGroup(q + 1, sl2_generators(f));
}

PermGroup pgl2(int q) {
  GF f(q);
  std::vector<Perm> gens = sl2_generators(f);
  gens.push_back(mobius(f, f.generator(), 0, 0, 1));
  return PermGroup(q + 1, gens);
}

PermGroup psl2_ext_frobenius(int q) {
  GF f(q);
  std::vector<Perm> gens = sl2_generators(f);
  gens.push_back(projective_frobenius(f));
  return PermGroup(q + 1, gens);
}

PermGroup pgl2_ext_frobenius(int q) {
  GF f(q);
  std::vector<Perm> gens = sl2_generators(f);
  gens.push_back(mobius(f, f.generator(), 0, 0, 1));
  gens.push_back(projective_frobenius(f));
  return PermGroup(q + 1, gens);
}

namespace {

// PSL(3,q) acting on the projective plane (q^2 + q + 1 points): generated by
// the elementary transvections E_ij(a) over an additive basis.
PermGroup psl3(int q) {
  GF f(q);
  // projective points: nonzero vectors with first nonzero coordinate 1
  std::vector<std::array<int, 3>> points;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead != 1) continue;
        points.push_back({x, y, z});
      }
  std::sort(points.begin(), points.end());
  auto index_of = [&](std::array<int, 3> v) {
    int lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
    int li = f.inv(lead);
    for (int i = 0; i < 3; ++i) v[i] = f.mul(v[i], li);
    return (int)(std::lower_bound(points.begin(), points.end(), v) - points.begin());
  };
  auto matrix_perm = [&](const std::array<std::array<int, 3>, 3>& m) {
    std::vector<int> img(points.size());
    for (size_t pi = 0; pi < points.size(); ++pi) {
      std::array<int, 3> w{0, 0, 0};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) w[i] = f.add(w[i], f.mul(m[i][j], points[pi][j]));
      img[pi] = index_of(w);
    }
    return Perm(img);
  };
  std::vector<Perm> gens;
  std::vector<int> basis;
  for (int i = 0; i < f.k(); ++i) basis.push_back(f.k() == 1 ? 1 : f.pow(f.generator(), i));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int a : basis) {
        std::array<std::array<int, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        m[i][j] = a;
        gens.push_back(matrix_perm(m));
      }
    }
  return PermGroup((int)points.size(), gens);
}

}  // namespace

PermGroup psl3_2_on_7() { return psl3(2); }
PermGroup psl3_4_on_21() { return psl3(4); }

namespace {

// affine groups on F_p^k: translations plus a list of integer matrices
PermGroup affine_group(int p, int k, const std::vector<std::vector<std::vector<int>>>& mats) {
  int q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  auto decode = [&](int v) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
    return v;
  };
  std::vector<Perm> gens;
  for (int i = 0; i < k; ++i) {  // basis translations
    std::vector<int> img(q);
    for (int x = 0; x < q; ++x) {
      auto d = decode(x);
      d[i] = (d[i] + 1) % p;
      img[x] = encode(d);
    }
    gens.push_back(Perm(img));
  }
  for (const auto& m : mats) {
    std::vector<int> img(q);
    for (int x = 0; x < q; ++x) {
      auto d = decode(x);
      std::vector<int> w(k, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) w[i] = (w[i] + m[i][j] * d[j]) % p;
      img[x] = encode(w);
    }
    gens.push_back(Perm(img));
  }
  return PermGroup(q, gens);
}

}  // namespace

PermGroup agl3_2() {
  // GL(3,2) = < basis rotation, transvection >
  return affine_group(2, 3,
                      {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                       {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}});
}

PermGroup agl2_3() {
  // GL(2,3) = < SL(2,3) transvection + Weyl, determinant generator >
  return affine_group(3, 2, {{{1, 1}, {0, 1}}, {{0, 2}, {1, 0}}, {{2, 0}, {0, 1}}});
}

PermGroup z3z3_q8() {
  // Q8 = < i, j > inside GL(2,3)
  return affine_group(3, 2, {{{0, 2}, {1, 0}}, {{1, 1}, {1, 2}}});
}

PermGroup coset_action(const PermGroup& g, const std::vector<int>& subgroup_indices) {
  long long order = g.order();
  std::set<int> sub(subgroup_indices.begin(), subgroup_indices.end());
  if (!sub.count(g.identity_index())) throw InvalidParameter("subgroup must contain identity");
  long long index = order / (long long)sub.size();
  // right cosets Hx; coset of identity first, then by minimal representative
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (long long x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = (int)reps.size();
    reps.push_back((int)x);
    for (int h : sub) coset_of[g.multiply(h, (int)x)] = id;
  }
  if ((long long)reps.size() != index) throw InvalidParameter("subgroup is not closed");
  // generators act by right multiplication: Hx -> Hxg
  std::vector<Perm> gens;
  for (const Perm& gen : g.generators()) {
    int gi = g.index_of(gen);
    std::vector<int> img(reps.size());
    for (size_t c = 0; c < reps.size(); ++c) img[c] = coset_of[g.multiply(reps[c], gi)];
    gens.push_back(Perm(img));
  }
  return PermGroup((int)reps.size(), gens);
}

PermGroup point_stabilizer_action(const PermGroup& g, int x) {
  std::vector<int> stab = g.stabilizer(x);
  std::vector<Perm> elems;
  int n = g.degree();
  for (int e : stab) {
    const Perm& p = g.element(e);
    // relabel: drop point x-1 (0-based), shift higher points down
    std::vector<int> img(n - 1);
    for (int i = 0; i < n; ++i) {
      if (i == x - 1) continue;
      int from = i < x - 1 ? i : i - 1;
      int to = p(i) < x - 1 ? p(i) : p(i) - 1;
      img[from] = to;
    }
    elems.push_back(Perm(img));
  }
  std::sort(elems.begin(), elems.end());
  return PermGroup(n - 1, small_generating_set(elems));
}

PermGroup mathieu(int n) {
  switch (n) {
    case 11:
      return PermGroup(11, {Perm::parse_cycles(11, "(1,2,3,4,5,6,7,8,9,10,11)"),
                            Perm::parse_cycles(11, "(3,7,11,8)(4,10,5,6)")});
    case 12:
      return PermGroup(12, {Perm::parse_cycles(12, "(1,2,3,4,5,6,7,8,9,10,11)"),
                            Perm::parse_cycles(12, "(3,7,11,8)(4,10,5,6)"),
                            Perm::parse_cycles(12, "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)")});
    case 10:
      return point_stabilizer_action(mathieu(11), 11);
    case 21:
      return psl3_4_on_21();
    case 20:
      return point_stabilizer_action(mathieu(21), 21);
    case 22:
      return PermGroup(
          22, {Perm::parse_cycles(22, "(1,13)(2,8)(3,16)(4,12)(6,22)(7,17)(9,10)(11,14)"),
               Perm::parse_cycles(
                   22, "(1,22,3,21)(2,18,4,13)(5,12)(6,11,7,15)(8,14,20,10)(17,19)")});
    default:
      throw InvalidParameter("mathieu: n must be in {10,11,12,20,21,22}");
  }
}

PermGroup m11_on_12() {
  // M11 acting on the 12 cosets of a PSL(2,11) subgroup
  PermGroup m11 = mathieu(11);
  long long order = m11.order();
  // find <a, b> of order 660 with a of order 11, b an involution
  int a_idx = -1;
  for (long long x = 0; x < order; ++x)
    if (m11.element((int)x).order() == 11) {
      a_idx = (int)x;
      break;
    }
  for (long long b = 0; b < order; ++b) {
    if (m11.element((int)b).order() != 2) continue;
    try {
      std::vector<Perm> closure =
          group_closure({m11.element(a_idx), m11.element((int)b)}, 660);
      if ((long long)closure.size() == 660) {
        std::vector<int> sub;
        for (const Perm& p : closure) sub.push_back(m11.index_of(p));
        return coset_action(m11, sub);
      }
    } catch (const CapExceeded&) {
      continue;
    }
  }
  throw InvalidParameter("PSL(2,11) subgroup of M11 not found");
}

PermGroup psl2_11_on_11() {
  // PSL(2,11) acting on the 11 cosets of an A5 subgroup
  PermGroup g = psl2(11);
  long long order = g.order();
  std::vector<int> fives, invs;
  for (long long x = 0; x < order; ++x) {
    int o = g.element((int)x).order();
    if (o == 5) fives.push_back((int)x);
    if (o == 2) invs.push_back((int)x);
  }
  for (int a : fives) {
    for (int b : invs) {
      try {
        std::vector<Perm> closure = group_closure({g.element(a), g.element(b)}, 60);
        if ((long long)closure.size() == 60) {
          std::vector<int> sub;
          for (const Perm& p : closure) sub.push_back(g.index_of(p));
          return coset_action(g, sub);
        }
      } catch (const CapExceeded&) {
        continue;
      }
    }
  }
  throw InvalidParameter("A5 subgroup of PSL(2,11) not found");
}

PermGroup external_product(const std::vector<PermGroup>& factors) {
  if (factors.empty()) throw InvalidParameter("empty product");
  long long total = 1;
  for (const auto& f : factors) total *= f.degree();
  std::vector<Perm> gens;
  long long stride_after = total;
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    long long nf = factors[fi].degree();
    stride_after /= nf;
    for (const Perm& gen : factors[fi].generators()) {
      std::vector<int> img(total);
      for (long long x = 0; x < total; ++x) {
        long long coord = (x / stride_after) % nf;
        long long repl = gen((int)coord);
        img[x] = (int)(x + (repl - coord) * stride_after);
      }
      gens.push_back(Perm(img));
    }
  }
  return PermGroup((int)total, gens);
}

PermGroup internal_product(const std::vector<PermGroup>& factors) {
  int total = 0;
  for (const auto& f : factors) total += f.degree();
  std::vector<Perm> gens;
  int offset = 0;
  for (const auto& f : factors) {
    for (const Perm& gen : f.generators()) {
      std::vector<int> img(total);
      std::iota(img.begin(), img.end(), 0);
      for (int i = 0; i < f.degree(); ++i) img[offset + i] = offset + gen(i);
      gens.push_back(Perm(img));
    }
    offset += f.degree();
  }
  return PermGroup(total, gens);
}

PermGroup young_subgroup(const std::vector<int>& lambda) {
  std::vector<PermGroup> factors;
  for (int part : lambda) factors.push_back(symmetric_group(part));
  return internal_product(factors);
}

PermGroup wreath_product(const PermGroup& g, const PermGroup& h) {
  int m = g.degree(), n = h.degree();
  int total = m * n;
  std::vector<Perm> gens;
  // copy of G in each coordinate (H need not be transitive on coordinates)
  for (int j = 0; j < n; ++j)
    for (const Perm& gen : g.generators()) {
      std::vector<int> img(total);
      std::iota(img.begin(), img.end(), 0);
      for (int x = 0; x < m; ++x) img[j * m + x] = j * m + gen(x);
      gens.push_back(Perm(img));
    }
  for (const Perm& gen : h.generators()) {
    std::vector<int> img(total);
    for (int j = 0; j < n; ++j)
      for (int x = 0; x < m; ++x) img[j * m + x] = gen(j) * m + x;
    gens.push_back(Perm(img));
  }
  return PermGroup(total, gens);
}

Spectrum psl2_spectrum_closed_form(int q) {
  if (!is_prime_power(q)) throw InvalidParameter("q must be a prime power");
  Spectrum s;
  auto add = [&](long long v, long long m) {
    if (m > 0) s.entries.push_back({QuadraticValue(Rational(v)), m, true, (double)v});
  };
  if (q % 2 == 0) {
    add((long long)q * q * (q - 1) / 2, 1);
    add(-(long long)q * (q - 1) / 2, (long long)q * q);
    add(q, (long long)q * (q - 1) * (q - 1) / 2);
    add(0, (long long)(q + 1) * (q + 1) * (q - 2) / 2);
  } else {
    add((long long)q * (q - 1) * (q - 1) / 4, 1);
    add(-(long long)(q - 1) * (q - 1) / 4, (long long)q * q);
    add(q, (long long)(q - 1) * (q - 1) * (q - 1) / 4);
    add(0, (long long)(q + 1) * (q + 1) * (q - 3) / 4);
  }
  s.sort_descending();
  return s;
}

FrobeniusEvidence frobenius_structure_check(const PermGroup& g) {
  FrobeniusInfo fi = g.frobenius_info();
  if (!fi.frobenius) throw NotFrobenius("group is not Frobenius");
  int n = g.degree();
  Graph gamma = derangement_graph(g);
  FrobeniusEvidence ev;
  auto comps = connected_components(gamma);
  ev.component_count = (long long)comps.size();
  for (const auto& comp : comps) {
    if ((long long)comp.size() != n) ev.components_complete = false;
    for (size_t i = 0; i < comp.size() && ev.components_complete; ++i)
      for (size_t j = i + 1; j < comp.size(); ++j)
        if (!gamma.adjacent(comp[i], comp[j])) {
          ev.components_complete = false;
          break;
        }
  }
  // spectrum {n-1: |H|, -1: |H|(n-1)}
  Spectrum spec = cayley_spectrum_class_algebra(g, g.derangement_class_ids());
  Spectrum expected;
  expected.entries.push_back(
      {QuadraticValue(Rational(n - 1)), fi.complement_size, true, (double)(n - 1)});
  expected.entries.push_back(
      {QuadraticValue(Rational(-1)), fi.complement_size * (n - 1), true, -1.0});
  ev.spectrum_matches = spec.same_as(expected);
  BruteForceResult bf = brute_force_strict_check(g, g.derangement_class_ids());
  ev.ekr = bf.alpha == fi.complement_size;
  ev.strict = bf.all_maximum_are_cosets;
  if (ev.strict != (fi.complement_size == 2))
    throw Error("frobenius strictness disagrees with |H| = 2 criterion");
  return ev;
}

}  // namespace ekr
