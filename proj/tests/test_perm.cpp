#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ekr/errors.hpp"
#include "ekr/perm.hpp"
#include "ekr/perm_group.hpp"

using namespace ekr;

namespace {

Perm cyc(int n, const std::string& s) { return Perm::parse_cycles(n, s); }

PermGroup sym(int n) {
  std::vector<Perm> gens{cyc(n, "(1,2)")};
  std::vector<int> big(n);
  std::iota(big.begin(), big.end(), 0);
  std::rotate(big.begin(), big.begin() + 1, big.end());
  gens.push_back(Perm(big));
  return PermGroup(n, gens);
}

// brute-force derangement count on all of Sym(n)
long long derangements_brute(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do {
    bool fix = false;
    for (int i = 0; i < n; ++i)
      if (p[i] == i) {
        fix = true;
        break;
      }
    if (!fix) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("compose basics") {
  CHECK((cyc(3, "(1,2,3)") * cyc(3, "(1,3,2)")).is_identity());
  Perm p = cyc(5, "(2,4)(3,5)");
  CHECK(Perm(5) * p == p);
  // (1 2) after (2 3): image map [2,3,1]
  Perm t12 = cyc(3, "(1,2)");
  Perm t23 = cyc(3, "(2,3)");
  CHECK((t12 * t23).images() == std::vector<int>{1, 2, 0});
  CHECK((t12 * t23) == cyc(3, "(1,2,3)"));
  CHECK_THROWS_AS(cyc(3, "(1,2)") * cyc(4, "(1,2)"), DegreeMismatch);
}

TEST_CASE("inverse, parity, order, cycle type") {
  Perm p = cyc(7, "(1,2,3)(4,5)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.cycle_type() == std::vector<int>{3, 2, 1, 1});
  CHECK(p.order() == 6);
  CHECK(!p.even());
  CHECK(cyc(5, "(1,2,3)").even());
  CHECK(cyc(5, "(1,2,3)").cycles() == "(1,2,3)");
  CHECK(Perm(4).cycles() == "()");
}

TEST_CASE("enumerate elements") {
  PermGroup c5(5, {cyc(5, "(1,2,3,4,5)")});
  CHECK(c5.order() == 5);
  CHECK(sym(4).order() == 24);
  // deterministic canonical order: identity first
  CHECK(sym(4).element(0).is_identity());
  CHECK_THROWS_AS(sym(8).order(1000), CapExceeded);
}

TEST_CASE("derangements") {
  PermGroup s3 = sym(3);
  auto d = s3.derangement_indices();
  CHECK(d.size() == 2);
  for (int i : d) CHECK(s3.element(i).cycle_type() == std::vector<int>{3});
  CHECK(sym(4).derangement_indices().size() == 9);
  CHECK(derangements_brute(4) == 9);
  CHECK((long long)sym(6).derangement_indices().size() == derangements_brute(6));
  PermGroup trivial(4, {Perm(4)});
  CHECK(trivial.derangement_indices().empty());
}

TEST_CASE("conjugacy classes") {
  PermGroup s3 = sym(3);
  auto classes = s3.conjugacy_classes();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].size() == 1);
  CHECK(classes[1].size() == 2);
  CHECK(classes[2].size() == 3);
  // class sizes divide |G|
  for (const auto& c : classes) CHECK(6 % c.size() == 0);

  // abelian: all classes singletons
  PermGroup c6(6, {cyc(6, "(1,2,3,4,5,6)")});
  for (const auto& c : c6.conjugacy_classes()) CHECK(c.size() == 1);

  // Alt(5): 5-cycles split into two classes of size 12
  PermGroup a5(5, {cyc(5, "(1,2,3)"), cyc(5, "(3,4,5)")});
  CHECK(a5.order() == 60);
  int split_count = 0;
  for (const auto& c : a5.conjugacy_classes())
    if (c.cycle_type == std::vector<int>{5}) {
      CHECK(c.size() == 12);
      ++split_count;
    }
  CHECK(split_count == 2);
}

TEST_CASE("transitivity") {
  CHECK(sym(4).transitivity_degree(4) == 4);
  PermGroup d5(5, {cyc(5, "(1,2,3,4,5)"), cyc(5, "(2,5)(3,4)")});
  CHECK(d5.order() == 10);
  CHECK(d5.transitivity_degree(3) == 1);
  PermGroup m11(11, {cyc(11, "(1,2,3,4,5,6,7,8,9,10,11)"), cyc(11, "(3,7,11,8)(4,10,5,6)")});
  CHECK(m11.order() == 7920);
  CHECK(m11.transitivity_degree(5) == 4);
}

TEST_CASE("stabilizers and cosets") {
  PermGroup s3 = sym(3);
  auto s11 = s3.coset_of_stabilizer(1, 1);
  REQUIRE(s11.size() == 2);
  CHECK(s3.element(s11[0]).is_identity());
  CHECK(s3.element(s11[1]) == cyc(3, "(2,3)"));
  PermGroup c2(2, {cyc(2, "(1,2)")});
  auto s12 = c2.coset_of_stabilizer(1, 2);
  REQUIRE(s12.size() == 1);
  CHECK(c2.element(s12[0]) == cyc(2, "(1,2)"));
  // transitive: |S_ij| = |G|/n
  PermGroup a5(5, {cyc(5, "(1,2,3)"), cyc(5, "(3,4,5)")});
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(a5.coset_of_stabilizer(i, j).size() == 12);
}

TEST_CASE("orbit-stabilizer and burnside") {
  for (int n = 3; n <= 5; ++n) {
    PermGroup g = sym(n);
    CHECK((long long)g.stabilizer(1).size() * n == g.order());
    long long fix_sum = 0, fix_sq = 0;
    for (const Perm& p : g.elements()) {
      fix_sum += p.fixed_points();
      fix_sq += (long long)p.fixed_points() * p.fixed_points();
    }
    CHECK(fix_sum == g.order());      // transitive: 1 orbit
    CHECK(fix_sq == 2 * g.order());   // 2-transitive: 2 orbits on pairs
  }
}

TEST_CASE("derangement set closed under conjugation and inversion") {
  PermGroup s4 = sym(4);
  auto d = s4.derangement_indices();
  std::set<int> ds(d.begin(), d.end());
  for (int i : d) {
    CHECK(ds.count(s4.inverse_index(i)));
    for (const Perm& g : s4.generators())
      CHECK(ds.count(s4.index_of(s4.element(i).conjugate_by(g))));
  }
}

TEST_CASE("frobenius recognition") {
  PermGroup d5(5, {cyc(5, "(1,2,3,4,5)"), cyc(5, "(2,5)(3,4)")});
  auto f = d5.frobenius_info();
  CHECK(f.frobenius);
  CHECK(f.kernel_size == 5);
  CHECK(f.complement_size == 2);
  CHECK(d5.derangement_indices().size() == 4);  // |K| - 1 = n - 1

  CHECK(!sym(4).frobenius_info().frobenius);  // (1 2) fixes 3 and 4

  // Z7 : Z3, x -> 2x mod 7 has order 3
  PermGroup f21(7, {cyc(7, "(1,2,3,4,5,6,7)"), cyc(7, "(2,3,5)(4,7,6)")});
  CHECK(f21.order() == 21);
  auto f2 = f21.frobenius_info();
  CHECK(f2.frobenius);
  CHECK(f2.complement_size == 3);
  CHECK(f21.derangement_indices().size() == 6);
}

TEST_CASE("derived subgroup") {
  PermGroup s4 = sym(4);
  auto der = s4.derived_subgroup();
  CHECK(der.size() == 12);  // Alt(4)
  for (int i : der) CHECK(s4.element(i).even());
}

TEST_CASE("small generating set") {
  PermGroup s4 = sym(4);
  std::vector<Perm> elems = s4.elements();
  auto gens = small_generating_set(elems);
  CHECK(gens.size() <= 3);
  CHECK(group_closure(gens, 100).size() == 24);
}
