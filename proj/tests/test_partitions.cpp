#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "ekr/alt_characters.hpp"
#include "ekr/characters.hpp"
#include "ekr/errors.hpp"
#include "ekr/partition.hpp"
#include "ekr/perm.hpp"
#include "ekr/quadratic.hpp"

using namespace ekr;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

int128 factorial(int n) {
  int128 f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// independent oracle: cycle type census over all of Sym(n)
std::map<std::vector<int>, long long> cycle_type_census(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::map<std::vector<int>, long long> census;
  do {
    ++census[Perm(std::vector<int>(p)).cycle_type()];
  } while (std::next_permutation(p.begin(), p.end()));
  return census;
}

}  // namespace

TEST_CASE("partitions_of enumeration") {
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == P({4}));
  CHECK(p4[1] == P({3, 1}));
  CHECK(p4[2] == P({2, 2}));
  CHECK(p4[3] == P({2, 1, 1}));
  CHECK(p4[4] == P({1, 1, 1, 1}));
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(10).size() == 42);
  for (int n = 1; n <= 14; ++n)
    CHECK((long long)partitions_of(n).size() == partition_count(n));
}

TEST_CASE("transpose") {
  CHECK(P({5, 3, 3, 2, 1, 1}).transpose() == P({6, 4, 3, 1, 1}));
  CHECK(P({7}).transpose() == P({1, 1, 1, 1, 1, 1, 1}));
  CHECK(P({2, 1}).transpose() == P({2, 1}));
  for (const Partition& lam : partitions_of(9)) CHECK(lam.transpose().transpose() == lam);
}

TEST_CASE("hook length formula") {
  CHECK(dimension(P({5, 3, 3, 2, 1})) == 64064);
  CHECK(hook_length_product(P({5, 3, 3, 2, 1})) ==
        (int128)9 * 7 * 5 * 2 * 1 * 6 * 4 * 2 * 5 * 3 * 1 * 3 * 1 * 1);
  for (int n : {1, 4, 9}) {
    CHECK(dimension(P({n})) == 1);
    CHECK(dimension(P(std::vector<int>(n, 1))) == 1);
    if (n >= 2) CHECK(dimension(P({n - 1, 1})) == n - 1);
  }
  // dim(lambda) = dim(transpose), and sum of squares is n!
  for (int n = 2; n <= 10; ++n) {
    int128 sum = 0;
    for (const Partition& lam : partitions_of(n)) {
      CHECK(dimension(lam) == dimension(lam.transpose()));
      sum += dimension(lam) * dimension(lam);
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("class sizes against brute-force census") {
  for (int n = 1; n <= 7; ++n) {
    auto census = cycle_type_census(n);
    int128 total = 0;
    for (const Partition& rho : partitions_of(n)) {
      CHECK(class_size(rho) == (int128)census.at(rho.parts()));
      total += class_size(rho);
    }
    CHECK(total == factorial(n));
  }
  // closed forms
  CHECK(class_size(P({6})) == 120);                       // (n-1)!
  CHECK(class_size(P({1, 1, 1, 1})) == 1);
  CHECK(class_size(P({3, 1, 1, 1})) == 2 * 20);           // (m-1)! * C(6,3) with n=6,m=3
}

TEST_CASE("skew hooks") {
  auto h = skew_hooks(P({5, 4, 4, 2, 1, 1}), 4);
  CHECK(h.size() == 3);  // Figure with three strips of length 4
  for (const auto& r : h) CHECK(r.remainder.n() == 13);

  auto h22 = skew_hooks(P({2, 2}), 3);
  REQUIRE(h22.size() == 1);
  CHECK(h22[0].remainder == P({1}));
  CHECK(h22[0].height_minus_one == 1);

  // hooks [r,1^(n-r)] have exactly one strip of length n with r(mu) = n - r
  for (int n = 4; n <= 8; ++n)
    for (int r = 1; r <= n; ++r) {
      std::vector<int> parts{r};
      for (int i = 0; i < n - r; ++i) parts.push_back(1);
      auto hs = skew_hooks(P(parts), n);
      REQUIRE(hs.size() == 1);
      CHECK(hs[0].remainder.empty());
      CHECK(hs[0].height_minus_one == n - r);
    }
}

TEST_CASE("murnaghan-nakayama closed forms") {
  // n-cycle: (-1)^(n-r) on hooks, 0 elsewhere
  for (int n = 3; n <= 12; ++n) {
    Partition ncycle(std::vector<int>{n});
    for (const Partition& lam : partitions_of(n)) {
      long long chi = mn_character(lam, ncycle);
      if (lam.is_hook() || lam == P({n}) || lam.parts() == std::vector<int>(n, 1)) {
        int r = lam.part(0);
        CHECK(chi == (((n - r) % 2 == 0) ? 1 : -1));
      } else {
        CHECK(chi == 0);
      }
    }
  }
  CHECK(mn_character(P({3, 1, 1}), P({5})) == 1);
  // trivial and sign characters
  for (int n = 2; n <= 8; ++n)
    for (const Partition& rho : partitions_of(n)) {
      CHECK(mn_character(P({n}), rho) == 1);
      CHECK(mn_character(P(std::vector<int>(n, 1)), rho) == sign_of_class(rho));
      if (n >= 3) {
        long long fixed = 0;
        for (int part : rho.parts()) fixed += (part == 1);
        CHECK(mn_character(P({n - 1, 1}), rho) == fixed - 1);
      }
    }
}

TEST_CASE("mn transpose symmetry and orthogonality") {
  for (int n = 2; n <= 10; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Partition& rho : partitions_of(n))
        CHECK(mn_character(lam, rho) ==
              sign_of_class(rho) * mn_character(lam.transpose(), rho));
  // first orthogonality: sum_rho |rho| chi^l(rho) chi^m(rho) = n! [l == m]
  for (int n = 2; n <= 8; ++n) {
    auto lams = partitions_of(n);
    for (const Partition& l : lams)
      for (const Partition& m : lams) {
        int128 s = 0;
        for (const Partition& rho : partitions_of(n))
          s += class_size(rho) * mn_character(l, rho) * mn_character(m, rho);
        CHECK(s == (l == m ? factorial(n) : 0));
      }
  }
}

TEST_CASE("two n/2-cycles take values in 0,+-1,+-2") {
  for (int n = 4; n <= 14; n += 2) {
    Partition rho({n / 2, n / 2});
    for (const Partition& lam : partitions_of(n)) {
      long long chi = mn_character(lam, rho);
      CHECK(chi >= -2);
      CHECK(chi <= 2);
      if (chi == -2) {
        bool ok = lam.is_two_layer_hook() || (lam.is_near_hook() && lam.is_symmetric());
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("hook predicates and dimension bounds") {
  CHECK(P({5, 4, 2, 2, 1}).is_two_layer_hook());
  CHECK(P({6, 4, 2, 1, 1}).is_two_layer_hook());
  CHECK(P({4, 3, 1}).is_two_layer_hook());
  CHECK(!P({4, 1, 1}).is_two_layer_hook());  // a hook
  CHECK(P({4, 1, 1}).is_hook());
  CHECK(P({4, 2, 1, 1}).is_near_hook());
  CHECK(!P({4, 2, 1, 1}).is_two_layer_hook());  // a near hook
  // n even >= 8 for two-layer hooks
  for (int n = 3; n <= 20; ++n)
    for (const Partition& lam : partitions_of(n))
      if (lam.is_two_layer_hook()) {
        CHECK(n % 2 == 0);
        CHECK(n >= 8);
        CHECK(dimension(lam) > 2 * n - 2);
      }
  // symmetric near hooks n >= 8: dimension > 2n-2
  for (int n = 8; n <= 20; n += 2) {
    Partition lam = [&] {
      std::vector<int> parts{n / 2, 2};
      for (int i = 0; i < n / 2 - 2; ++i) parts.push_back(1);
      return P(parts);
    }();
    CHECK(lam.is_near_hook());
    CHECK(lam.is_symmetric());
    CHECK(dimension(lam) > 2 * n - 2);
  }
}

TEST_CASE("split class partitions") {
  CHECK(split_class_partition({11, 9, 3}) == P({6, 6, 4, 3, 2, 2}));
  CHECK(split_class_partition({7}) == P({4, 1, 1, 1}));
  CHECK(split_class_partition({5, 3, 1}) == P({3, 3, 3}));
  CHECK_THROWS_AS(split_class_partition({4, 2}), InvalidSplitClass);
  CHECK_THROWS_AS(split_class_partition({5, 5}), InvalidSplitClass);
  CHECK(class_splits(P({5})));
  CHECK(class_splits(P({5, 3, 1})));
  CHECK(!class_splits(P({4, 2})));
  CHECK(!class_splits(P({3, 3, 1})));
}

TEST_CASE("alt characters") {
  // x + y and x*y for the split pair of lambda = [3,1,1] (n = 5, q = (5))
  auto [x, y] = split_character_pair(P({3, 1, 1}));
  CHECK(x + y == QuadraticValue(Rational(1)));               // (-1)^m = 1, m = 2
  CHECK(x * y == QuadraticValue(Rational(1 - 5, 4)));        // (1 - 5)/4 = -1
  CHECK(x.d() == 5);

  // non-symmetric lambda: equal on both halves
  AltCharacter std5{P({4, 1}), false, 0};
  AltClass c5a{P({5}), true, 0}, c5b{P({5}), true, 1};
  CHECK(alt_character(std5, c5a) == alt_character(std5, c5b));

  // symmetric lambda on a non-corresponding split class: both halves get chi/2
  AltCharacter sym331_0{P({3, 3, 3}), true, 0};
  // class (9) corresponds to [5,1,1,1,1], not [3,3,3]
  AltClass c9a{P({9}), true, 0};
  AltClass c9b{P({9}), true, 1};
  CHECK(alt_character(sym331_0, c9a) == alt_character(sym331_0, c9b));
  CHECK(alt_character(sym331_0, c9a).is_rational());

  // corresponding class: halves get x and y
  AltCharacter chi1{P({3, 1, 1}), true, 0}, chi2{P({3, 1, 1}), true, 1};
  CHECK(alt_character(chi1, c5a) == x);
  CHECK(alt_character(chi1, c5b) == y);
  CHECK(alt_character(chi2, c5a) == y);
  CHECK(alt_character(chi2, c5b) == x);

  // dimension bookkeeping: sum of dim^2 over Irr(Alt(n)) = n!/2
  for (int n = 3; n <= 9; ++n) {
    int128 sum = 0;
    for (const AltCharacter& chi : alt_irreducibles(n)) sum += chi.dim() * chi.dim();
    CHECK(sum == factorial(n) / 2);
  }
}

TEST_CASE("conjecture 7.7 scan") {
  CHECK(conjecture_7_7_scan(10).empty());
  CHECK(!conjecture_7_7_scan(6).empty());  // small-n violations exist
}

TEST_CASE("quadratic value arithmetic") {
  QuadraticValue v(Rational(1, 2), Rational(3), 12);  // normalizes to sqrt(3)
  CHECK(v.d() == 3);
  CHECK(v.b() == Rational(6));
  QuadraticValue w(Rational(0), Rational(1), 5);
  CHECK(w * w == QuadraticValue(Rational(5)));
  CHECK((w * w.conjugate()) == QuadraticValue(Rational(-5)));
  CHECK(QuadraticValue(Rational(2)) < QuadraticValue(Rational(0), Rational(1), 5));
  CHECK(QuadraticValue(Rational(0), Rational(1), 5) < QuadraticValue(Rational(3)));
  CHECK(QuadraticValue(Rational(0), Rational(-1), 5) < QuadraticValue(Rational(-2)));
}
