#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptw/partition.hpp"

using ptw::greens;
using ptw::hat;
using ptw::multiply;
using ptw::NormalSubgroup;
using ptw::Partition;
using ptw::Perm;
using ptw::subgroup_contains;

namespace {

// Permutation diagram: upper v joined to lower pi(v).
Partition perm_diagram(const Perm& pi) {
  int n = pi.degree();
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) blocks.push_back({v, n + pi(v - 1) + 1});
  return Partition(n, std::move(blocks));
}

}  // namespace

TEST_CASE("permutations") {
  Perm id = Perm::identity(3);
  CHECK(id.is_identity());
  CHECK(id.is_even());
  Perm swap({1, 0, 2});
  CHECK(!swap.is_even());
  CHECK(swap.then(swap) == id);
  CHECK(swap.inverse() == swap);
  Perm cyc({1, 2, 0});
  CHECK(cyc.is_even());
  CHECK(cyc.cycle_type() == std::vector<int>{3});
  CHECK(cyc.then(cyc.inverse()) == id);
  // then applies the left factor first
  Perm t({0, 2, 1});
  CHECK(swap.then(t) == Perm({2, 0, 1}));
}

TEST_CASE("normal subgroups") {
  CHECK(ptw::nontrivial_normal_subgroups(2).size() == 1);
  CHECK(ptw::nontrivial_normal_subgroups(3).size() == 2);
  CHECK(ptw::nontrivial_normal_subgroups(4).size() == 3);
  CHECK(ptw::nontrivial_normal_subgroups(5).size() == 2);
  CHECK(NormalSubgroup::alternating(2).is_trivial_set());
  CHECK(!NormalSubgroup::symmetric(2).is_trivial_set());
  CHECK(NormalSubgroup::klein4().label() == "K4");

  Perm swap({1, 0, 2});
  Perm three({1, 2, 0});
  CHECK(subgroup_contains(NormalSubgroup::symmetric(3), swap));
  CHECK(!subgroup_contains(NormalSubgroup::alternating(3), swap));
  CHECK(subgroup_contains(NormalSubgroup::alternating(3), three));
  CHECK(!subgroup_contains(NormalSubgroup::trivial(3), three));
  Perm double_swap({1, 0, 3, 2});
  CHECK(subgroup_contains(NormalSubgroup::klein4(), double_swap));
  CHECK(!subgroup_contains(NormalSubgroup::klein4(), Perm({1, 2, 3, 0})));
}

TEST_CASE("partition basics") {
  CHECK(ptw::enumerate_partitions(1).size() == 2);
  CHECK(ptw::enumerate_partitions(2).size() == 15);
  CHECK(ptw::enumerate_partitions(3).size() == 203);
  CHECK(ptw::enumerate_partitions(4).size() == 4140);

  CHECK_THROWS_AS(Partition(2, {{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(2, {{1, 2}, {2, 3, 4}}), std::invalid_argument);

  Partition id = Partition::identity(2);
  CHECK(id.rank() == 2);
  CHECK(id.ker_rep(2) == 2);
  CHECK(id.upper_in_transversal(1));
  CHECK(Partition::omega(2).rank() == 1);

  std::set<std::string> keys;
  for (const Partition& a : ptw::enumerate_partitions(3)) keys.insert(a.key());
  CHECK(keys.size() == 203);
}

TEST_CASE("product and floats") {
  // The rank-0 idempotent of degree 1 squares to itself with one float.
  Partition a(1, {{1}, {2}});
  auto [sq, floats] = multiply(a, a);
  CHECK(sq == a);
  CHECK(floats == 1);

  const auto all2 = ptw::enumerate_partitions(2);
  Partition id = Partition::identity(2);
  for (const Partition& x : all2) {
    auto l = multiply(id, x);
    auto r = multiply(x, id);
    CHECK(l.product == x);
    CHECK(l.floats == 0);
    CHECK(r.product == x);
    CHECK(r.floats == 0);
  }

  // Associativity and the float cocycle identity, exhaustively on degree 2:
  // floats(a,b) + floats(ab,c) == floats(b,c) + floats(a,bc).
  for (const Partition& x : all2)
    for (const Partition& y : all2) {
      auto xy = multiply(x, y);
      for (const Partition& z : all2) {
        auto yz = multiply(y, z);
        auto left = multiply(xy.product, z);
        auto right = multiply(x, yz.product);
        CHECK(left.product == right.product);
        CHECK(xy.floats + left.floats == yz.floats + right.floats);
      }
    }
}

TEST_CASE("star is an anti-automorphism") {
  const auto all2 = ptw::enumerate_partitions(2);
  for (const Partition& x : all2) {
    CHECK(x.star().star() == x);
    for (const Partition& y : all2) {
      auto xy = multiply(x, y);
      auto yx = multiply(y.star(), x.star());
      CHECK(xy.product.star() == yx.product);
      CHECK(xy.floats == yx.floats);
    }
  }
}

TEST_CASE("hat splits transversals") {
  for (const Partition& x : ptw::enumerate_partitions(2)) {
    Partition h = hat(x);
    CHECK(h.rank() == 0);
    CHECK(hat(h) == h);
    if (x.rank() == 0) CHECK(h == x);
    // kernel and cokernel are preserved
    for (int v = 1; v <= 2; ++v) {
      CHECK(h.ker_rep(v) == x.ker_rep(v));
      CHECK(h.coker_rep(v) == x.coker_rep(v));
    }
  }
}

TEST_CASE("greens relations against products") {
  const auto all2 = ptw::enumerate_partitions(2);
  auto reach_r = [&](const Partition& a, const Partition& b) {
    for (const Partition& u : all2)
      if (multiply(a, u).product == b) return true;
    return false;
  };
  auto reach_l = [&](const Partition& a, const Partition& b) {
    for (const Partition& u : all2)
      if (multiply(u, a).product == b) return true;
    return false;
  };
  auto reach_j = [&](const Partition& a, const Partition& b) {
    if (a == b) return true;
    for (const Partition& u : all2)
      for (const Partition& v : all2)
        if (multiply(multiply(u, a).product, v).product == b) return true;
    if (reach_r(a, b) || reach_l(a, b)) return true;  // one-sided factors
    return false;
  };
  for (const Partition& a : all2)
    for (const Partition& b : all2) {
      bool r = reach_r(a, b) && reach_r(b, a);
      bool l = reach_l(a, b) && reach_l(b, a);
      bool j = reach_j(a, b) && reach_j(b, a);
      CHECK(greens(a, b, 'R') == r);
      CHECK(greens(a, b, 'L') == l);
      CHECK(greens(a, b, 'H') == (r && l));
      CHECK(greens(a, b, 'D') == j);
      CHECK(greens(a, b, 'D') == (a.rank() == b.rank()));
    }
}

TEST_CASE("permutational difference") {
  // On permutation diagrams the difference of a and b behaves like the
  // quotient: its parity is the product of the two parities.
  for (int n : {2, 3}) {
    std::vector<Perm> perms;
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    do {
      perms.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    for (const Perm& p1 : perms)
      for (const Perm& p2 : perms) {
        Partition a = perm_diagram(p1);
        Partition b = perm_diagram(p2);
        REQUIRE(greens(a, b, 'H'));
        Perm diff = ptw::pd(a, b);
        CHECK(diff.is_even() == (p1.is_even() == p2.is_even()));
        if (p1 == p2) CHECK(diff.is_identity());
      }
  }

  // Rank-1 H-classes have trivial differences.
  Partition a(2, {{1, 3}, {2}, {4}});
  CHECK(ptw::pd(a, a).is_identity());
}
