#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ptw/fc_matrix.hpp"
#include "ptw/oracle.hpp"

using ptw::all_congruences;
using ptw::CongRelation;
using ptw::FCMatrix;
using ptw::principal_congruence;
using ptw::TwistedTable;

TEST_CASE("principal congruences") {
  TwistedTable t = ptw::build_monoid(2, 0);
  const auto& m = t.monoid;
  for (int a = 0; a < m.size; ++a)
    for (int b = a + 1; b < m.size; ++b) {
      CongRelation r = principal_congruence(m, a, b);
      CHECK(r.same(a, b));
      CHECK(ptw::is_congruence(m, r));
      // least congruence: any congruence containing (a,b) contains r
      CongRelation again = principal_congruence(m, b, a);
      CHECK(r == again);
    }
}

TEST_CASE("small congruence lattices by exhaustion") {
  auto count = [](int n, int d) {
    return all_congruences(ptw::build_monoid(n, d).monoid).size();
  };
  CHECK(count(1, 0) == 3);
  CHECK(count(1, 1) == 7);
  CHECK(count(1, 2) == 14);
  CHECK(count(2, 0) == 9);
  CHECK(count(2, 1) == 43);

  // the bounded degree-1 monoid with no twists allowed is a three element
  // chain of congruences
  auto cs = all_congruences(ptw::build_monoid(1, 0).monoid);
  for (std::size_t i = 0; i < cs.size(); ++i)
    CHECK(ptw::is_congruence(ptw::build_monoid(1, 0).monoid, cs[i]));
  CHECK(cs.front().classes() == 1);
  CHECK(cs.back().classes() == 3);
}

TEST_CASE("the plain partition monoid has the documented lattice size") {
  auto pn = ptw::build_pn_monoid(2);
  CHECK(pn.monoid.size == 15);
  CHECK(all_congruences(pn.monoid).size() == 13);
}

TEST_CASE("canonical form matters") {
  TwistedTable t = ptw::build_monoid(1, 0);
  CongRelation bad;
  bad.class_id = {1, 0, 2};  // same partition as the diagonal, wrong labels
  CHECK(!ptw::is_congruence(t.monoid, bad));
  CongRelation diag;
  diag.class_id = {0, 1, 2};
  CHECK(ptw::is_congruence(t.monoid, diag));
}

TEST_CASE("classification round trips through the relation") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}}) {
    TwistedTable t = ptw::build_monoid(n, d);
    for (const FCMatrix& M : ptw::enumerate_fc(n, d)) {
      CongRelation r = ptw::relation_of_matrix(t, M);
      CHECK(ptw::is_congruence(t.monoid, r));
      CHECK(ptw::classify(t, r) == M);
    }
  }
}

TEST_CASE("classification rejects non congruences") {
  TwistedTable t = ptw::build_monoid(2, 0);
  int id = t.monoid.identity;
  int zero = t.zero_index();
  CongRelation r;
  r.class_id.resize(t.monoid.size);
  for (int i = 0; i < t.monoid.size; ++i) r.class_id[i] = i;
  r.class_id[std::max(id, zero)] = std::min(id, zero);
  CHECK(!ptw::is_congruence(t.monoid, r));
  CHECK_THROWS(ptw::classify(t, r));
}

TEST_CASE("forgetting twists lands on partition congruences") {
  // Dropping twists sends a congruence of the untruncated monoid onto a
  // congruence of the plain partition monoid. With a twist ceiling the
  // proof's shift argument can fall into the zero class, so some relations
  // of the finite table project outside the lattice; the counts are pinned.
  TwistedTable t = ptw::build_monoid(2, 1);
  auto congs = all_congruences(t.monoid);
  auto pn = ptw::build_pn_monoid(2);
  auto pn_congs = all_congruences(pn.monoid);
  std::sort(pn_congs.begin(), pn_congs.end());
  int landed = 0;
  for (const CongRelation& r : congs) {
    CongRelation proj = ptw::project_to_Pn(t, r);
    bool member = std::binary_search(pn_congs.begin(), pn_congs.end(), proj);
    CHECK(member == ptw::is_congruence(pn.monoid, proj));
    landed += member ? 1 : 0;
  }
  CHECK(congs.size() == 43);
  CHECK(landed == 35);

  // the extremes always land
  CHECK(ptw::project_to_Pn(t, congs.front()).classes() == 1);
  CHECK(ptw::project_to_Pn(t, congs.back()).classes() == 15);

  // relations that never touch the zero class project onto congruences:
  // their witnesses never truncate away
  for (const CongRelation& r : congs) {
    if (r.class_id[t.zero_index()] != t.zero_index()) continue;
    bool zero_alone = true;
    for (int e = 0; e < t.monoid.size - 1; ++e)
      if (r.class_id[e] == t.zero_index()) zero_alone = false;
    if (!zero_alone) continue;
    CongRelation proj = ptw::project_to_Pn(t, r);
    CHECK(std::binary_search(pn_congs.begin(), pn_congs.end(), proj));
  }
}

TEST_CASE("relation of the extreme matrices") {
  TwistedTable t = ptw::build_monoid(2, 1);
  auto all = ptw::enumerate_fc(2, 1);
  int bottom = -1, top = -1;
  for (std::size_t k = 0; k < all.size(); ++k) {
    bool all_d = true, all_r = true;
    for (int q = 0; q <= 2; ++q)
      for (int c = 0; c <= 1; ++c) {
        all_d &= all[k].entry(q, c) == ptw::Symbol::delta();
        all_r &= all[k].entry(q, c) == ptw::Symbol::big_r();
      }
    if (all_d) bottom = static_cast<int>(k);
    if (all_r) top = static_cast<int>(k);
  }
  REQUIRE(bottom >= 0);
  REQUIRE(top >= 0);
  CHECK(ptw::relation_of_matrix(t, all[bottom]).classes() == t.monoid.size);
  CHECK(ptw::relation_of_matrix(t, all[top]).classes() == 1);
}
