#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ptw/fc_matrix.hpp"
#include "ptw/symbols.hpp"

using ptw::FCMatrix;
using ptw::Lattice;
using ptw::Symbol;

namespace {

std::string key_of(const FCMatrix& M) {
  std::string k;
  for (int q = 0; q <= M.n(); ++q)
    for (int i = 0; i <= M.d(); ++i) k += M.entry(q, i).token() + ",";
  return k;
}

}  // namespace

TEST_CASE("matrix counts") {
  CHECK(ptw::enumerate_fc(1, 0).size() == 3);
  CHECK(ptw::enumerate_fc(1, 1).size() == 7);
  CHECK(ptw::enumerate_fc(1, 2).size() == 14);
  CHECK(ptw::enumerate_fc(1, 4).size() == 37);
  CHECK(ptw::enumerate_fc(2, 0).size() == 9);
  CHECK(ptw::enumerate_fc(2, 1).size() == 43);
  CHECK(ptw::enumerate_fc(3, 0).size() == 12);
  CHECK(ptw::enumerate_fc(4, 0).size() == 16);
}

TEST_CASE("enumeration equals brute force filtering") {
  // Every grid over the alphabet, kept iff it validates, must reproduce
  // the enumeration exactly.
  for (auto [n, d] : std::vector<std::pair<int, int>>{
           {1, 0}, {1, 1}, {2, 0}, {2, 1}}) {
    const auto alpha = ptw::symbol_alphabet(n);
    int cells = (n + 1) * (d + 1);
    std::set<std::string> filtered;
    std::vector<int> pick(cells, 0);
    for (;;) {
      std::vector<std::vector<Symbol>> rows(n + 1);
      int c = 0;
      for (int q = 0; q <= n; ++q)
        for (int i = 0; i <= d; ++i) rows[q].push_back(alpha[pick[c++]]);
      FCMatrix M(n, d, std::move(rows));
      if (!ptw::validate_fc(M)) filtered.insert(key_of(M));
      int pos = cells - 1;
      while (pos >= 0 && pick[pos] + 1 == static_cast<int>(alpha.size()))
        pick[pos--] = 0;
      if (pos < 0) break;
      ++pick[pos];
    }
    std::set<std::string> enumerated;
    for (const FCMatrix& M : ptw::enumerate_fc(n, d)) {
      CHECK(!ptw::validate_fc(M).has_value());
      enumerated.insert(key_of(M));
    }
    CHECK(enumerated.size() == ptw::enumerate_fc(n, d).size());
    CHECK_MESSAGE(filtered == enumerated, "degree ", n, " bound ", d);
  }
}

TEST_CASE("named families match the enumeration") {
  for (int n : {2, 3, 4}) {
    auto fam = ptw::family_d0(n);
    auto all = ptw::enumerate_fc(n, 0);
    CHECK(fam.size() == all.size());
    std::set<std::string> a, b;
    std::set<std::string> names;
    for (auto& [name, M] : fam) {
      CHECK(!ptw::validate_fc(M).has_value());
      a.insert(key_of(M));
      names.insert(name);
    }
    for (auto& M : all) b.insert(key_of(M));
    CHECK(a == b);
    CHECK(names.size() == fam.size());
  }
  for (int d : {1, 2, 4}) {
    auto fam = ptw::family_n1(d);
    auto all = ptw::enumerate_fc(1, d);
    CHECK(fam.size() == all.size());
    std::set<std::string> a, b;
    for (auto& [name, M] : fam) {
      CHECK(!ptw::validate_fc(M).has_value());
      a.insert(key_of(M));
    }
    for (auto& M : all) b.insert(key_of(M));
    CHECK(a == b);
  }
}

TEST_CASE("the degree one family sizes follow the closed form") {
  for (int d = 1; d <= 6; ++d) {
    std::size_t expect = (d + 2) * (d + 3) / 2 + (d + 1) * d / 2 + d * (d - 1) / 2;
    CHECK(ptw::enumerate_fc(1, d).size() == expect);
  }
}

TEST_CASE("containment is an order with the right extremes") {
  Lattice L = ptw::build_lattice(2, 1);
  std::size_t N = L.nodes.size();
  REQUIRE(N == 43);

  int bottom = -1, top = -1;
  for (std::size_t i = 0; i < N; ++i) {
    bool all_delta = true, all_r = true;
    for (int q = 0; q <= 2; ++q)
      for (int c = 0; c <= 1; ++c) {
        all_delta &= L.nodes[i].entry(q, c) == Symbol::delta();
        all_r &= L.nodes[i].entry(q, c) == Symbol::big_r();
      }
    if (all_delta) bottom = static_cast<int>(i);
    if (all_r) top = static_cast<int>(i);
  }
  REQUIRE(bottom >= 0);
  REQUIRE(top >= 0);
  for (std::size_t i = 0; i < N; ++i) {
    CHECK(L.leq[bottom][i]);
    CHECK(L.leq[i][top]);
    CHECK(L.leq[i][i]);
    for (std::size_t j = 0; j < N; ++j) {
      if (i != j && L.leq[i][j]) CHECK(!L.leq[j][i]);
      for (std::size_t k = 0; k < N; ++k)
        if (L.leq[i][j] && L.leq[j][k]) CHECK(L.leq[i][k]);
    }
  }

  // covering pairs: related, nothing strictly between
  for (auto [lo, hi] : L.hasse) {
    CHECK(L.leq[lo][hi]);
    CHECK(lo != hi);
    for (std::size_t m = 0; m < N; ++m)
      if (static_cast<int>(m) != lo && static_cast<int>(m) != hi)
        CHECK(!(L.leq[lo][m] && L.leq[m][hi]));
  }

  // the Rees nodes form a chain-free sublattice marker: staircases only
  for (int r : L.rees) {
    for (int q = 0; q <= 2; ++q)
      for (int c = 0; c <= 1; ++c) {
        auto s = L.nodes[r].entry(q, c);
        CHECK((s == Symbol::delta() || s == Symbol::big_r()));
      }
  }
  CHECK(std::find(L.rees.begin(), L.rees.end(), top) != L.rees.end());
  CHECK(std::find(L.rees.begin(), L.rees.end(), bottom) != L.rees.end());
}

TEST_CASE("appending a full column embeds the smaller lattice") {
  auto base = ptw::enumerate_fc(2, 0);
  auto big = ptw::enumerate_fc(2, 1);
  std::set<std::string> big_keys;
  for (const FCMatrix& M : big) big_keys.insert(key_of(M));

  auto lift = [](const FCMatrix& M) {
    std::vector<std::vector<Symbol>> rows;
    for (int q = 0; q <= M.n(); ++q) {
      rows.push_back(M.row(q));
      rows.back().push_back(Symbol::big_r());
    }
    return FCMatrix(M.n(), M.d() + 1, std::move(rows));
  };

  std::size_t with_full_last = 0;
  for (const FCMatrix& M : big) {
    bool full = true;
    for (int q = 0; q <= 2; ++q) full &= M.entry(q, 1) == Symbol::big_r();
    if (full) ++with_full_last;
  }
  CHECK(with_full_last == base.size());

  for (const FCMatrix& A : base) {
    FCMatrix LA = lift(A);
    CHECK(!ptw::validate_fc(LA).has_value());
    CHECK(big_keys.count(key_of(LA)) == 1);
    for (const FCMatrix& B : base)
      CHECK(ptw::includes_fc(A, B) == ptw::includes_fc(LA, lift(B)));
  }
}

TEST_CASE("matrix accessors and validation errors") {
  CHECK_THROWS(FCMatrix(0, 0, {}));
  CHECK_THROWS(FCMatrix(1, -1, {{}, {}}));
  CHECK_THROWS(FCMatrix(1, 0, {{Symbol::delta()}}));

  FCMatrix M(1, 1, {{Symbol::delta(), Symbol::big_r()},
                    {Symbol::delta(), Symbol::big_r()}});
  CHECK(M.min_col(0) == 1);
  CHECK(M.min_col(1) == 1);
  CHECK(!ptw::validate_fc(M).has_value());

  // lam and rho never appear in the bounded setting
  FCMatrix bad(1, 1, {{Symbol::lam(), Symbol::big_r()},
                      {Symbol::delta(), Symbol::big_r()}});
  CHECK(ptw::validate_fc(bad).has_value());

  // degree 1 admits no up/down cells
  FCMatrix updown(1, 1, {{Symbol::big_r(), Symbol::big_r()},
                         {Symbol::muU(), Symbol::big_r()}});
  CHECK(ptw::validate_fc(updown).has_value());
}
