#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptw/cpair.hpp"
#include "ptw/partition.hpp"
#include "ptw/symbols.hpp"
#include "ptw/twisted.hpp"

namespace ptw {

// Symbol matrix coding a congruence on the finitary quotient Ptw(n,d):
// one row per rank 0..n, one column per twist value 0..d.  The alphabet
// drops lam/rho; R marks the cells collapsed onto the zero.
class FCMatrix {
public:
  FCMatrix(int n, int d, std::vector<std::vector<Symbol>> rows);

  int n() const { return n_; }
  int d() const { return d_; }
  const Symbol& entry(int q, int i) const;
  const std::vector<Symbol>& row(int q) const;

  // First column of row q holding R, or d+1 when the row has none.
  int min_col(int q) const;

  bool operator==(const FCMatrix& o) const;
  bool operator!=(const FCMatrix& o) const { return !(*this == o); }

private:
  int n_, d_;
  std::vector<std::vector<Symbol>> rows_;
};

// Checks the structural conditions: per-row alphabets, the four joint
// shapes of rows 0/1, the Delta / subgroup-chain / R staircase shape of
// rows >= 2, and the local vertical/horizontal adjacency rules.  Returns
// the first violated condition, or nullopt when the matrix is valid.
std::optional<Violation> validate_fc(const FCMatrix& M);

// All valid matrices for Ptw(n,d), in a fixed deterministic order: rows
// 0/1 ordered by shape and parameters, then rows 2..n nested with the
// top row varying fastest.  For n = 1 the redundant symbols muU/muD are
// never emitted, so the list is duplicate-free as congruences.
std::vector<FCMatrix> enumerate_fc(int n, int d);

// Membership of the ordered pair (a, b) in the congruence coded by M.
// Elements must live in Ptw(n,d): zero, or degree n with 0 <= i <= d.
bool cg_fc_member(const FCMatrix& M, const TwistedElement& a,
                  const TwistedElement& b);

// Containment of the coded congruences.  Matrices must share (n, d).
bool includes_fc(const FCMatrix& M1, const FCMatrix& M2);

// Congruence lattice of Ptw(n,d): nodes in enumeration order, the full
// containment relation, its covering relation, and the indices of the
// Rees congruences (staircase matrices over {D, R}).
struct Lattice {
  int n = 0;
  int d = 0;
  std::vector<FCMatrix> nodes;
  std::vector<std::vector<bool>> leq;      // leq[i][j]: node i inside node j
  std::vector<std::pair<int, int>> hasse;  // (lower, upper) covering pairs
  std::vector<int> rees;
};

Lattice build_lattice(int n, int d);

// The named congruences of the untwisted quotient Ptw(n,0), n >= 2, as
// single-column matrices, bottom of the lattice first.
std::vector<std::pair<std::string, FCMatrix>> family_d0(int n);

// The named congruences of Ptw(1,d), d >= 1: staircases R_{i,j} and the
// mu-bearing families sigma_{i,j} and tau_{i,j}.
std::vector<std::pair<std::string, FCMatrix>> family_n1(int d);

// Graphviz source for a lattice diagram; `labels` selects token-grid
// node labels or bare nodes.  Rees nodes are drawn filled.
std::string lattice_to_dot(const Lattice& L, bool labels);

}  // namespace ptw
