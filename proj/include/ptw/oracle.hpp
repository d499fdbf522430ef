#pragma once

#include <cstdint>
#include <vector>

#include "ptw/fc_matrix.hpp"
#include "ptw/partition.hpp"
#include "ptw/twisted.hpp"

namespace ptw {

// Multiplication table of a finite monoid on elements 0..size-1.
struct FiniteMonoid {
  int size = 0;
  int identity = 0;
  std::vector<int> mul;  // size*size, row-major

  int at(int a, int b) const {
    return mul[static_cast<std::size_t>(a) * size + b];
  }
};

// Ptw(n,d) as a table: columns 0..d, each in partition enumeration order,
// then the zero element last.
struct TwistedTable {
  int n = 0;
  int d = 0;
  std::vector<TwistedElement> elements;
  FiniteMonoid monoid;

  int zero_index() const { return monoid.size - 1; }
  int index_of(const TwistedElement& x) const;
};

TwistedTable build_monoid(int n, int d);

// The plain partition monoid P_n as a table, in enumeration order.
struct PartitionTable {
  int n = 0;
  std::vector<Partition> elements;
  FiniteMonoid monoid;
};

PartitionTable build_pn_monoid(int n);

// Equivalence relation on 0..size-1 as least-index class labels:
// class_id[x] <= x and class_id[class_id[x]] == class_id[x].
struct CongRelation {
  std::vector<int> class_id;

  int classes() const;
  bool same(int a, int b) const { return class_id[a] == class_id[b]; }

  bool operator==(const CongRelation& o) const {
    return class_id == o.class_id;
  }
  bool operator<(const CongRelation& o) const {
    return class_id < o.class_id;
  }
};

// The least congruence identifying a and b.
CongRelation principal_congruence(const FiniteMonoid& m, int a, int b);

// Every congruence of the table: the principal ones closed under pairwise
// join, plus the trivial relation.  Sorted by class label vector, so the
// full relation comes first and the trivial one last.  Exhaustive, and
// only meant for small tables.
std::vector<CongRelation> all_congruences(const FiniteMonoid& m);

// Is r an equivalence in canonical label form that multiplication
// respects?
bool is_congruence(const FiniteMonoid& m, const CongRelation& r);

// Recovers the symbol matrix of a congruence cell by cell from the
// restrictions of r to the rank-q column-i squares.  Throws when r is not
// a congruence of the table or some cell matches no admitted symbol.
FCMatrix classify(const TwistedTable& t, const CongRelation& r);

// The relation on P_n induced by forgetting twists: alpha ~ beta iff
// (i,alpha) ~ (j,beta) for some i, j.  Returned over partition indices.
CongRelation project_to_Pn(const TwistedTable& t, const CongRelation& r);

// The relation a matrix codes, spelled out over the table's elements.
// M must be valid, so that the coded relation is an equivalence.
CongRelation relation_of_matrix(const TwistedTable& t, const FCMatrix& M);

}  // namespace ptw
