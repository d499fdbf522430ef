#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptw/nat_cong.hpp"
#include "ptw/partition.hpp"
#include "ptw/symbols.hpp"
#include "ptw/twisted.hpp"

namespace ptw {

// One row of a symbol matrix: an explicit prefix for columns 0..bound()-1,
// then `tail` repeated for every later column.  Normalized so that the
// prefix never ends with the tail symbol; two RowSpecs are equal iff they
// agree at every column.
class RowSpec {
public:
    RowSpec(std::vector<Symbol> prefix, Symbol tail);
    static RowSpec constant(Symbol s);

    const Symbol& entry(int i) const;
    int bound() const { return static_cast<int>(prefix_.size()); }
    const Symbol& tail() const { return tail_; }
    const std::vector<Symbol>& prefix() const { return prefix_; }

    bool operator==(const RowSpec& o) const;
    bool operator!=(const RowSpec& o) const { return !(*this == o); }

private:
    std::vector<Symbol> prefix_;
    Symbol tail_;
};

struct Violation {
    int row;  // -1 when not tied to a row
    int col;  // -1 when not tied to a column
    std::string condition;
};

struct ExceptionalInfo {
    int q;         // the exceptional row
    NatCong half;  // (m, m+d)# when theta_q = (m, m+2d)#
};

// Code for a congruence on the infinite twisted monoid of degree n: a
// descending chain theta_0 >= ... >= theta_n of congruences on N together
// with one eventually constant symbol row per rank.
class CPair {
public:
    CPair(int n, std::vector<NatCong> theta, std::vector<RowSpec> rows);

    int n() const { return n_; }
    const NatCong& theta(int q) const;
    const RowSpec& row(int q) const;
    const Symbol& entry(int q, int i) const;

    bool operator==(const CPair& o) const;
    bool operator!=(const CPair& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<NatCong> theta_;
    std::vector<RowSpec> rows_;
};

// Checks every structural condition: the chain is descending, rows 0 and 1
// jointly match one of the seven low-rank row shapes, every row of rank >= 2
// is Delta / subgroup-chain / staircase shaped consistently with its chain
// entry, and the local vertical/horizontal adjacency rules hold.  Returns
// the first violated condition, or nullopt when the pair is valid.
std::optional<Violation> validate(const CPair& P);

// The unique row q >= 2 whose chain entry has even period 2d and whose
// entries meet the half-period twist conditions, if any.  Requires a
// validated pair.
std::optional<ExceptionalInfo> is_exceptional(const CPair& P);

// Membership of the ordered pair (a, b) in the congruence coded by P.
// Both elements must be nonzero twisted elements of degree P.n().
bool cg_member(const CPair& P, const TwistedElement& a, const TwistedElement& b);

// Membership in the twisted variant, which adds pairs at half the period of
// the exceptional row whose permutational difference is odd.  Throws when P
// is not exceptional.
bool cgx_member(const CPair& P, const TwistedElement& a, const TwistedElement& b);

// Does the congruence named by (P1, exc1) sit inside the one named by
// (P2, exc2)?  The flags select the twisted variant where available.
bool includes(const CPair& P1, bool exc1, const CPair& P2, bool exc2);

// A congruence has finitely many classes iff the rank-n chain entry is
// nontrivial.
bool finite_index(const CPair& P);

// The Rees congruence of the ideal generated by the given corner D-classes.
// Corners must be pairwise incomparable in the ideal order.
CPair rees_cpair(int n, const std::vector<DCoord>& corners);

// A column bound K such that all eventual behavior of P is already visible
// on columns 0..K: twice the largest finite minimum plus period, and twice
// the largest explicit prefix, whichever is bigger, plus slack.
int window(const CPair& P);

}  // namespace ptw
