#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptw {

// Permutation of {0..q-1} in one-line notation.
class Perm {
public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int q);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  bool is_even() const;
  // Cycle lengths sorted descending, fixed points included.
  std::vector<int> cycle_type() const;

  Perm inverse() const;
  // Apply *this first, then g.
  Perm then(const Perm& g) const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }

private:
  std::vector<int> img_;
};

enum class SubgroupKind { Trivial, Klein4, Alternating, Symmetric };

// A normal subgroup of S_q: one of {id} <= (K_4 <=) A_q <= S_q.
class NormalSubgroup {
public:
  static NormalSubgroup trivial(int q);
  static NormalSubgroup klein4();  // q = 4 only
  static NormalSubgroup alternating(int q);
  static NormalSubgroup symmetric(int q);

  SubgroupKind kind() const { return kind_; }
  int q() const { return q_; }
  // Position in the containment chain: Trivial 0, Klein4 1,
  // Alternating 2, Symmetric 3.
  int level() const { return static_cast<int>(kind_); }

  bool is_trivial_set() const;  // {id} as a set (Trivial, or A_2)

  std::string label() const;  // "S2", "A3", "K4", ...

  bool operator==(const NormalSubgroup& o) const {
    return kind_ == o.kind_ && q_ == o.q_;
  }
  bool operator!=(const NormalSubgroup& o) const { return !(*this == o); }

private:
  NormalSubgroup(SubgroupKind k, int q) : kind_(k), q_(q) {}
  SubgroupKind kind_;
  int q_;
};

bool subgroup_contains(const NormalSubgroup& N, const Perm& pi);

// The proper nontrivial normal subgroups of S_q together with S_q itself:
// q=2 -> {S2}; q=3 -> {A3,S3}; q=4 -> {K4,A4,S4}; q>=5 -> {Aq,Sq}.
std::vector<NormalSubgroup> nontrivial_normal_subgroups(int q);

// Set partition of {1..2n}: code v <= n is upper vertex v, code v > n is
// lower vertex (v-n)'.  Canonical form: blocks sorted ascending inside,
// blocks ordered by minimum code.
class Partition {
public:
  Partition(int n, std::vector<std::vector<int>> blocks);
  static Partition identity(int n);
  static Partition omega(int n);  // the single-block partition

  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_index(int code) const { return block_of_[code - 1]; }
  bool block_is_transversal(int b) const { return transversal_[b]; }

  // Least code in the block of an upper vertex, restricted to uppers
  // (the kernel), with a transversal flag; analogously for lowers.
  int ker_rep(int upper) const { return ker_rep_[upper - 1]; }
  int coker_rep(int lower) const { return coker_rep_[lower - 1]; }
  bool upper_in_transversal(int upper) const {
    return transversal_[block_of_[upper - 1]];
  }
  bool lower_in_transversal(int lower) const {
    return transversal_[block_of_[n_ + lower - 1]];
  }

  // Upper/lower reflection; an involutive anti-automorphism.
  Partition star() const;

  // Canonical string key (restricted growth string), usable for ordering
  // and hashing.
  std::string key() const;

  bool operator==(const Partition& o) const;
  bool operator!=(const Partition& o) const { return !(*this == o); }

private:
  int n_;
  int rank_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;       // size 2n, code-1 -> block index
  std::vector<bool> transversal_;   // per block
  std::vector<int> ker_rep_;        // size n
  std::vector<int> coker_rep_;      // size n
};

struct MulResult {
  Partition product;
  std::int64_t floats;
};

// Product graph on 3n vertices; floats counts the components living
// entirely in the merged middle row.
MulResult multiply(const Partition& a, const Partition& b);

// Break every transversal into its upper and lower halves; the unique
// rank-0 partition with the same kernel and cokernel.
Partition hat(const Partition& a);

// Green's relations: 'R' (dom+ker), 'L' (codom+coker), 'H' (both),
// 'D' (rank).
bool greens(const Partition& a, const Partition& b, char rel);

// Permutational difference of H-related a, b of rank >= 1, relative to
// a's transversals ordered by minimum upper element.  Well defined only
// up to conjugacy: consume through subgroup_contains.
Perm pd(const Partition& a, const Partition& b);

// All of P_n in lexicographic restricted-growth-string order.
std::vector<Partition> enumerate_partitions(int n);

}  // namespace ptw
