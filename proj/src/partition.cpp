#include "ptw/partition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ptw {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("Perm: images are not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int q) {
  std::vector<int> img(q);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::is_even() const {
  // sign = (-1)^(degree - #cycles)
  std::vector<char> vis(img_.size(), 0);
  int cycles = 0;
  for (int i = 0; i < degree(); ++i) {
    if (vis[i]) continue;
    ++cycles;
    for (int j = i; !vis[j]; j = img_[j]) vis[j] = 1;
  }
  return (degree() - cycles) % 2 == 0;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<char> vis(img_.size(), 0);
  std::vector<int> lens;
  for (int i = 0; i < degree(); ++i) {
    if (vis[i]) continue;
    int len = 0;
    for (int j = i; !vis[j]; j = img_[j]) {
      vis[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Perm(std::move(inv));
}

Perm Perm::then(const Perm& g) const {
  if (g.degree() != degree())
    throw std::invalid_argument("Perm::then: degree mismatch");
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[i] = g(img_[i]);
  return Perm(std::move(out));
}

NormalSubgroup NormalSubgroup::trivial(int q) {
  if (q < 1) throw std::invalid_argument("NormalSubgroup: q must be positive");
  return NormalSubgroup(SubgroupKind::Trivial, q);
}

NormalSubgroup NormalSubgroup::klein4() {
  return NormalSubgroup(SubgroupKind::Klein4, 4);
}

NormalSubgroup NormalSubgroup::alternating(int q) {
  if (q < 2) throw std::invalid_argument("NormalSubgroup: A_q needs q >= 2");
  return NormalSubgroup(SubgroupKind::Alternating, q);
}

NormalSubgroup NormalSubgroup::symmetric(int q) {
  if (q < 2) throw std::invalid_argument("NormalSubgroup: S_q needs q >= 2");
  return NormalSubgroup(SubgroupKind::Symmetric, q);
}

bool NormalSubgroup::is_trivial_set() const {
  return kind_ == SubgroupKind::Trivial ||
         (kind_ == SubgroupKind::Alternating && q_ == 2);
}

std::string NormalSubgroup::label() const {
  switch (kind_) {
    case SubgroupKind::Trivial: return "Id" + std::to_string(q_);
    case SubgroupKind::Klein4: return "K4";
    case SubgroupKind::Alternating: return "A" + std::to_string(q_);
    case SubgroupKind::Symmetric: return "S" + std::to_string(q_);
  }
  return {};
}

bool subgroup_contains(const NormalSubgroup& N, const Perm& pi) {
  if (N.q() != pi.degree())
    throw std::invalid_argument("subgroup_contains: degree mismatch");
  switch (N.kind()) {
    case SubgroupKind::Trivial: return pi.is_identity();
    case SubgroupKind::Symmetric: return true;
    case SubgroupKind::Alternating: return pi.is_even();
    case SubgroupKind::Klein4: {
      if (pi.is_identity()) return true;
      auto ct = pi.cycle_type();
      return ct.size() == 2 && ct[0] == 2 && ct[1] == 2;
    }
  }
  return false;
}

std::vector<NormalSubgroup> nontrivial_normal_subgroups(int q) {
  std::vector<NormalSubgroup> out;
  if (q < 2) return out;
  if (q == 2) {
    out.push_back(NormalSubgroup::symmetric(2));
    return out;
  }
  if (q == 4) out.push_back(NormalSubgroup::klein4());
  out.push_back(NormalSubgroup::alternating(q));
  out.push_back(NormalSubgroup::symmetric(q));
  return out;
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), rank_(0), blocks_(std::move(blocks)) {
  if (n_ < 1) throw std::invalid_argument("Partition: degree must be positive");
  const int m = 2 * n_;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("Partition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              return x.front() < y.front();
            });
  block_of_.assign(m, -1);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    for (int c : blocks_[bi]) {
      if (c < 1 || c > m || block_of_[c - 1] != -1)
        throw std::invalid_argument("Partition: blocks must partition {1..2n}");
      block_of_[c - 1] = static_cast<int>(bi);
    }
  }
  for (int i = 0; i < m; ++i)
    if (block_of_[i] == -1)
      throw std::invalid_argument("Partition: blocks must cover {1..2n}");

  transversal_.assign(blocks_.size(), false);
  std::vector<int> minUpper(blocks_.size(), 0), minLower(blocks_.size(), 0);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    for (int c : blocks_[bi]) {
      if (c <= n_) {
        if (minUpper[bi] == 0) minUpper[bi] = c;
      } else {
        if (minLower[bi] == 0) minLower[bi] = c;
      }
    }
    transversal_[bi] = minUpper[bi] != 0 && minLower[bi] != 0;
    if (transversal_[bi]) ++rank_;
  }
  ker_rep_.assign(n_, 0);
  coker_rep_.assign(n_, 0);
  for (int v = 1; v <= n_; ++v) {
    ker_rep_[v - 1] = minUpper[block_of_[v - 1]];
    coker_rep_[v - 1] = minLower[block_of_[n_ + v - 1]] - n_;
  }
}

Partition Partition::identity(int n) {
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) blocks.push_back({v, n + v});
  return Partition(n, std::move(blocks));
}

Partition Partition::omega(int n) {
  std::vector<int> all(2 * n);
  std::iota(all.begin(), all.end(), 1);
  return Partition(n, {all});
}

Partition Partition::star() const {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& blk : blocks_) {
    std::vector<int> out;
    out.reserve(blk.size());
    for (int c : blk) out.push_back(c <= n_ ? c + n_ : c - n_);
    blocks.push_back(std::move(out));
  }
  return Partition(n_, std::move(blocks));
}

std::string Partition::key() const {
  // blocks_ is ordered by minimum code, so block indices along 1..2n form
  // a restricted growth string
  std::string s(block_of_.size(), '0');
  for (std::size_t i = 0; i < block_of_.size(); ++i)
    s[i] = static_cast<char>('0' + block_of_[i]);
  return s;
}

bool Partition::operator==(const Partition& o) const {
  return n_ == o.n_ && block_of_ == o.block_of_;
}

MulResult multiply(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("multiply: degree mismatch");
  const int n = a.n();
  // nodes 0..n-1: final uppers; n..2n-1: merged middle; 2n..3n-1: final
  // lowers.  a's code c maps to c-1, b's code c maps to c+n-1.
  UnionFind uf(3 * n);
  for (const auto& blk : a.blocks())
    for (std::size_t i = 1; i < blk.size(); ++i)
      uf.unite(blk[0] - 1, blk[i] - 1);
  for (const auto& blk : b.blocks())
    for (std::size_t i = 1; i < blk.size(); ++i)
      uf.unite(blk[0] + n - 1, blk[i] + n - 1);

  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < n; ++v) comps[uf.find(v)].push_back(v + 1);
  for (int v = 2 * n; v < 3 * n; ++v) comps[uf.find(v)].push_back(v - n + 1);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(comps.size());
  for (auto& [root, codes] : comps) blocks.push_back(std::move(codes));

  std::vector<char> hasOuter(3 * n, 0), counted(3 * n, 0);
  for (int v = 0; v < n; ++v) hasOuter[uf.find(v)] = 1;
  for (int v = 2 * n; v < 3 * n; ++v) hasOuter[uf.find(v)] = 1;
  std::int64_t floats = 0;
  for (int v = n; v < 2 * n; ++v) {
    int r = uf.find(v);
    if (!hasOuter[r] && !counted[r]) {
      counted[r] = 1;
      ++floats;
    }
  }
  return MulResult{Partition(n, std::move(blocks)), floats};
}

Partition hat(const Partition& a) {
  std::vector<std::vector<int>> blocks;
  for (std::size_t bi = 0; bi < a.blocks().size(); ++bi) {
    const auto& blk = a.blocks()[bi];
    if (!a.block_is_transversal(bi)) {
      blocks.push_back(blk);
      continue;
    }
    std::vector<int> up, lo;
    for (int c : blk) (c <= a.n() ? up : lo).push_back(c);
    blocks.push_back(std::move(up));
    blocks.push_back(std::move(lo));
  }
  return Partition(a.n(), std::move(blocks));
}

bool greens(const Partition& a, const Partition& b, char rel) {
  if (a.n() != b.n()) throw std::invalid_argument("greens: degree mismatch");
  auto sameR = [&] {
    for (int v = 1; v <= a.n(); ++v)
      if (a.ker_rep(v) != b.ker_rep(v) ||
          a.upper_in_transversal(v) != b.upper_in_transversal(v))
        return false;
    return true;
  };
  auto sameL = [&] {
    for (int v = 1; v <= a.n(); ++v)
      if (a.coker_rep(v) != b.coker_rep(v) ||
          a.lower_in_transversal(v) != b.lower_in_transversal(v))
        return false;
    return true;
  };
  switch (rel) {
    case 'R': return sameR();
    case 'L': return sameL();
    case 'H': return sameR() && sameL();
    case 'D': return a.rank() == b.rank();
    default: throw std::invalid_argument("greens: relation must be R/L/H/D");
  }
}

Perm pd(const Partition& a, const Partition& b) {
  if (a.rank() < 1 || !greens(a, b, 'H'))
    throw std::invalid_argument("pd: needs H-related arguments of rank >= 1");
  const int q = a.rank();
  // a's transversals in block order = ascending minimum upper element,
  // since a transversal's minimum code is its minimum upper
  std::vector<int> tblocks;
  for (std::size_t bi = 0; bi < a.blocks().size(); ++bi)
    if (a.block_is_transversal(bi)) tblocks.push_back(static_cast<int>(bi));
  assert(static_cast<int>(tblocks.size()) == q);

  auto minLowerOf = [](const Partition& p, const std::vector<int>& blk) {
    for (int c : blk)
      if (c > p.n()) return c;
    return 0;
  };

  std::vector<int> lowerToIndex(2 * a.n() + 1, -1);
  std::vector<int> minUpper(q);
  for (int t = 0; t < q; ++t) {
    const auto& blk = a.blocks()[tblocks[t]];
    minUpper[t] = blk.front();
    lowerToIndex[minLowerOf(a, blk)] = t;
  }
  std::vector<int> images(q);
  for (int t = 0; t < q; ++t) {
    const auto& blk = b.blocks()[b.block_index(minUpper[t])];
    int j = lowerToIndex[minLowerOf(b, blk)];
    assert(j >= 0);
    images[t] = j;
  }
  return Perm(std::move(images));
}

namespace {

Partition fromRgs(int n, const std::vector<int>& rgs) {
  int mx = 0;
  for (int v : rgs) mx = std::max(mx, v);
  std::vector<std::vector<int>> blocks(mx + 1);
  for (std::size_t i = 0; i < rgs.size(); ++i)
    blocks[rgs[i]].push_back(static_cast<int>(i) + 1);
  return Partition(n, std::move(blocks));
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("enumerate_partitions: n out of range [1,5]");
  const int m = 2 * n;
  std::vector<Partition> out;
  std::vector<int> rgs(m, 0);
  auto rec = [&](auto&& self, int pos, int mx) -> void {
    if (pos == m) {
      out.push_back(fromRgs(n, rgs));
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      rgs[pos] = v;
      self(self, pos + 1, std::max(mx, v));
    }
  };
  rec(rec, 1, 0);
  return out;
}

}  // namespace ptw
