#include "ptw/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace ptw {

int TwistedTable::index_of(const TwistedElement& x) const {
  for (std::size_t e = 0; e < elements.size(); ++e)
    if (elements[e] == x) return static_cast<int>(e);
  throw std::invalid_argument("TwistedTable: element not in table");
}

TwistedTable build_monoid(int n, int d) {
  if (d < 0) throw std::invalid_argument("build_monoid: twist bound must be >= 0");
  TwistedTable t;
  t.n = n;
  t.d = d;
  std::vector<Partition> parts = enumerate_partitions(n);
  int nparts = static_cast<int>(parts.size());
  for (int i = 0; i <= d; ++i)
    for (int p = 0; p < nparts; ++p)
      t.elements.push_back(TwistedElement::pair(i, parts[p]));
  t.elements.push_back(TwistedElement::zero());

  std::map<std::string, int> index;
  for (int p = 0; p < nparts; ++p) index[parts[p].key()] = p;
  std::vector<int> prod(nparts * nparts);
  std::vector<std::int64_t> floats(nparts * nparts);
  for (int a = 0; a < nparts; ++a)
    for (int b = 0; b < nparts; ++b) {
      MulResult m = multiply(parts[a], parts[b]);
      prod[a * nparts + b] = index.at(m.product.key());
      floats[a * nparts + b] = m.floats;
    }

  int size = (d + 1) * nparts + 1;
  int zero = size - 1;
  t.monoid.size = size;
  t.monoid.identity = index.at(Partition::identity(n).key());
  t.monoid.mul.assign(static_cast<std::size_t>(size) * size, zero);
  for (int x = 0; x < zero; ++x)
    for (int y = 0; y < zero; ++y) {
      int i = x / nparts, a = x % nparts;
      int j = y / nparts, b = y % nparts;
      std::int64_t k = i + j + floats[a * nparts + b];
      if (k <= d)
        t.monoid.mul[static_cast<std::size_t>(x) * size + y] =
            static_cast<int>(k) * nparts + prod[a * nparts + b];
    }
  return t;
}

PartitionTable build_pn_monoid(int n) {
  PartitionTable t;
  t.n = n;
  t.elements = enumerate_partitions(n);
  int size = static_cast<int>(t.elements.size());
  std::map<std::string, int> index;
  for (int p = 0; p < size; ++p) index[t.elements[p].key()] = p;
  t.monoid.size = size;
  t.monoid.identity = index.at(Partition::identity(n).key());
  t.monoid.mul.resize(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      t.monoid.mul[static_cast<std::size_t>(a) * size + b] =
          index.at(multiply(t.elements[a], t.elements[b]).product.key());
  return t;
}

int CongRelation::classes() const {
  int c = 0;
  for (std::size_t x = 0; x < class_id.size(); ++x)
    if (class_id[x] == static_cast<int>(x)) ++c;
  return c;
}

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
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

CongRelation canonical(UnionFind& uf) {
  int n = static_cast<int>(uf.parent.size());
  CongRelation r;
  r.class_id.resize(n);
  std::vector<int> rep(n, -1);
  for (int x = 0; x < n; ++x) {
    int root = uf.find(x);
    if (rep[root] < 0) rep[root] = x;
    r.class_id[x] = rep[root];
  }
  return r;
}

}  // namespace

CongRelation principal_congruence(const FiniteMonoid& m, int a, int b) {
  if (a < 0 || a >= m.size || b < 0 || b >= m.size)
    throw std::invalid_argument("principal_congruence: element out of range");
  UnionFind uf(m.size);
  std::vector<std::pair<int, int>> work;
  if (uf.unite(a, b)) work.emplace_back(a, b);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int s = 0; s < m.size; ++s) {
      int lx = m.at(s, x), ly = m.at(s, y);
      if (uf.unite(lx, ly)) work.emplace_back(lx, ly);
      int rx = m.at(x, s), ry = m.at(y, s);
      if (uf.unite(rx, ry)) work.emplace_back(rx, ry);
    }
  }
  return canonical(uf);
}

std::vector<CongRelation> all_congruences(const FiniteMonoid& m) {
  std::set<std::vector<int>> seen;
  std::vector<CongRelation> pool;
  auto add = [&](CongRelation r) {
    if (seen.insert(r.class_id).second) pool.push_back(std::move(r));
  };
  CongRelation trivial;
  trivial.class_id.resize(m.size);
  std::iota(trivial.class_id.begin(), trivial.class_id.end(), 0);
  add(trivial);
  for (int a = 0; a < m.size; ++a)
    for (int b = a + 1; b < m.size; ++b) add(principal_congruence(m, a, b));
  // Join closure; the pool grows while the outer index catches up.
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      UnionFind uf(m.size);
      for (int x = 0; x < m.size; ++x) {
        uf.unite(x, pool[i].class_id[x]);
        uf.unite(x, pool[j].class_id[x]);
      }
      add(canonical(uf));
    }
  std::sort(pool.begin(), pool.end());
  return pool;
}

bool is_congruence(const FiniteMonoid& m, const CongRelation& r) {
  if (static_cast<int>(r.class_id.size()) != m.size) return false;
  for (int x = 0; x < m.size; ++x) {
    int c = r.class_id[x];
    if (c < 0 || c > x || r.class_id[c] != c) return false;
  }
  for (int x = 0; x < m.size; ++x) {
    int rep = r.class_id[x];
    if (rep == x) continue;
    for (int s = 0; s < m.size; ++s) {
      if (r.class_id[m.at(s, x)] != r.class_id[m.at(s, rep)]) return false;
      if (r.class_id[m.at(x, s)] != r.class_id[m.at(rep, s)]) return false;
    }
  }
  return true;
}

namespace {

// Pairwise predicate tables over one rank layer of P_n, shared by every
// column of the matrix row.
struct RankPairs {
  std::vector<int> members;             // partition indices
  std::vector<char> hat_eq, green_h, green_l, green_r, hat_l, hat_r;
  std::vector<std::vector<char>> in_nu;  // per nontrivial subgroup

  std::size_t pos(std::size_t a, std::size_t b) const {
    return a * members.size() + b;
  }
};

RankPairs rank_pairs(const std::vector<Partition>& parts, int q) {
  RankPairs t;
  for (std::size_t p = 0; p < parts.size(); ++p)
    if (parts[p].rank() == q) t.members.push_back(static_cast<int>(p));
  std::size_t k = t.members.size();
  t.hat_eq.assign(k * k, 0);
  t.green_h.assign(k * k, 0);
  t.green_l.assign(k * k, 0);
  t.green_r.assign(k * k, 0);
  t.hat_l.assign(k * k, 0);
  t.hat_r.assign(k * k, 0);
  std::vector<NormalSubgroup> subs;
  if (q >= 2) subs = nontrivial_normal_subgroups(q);
  t.in_nu.assign(subs.size(), std::vector<char>(k * k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    const Partition& al = parts[t.members[a]];
    Partition ha = hat(al);
    for (std::size_t b = 0; b < k; ++b) {
      const Partition& be = parts[t.members[b]];
      Partition hb = hat(be);
      std::size_t ab = t.pos(a, b);
      t.hat_eq[ab] = ha == hb;
      t.green_h[ab] = greens(al, be, 'H');
      t.green_l[ab] = greens(al, be, 'L');
      t.green_r[ab] = greens(al, be, 'R');
      t.hat_l[ab] = greens(ha, hb, 'L');
      t.hat_r[ab] = greens(ha, hb, 'R');
      if (t.green_h[ab] && !subs.empty()) {
        Perm diff = pd(al, be);
        for (std::size_t s = 0; s < subs.size(); ++s)
          t.in_nu[s][ab] = subgroup_contains(subs[s], diff);
      }
    }
  }
  return t;
}

}  // namespace

FCMatrix classify(const TwistedTable& t, const CongRelation& r) {
  if (!is_congruence(t.monoid, r))
    throw std::invalid_argument("classify: relation is not a congruence");
  int n = t.n, d = t.d;
  std::vector<Partition> parts = enumerate_partitions(n);
  int nparts = static_cast<int>(parts.size());
  int zc = r.class_id[t.zero_index()];
  auto elem = [&](int i, int p) { return i * nparts + p; };

  std::vector<RankPairs> layer;
  layer.reserve(n + 1);
  for (int q = 0; q <= n; ++q) layer.push_back(rank_pairs(parts, q));

  std::vector<std::vector<Symbol>> rows(n + 1,
                                        std::vector<Symbol>(d + 1, Symbol::delta()));
  for (int q = 0; q <= n; ++q) {
    const RankPairs& lay = layer[q];
    std::size_t k = lay.members.size();
    std::vector<NormalSubgroup> subs =
        q >= 2 ? nontrivial_normal_subgroups(q) : std::vector<NormalSubgroup>{};
    for (int i = 0; i <= d; ++i) {
      bool all_zero = true, any_zero = false;
      for (std::size_t a = 0; a < k; ++a) {
        bool z = r.class_id[elem(i, lay.members[a])] == zc;
        all_zero = all_zero && z;
        any_zero = any_zero || z;
      }
      if (any_zero && !all_zero)
        throw std::invalid_argument("classify: cell partially collapsed to zero");
      if (all_zero) {
        rows[q][i] = Symbol::big_r();
        continue;
      }
      std::vector<char> rel(k * k);
      bool diag = true;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          rel[lay.pos(a, b)] =
              r.same(elem(i, lay.members[a]), elem(i, lay.members[b]));
          if (a != b && rel[lay.pos(a, b)]) diag = false;
        }
      auto matches = [&](const std::vector<char>& want) {
        return rel == want;
      };
      auto cross_rank_related = [&](int other_q) {
        for (std::size_t a = 0; a < k; ++a)
          for (int j = 0; j <= d; ++j)
            for (int p : layer[other_q].members)
              if (r.same(elem(i, lay.members[a]), elem(j, p))) return true;
        return false;
      };
      if (q >= 2) {
        if (diag) continue;  // Delta already in place
        bool found = false;
        for (std::size_t s = 0; s < subs.size() && !found; ++s) {
          std::vector<char> want(k * k);
          for (std::size_t ab = 0; ab < k * k; ++ab)
            want[ab] = lay.green_h[ab] && lay.in_nu[s][ab];
          if (matches(want)) {
            rows[q][i] = Symbol::nsub(subs[s]);
            found = true;
          }
        }
        if (!found)
          throw std::invalid_argument("classify: cell matches no admitted symbol");
        continue;
      }
      if (q == 1) {
        if (diag) {
          if (n == 1 && cross_rank_related(0)) rows[q][i] = Symbol::mu();
          continue;
        }
        auto combo = [&](const std::vector<char>& extra) {
          std::vector<char> want(k * k);
          for (std::size_t ab = 0; ab < k * k; ++ab)
            want[ab] = lay.hat_eq[ab] && extra[ab];
          return want;
        };
        if (matches(combo(lay.green_r))) {
          rows[q][i] = Symbol::muU();
          continue;
        }
        if (matches(combo(lay.green_l))) {
          rows[q][i] = Symbol::muD();
          continue;
        }
        if (matches(lay.hat_eq)) {
          rows[q][i] = Symbol::mu();
          continue;
        }
        throw std::invalid_argument("classify: cell matches no admitted symbol");
      }
      // q == 0: hats are the elements themselves, so the in-cell
      // restriction of a mu cell is the diagonal; twist alignment to
      // rank 1 tells mu and D apart.
      if (!diag)
        throw std::invalid_argument("classify: cell matches no admitted symbol");
      if (n >= 1 && cross_rank_related(1)) rows[q][i] = Symbol::mu();
    }
  }
  FCMatrix M(n, d, std::move(rows));
  if (auto v = validate_fc(M))
    throw std::invalid_argument("classify: assembled matrix is not valid at row " +
                                std::to_string(v->row) + ": " + v->condition);
  return M;
}

CongRelation project_to_Pn(const TwistedTable& t, const CongRelation& r) {
  if (static_cast<int>(r.class_id.size()) != t.monoid.size)
    throw std::invalid_argument("project_to_Pn: size mismatch");
  int nparts = static_cast<int>(t.elements.size() - 1) / (t.d + 1);
  UnionFind uf(nparts);
  std::vector<int> first(t.monoid.size, -1);
  for (int e = 0; e < t.monoid.size - 1; ++e) {
    int c = r.class_id[e];
    int p = e % nparts;
    if (first[c] < 0)
      first[c] = p;
    else
      uf.unite(first[c], p);
  }
  return canonical(uf);
}

CongRelation relation_of_matrix(const TwistedTable& t, const FCMatrix& M) {
  int size = t.monoid.size;
  CongRelation r;
  r.class_id.assign(size, 0);
  for (int x = 0; x < size; ++x) {
    r.class_id[x] = x;
    for (int y = 0; y < x; ++y)
      if (r.class_id[y] == y && cg_fc_member(M, t.elements[y], t.elements[x])) {
        r.class_id[x] = y;
        break;
      }
  }
  return r;
}

}  // namespace ptw
