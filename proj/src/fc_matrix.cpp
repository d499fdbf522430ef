#include "ptw/fc_matrix.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ptw/parallel.hpp"

namespace ptw {

FCMatrix::FCMatrix(int n, int d, std::vector<std::vector<Symbol>> rows)
    : n_(n), d_(d), rows_(std::move(rows)) {
  if (n_ < 1) throw std::invalid_argument("FCMatrix: degree must be >= 1");
  if (d_ < 0) throw std::invalid_argument("FCMatrix: twist bound must be >= 0");
  if (rows_.size() != static_cast<std::size_t>(n_ + 1))
    throw std::invalid_argument("FCMatrix: expected n+1 rows");
  for (const auto& r : rows_)
    if (r.size() != static_cast<std::size_t>(d_ + 1))
      throw std::invalid_argument("FCMatrix: expected d+1 cells per row");
}

const Symbol& FCMatrix::entry(int q, int i) const {
  if (q < 0 || q > n_ || i < 0 || i > d_)
    throw std::out_of_range("FCMatrix: cell out of range");
  return rows_[q][i];
}

const std::vector<Symbol>& FCMatrix::row(int q) const {
  if (q < 0 || q > n_) throw std::out_of_range("FCMatrix: row out of range");
  return rows_[q];
}

int FCMatrix::min_col(int q) const {
  const auto& r = row(q);
  for (int i = 0; i <= d_; ++i)
    if (r[i].is(SymKind::R)) return i;
  return d_ + 1;
}

bool FCMatrix::operator==(const FCMatrix& o) const {
  return n_ == o.n_ && d_ == o.d_ && rows_ == o.rows_;
}

namespace {

Violation viol(int row, int col, std::string cond) {
  return Violation{row, col, std::move(cond)};
}

int first_of(const std::vector<Symbol>& r, SymKind k) {
  for (std::size_t c = 0; c < r.size(); ++c)
    if (r[c].is(k)) return static_cast<int>(c);
  return static_cast<int>(r.size());
}

// Rows 0 and 1 jointly: a plain staircase pair with a common onset, a
// staircase pair with one marked cell in row 1, a double mu run, or two
// isolated mu cells left of staggered onsets.
std::optional<Violation> check_low(const FCMatrix& M) {
  int d = M.d();
  const auto& r0 = M.row(0);
  const auto& r1 = M.row(1);
  for (int c = 0; c <= d; ++c) {
    switch (r0[c].kind()) {
      case SymKind::Delta:
      case SymKind::Mu:
      case SymKind::R:
        break;
      default:
        return viol(0, c, "row 0 admits only D, mu and R cells");
    }
    switch (r1[c].kind()) {
      case SymKind::MuUp:
      case SymKind::MuDown:
        // Rank 1 of degree 1 is a single element, so these collapse to D.
        if (M.n() == 1)
          return viol(1, c, "degree 1 admits no muU or muD cells");
        break;
      case SymKind::Delta:
      case SymKind::Mu:
      case SymKind::R:
        break;
      default:
        return viol(1, c, "row 1 admits only D, mu, muU, muD and R cells");
    }
  }
  int m0 = M.min_col(0);
  int m1 = M.min_col(1);
  if (m1 < m0) return viol(1, m1, "zero cells of row 1 must not start before row 0's");
  int p = first_of(r0, SymKind::Mu);
  auto deltas_then_r = [&](const std::vector<Symbol>& r, int onset) {
    for (int c = 0; c < onset && c <= d; ++c)
      if (!r[c].is(SymKind::Delta)) return c;
    return -1;
  };
  if (p > d) {
    // No mu in row 0, so it is a staircase.
    if (int c = deltas_then_r(r0, m0); c >= 0)
      return viol(0, c, "row 0 must be D cells followed by R cells");
    if (m1 == m0) {
      if (int c = deltas_then_r(r1, m1); c >= 0)
        return viol(1, c, "rows with a common zero onset must both be staircases");
      return std::nullopt;
    }
    // Row 1 carries at most one non-D cell, directly left of its onset.
    if (int c = deltas_then_r(r1, m1 - 1); c >= 0)
      return viol(1, c, "row 1 admits one non-D cell, directly left of its zero onset");
    // A detached mu cell only collapses within one column, which is vacuous
    // at degree 1 and would duplicate the staircase.
    if (M.n() == 1 && r1[m1 - 1].is(SymKind::Mu))
      return viol(1, m1 - 1, "degree 1 admits no detached mu cell in row 1");
    return std::nullopt;
  }
  // Row 0 carries a mu cell; a zero region must follow it.
  if (m0 > d) return viol(0, p, "a mu cell in row 0 needs zero cells after it");
  if (p >= m0) return viol(0, p, "mu cells must precede the zero cells");
  if (int c = deltas_then_r(r0, p); c >= 0)
    return viol(0, c, "cells left of row 0's mu run must be D");
  if (m1 == m0 + 1) {
    // Parallel mu runs shifted by one column.
    for (int c = p; c < m0; ++c)
      if (!r0[c].is(SymKind::Mu))
        return viol(0, c, "row 0's mu run must be contiguous");
    if (int c = deltas_then_r(r1, p); c >= 0)
      return viol(1, c, "cells left of row 1's marked cell must be D");
    if (r1[p].is(SymKind::R))
      return viol(1, p, "row 1's marked cell must precede its zero cells");
    if (M.n() == 1 && r1[p].is(SymKind::Mu))
      return viol(1, p, "degree 1 admits no detached mu cell in row 1");
    for (int c = p + 1; c < m1; ++c)
      if (!r1[c].is(SymKind::Mu))
        return viol(1, c, "row 1's mu run must be contiguous");
    return std::nullopt;
  }
  if (m1 >= m0 + 2) {
    // One isolated mu per row, each directly left of that row's onset.
    if (p != m0 - 1)
      return viol(0, p, "row 0 admits a single mu cell, directly left of its zero onset");
    if (int c = deltas_then_r(r1, m1 - 1); c >= 0)
      return viol(1, c, "cells left of row 1's mu cell must be D");
    if (m1 - 1 > d || !r1[m1 - 1].is(SymKind::Mu))
      return viol(1, std::min(m1 - 1, d), "row 1 needs a mu cell directly left of its zero onset");
    return std::nullopt;
  }
  return viol(1, m1, "rows 0/1 do not fit any admitted joint shape");
}

// Rows of rank >= 2: D cells, then a nondecreasing chain of subgroup
// cells of matching degree, then R cells.
std::optional<Violation> check_high(const FCMatrix& M, int q) {
  const auto& r = M.row(q);
  int d = M.d();
  int c = 0;
  while (c <= d && r[c].is(SymKind::Delta)) ++c;
  int last_level = 0;
  while (c <= d && r[c].is(SymKind::N)) {
    if (r[c].subgroup().q() != q)
      return viol(q, c, "subgroup cell degree must match the row rank");
    if (r[c].subgroup().level() < last_level)
      return viol(q, c, "subgroup cells must not shrink rightward");
    last_level = r[c].subgroup().level();
    ++c;
  }
  while (c <= d && r[c].is(SymKind::R)) ++c;
  if (c <= d)
    return viol(q, c, "row must be D cells, a subgroup chain, then R cells");
  return std::nullopt;
}

std::optional<Violation> scan_adjacent(const FCMatrix& M) {
  for (int q = 1; q <= M.n(); ++q)
    for (int c = 0; c <= M.d(); ++c)
      if (!below_ok(M.entry(q, c), M.entry(q - 1, c)))
        return viol(q, c, "cell sits above an incompatible cell");
  for (int q = 0; q <= M.n(); ++q)
    for (int c = 0; c < M.d(); ++c)
      if (!right_ok(M.entry(q, c), M.entry(q, c + 1)))
        return viol(q, c, "cell sits left of an incompatible cell");
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate_fc(const FCMatrix& M) {
  if (auto v = check_low(M)) return v;
  for (int q = 2; q <= M.n(); ++q)
    if (auto v = check_high(M, q)) return v;
  return scan_adjacent(M);
}

namespace {

std::vector<Symbol> stair(int d, int k) {
  std::vector<Symbol> r;
  r.reserve(d + 1);
  for (int c = 0; c <= d; ++c)
    r.push_back(c < k ? Symbol::delta() : Symbol::big_r());
  return r;
}

// All admitted joint shapes of rows 0/1, in enumeration order.
std::vector<std::array<std::vector<Symbol>, 2>> low_row_pairs(int n, int d) {
  std::vector<Symbol> zetas = {Symbol::delta()};
  if (n >= 2) {
    zetas.push_back(Symbol::mu());
    zetas.push_back(Symbol::muD());
    zetas.push_back(Symbol::muU());
  }
  std::vector<std::array<std::vector<Symbol>, 2>> out;
  // Common-onset staircases.
  for (int k = 0; k <= d + 1; ++k) out.push_back({stair(d, k), stair(d, k)});
  // Parallel mu runs, offset one column.
  for (int i = 0; i < d; ++i)
    for (int k = i + 1; k <= d; ++k)
      for (const Symbol& z : zetas) {
        std::vector<Symbol> r0(d + 1, Symbol::big_r());
        std::vector<Symbol> r1(d + 1, Symbol::big_r());
        for (int c = 0; c < i; ++c) r0[c] = r1[c] = Symbol::delta();
        for (int c = i; c < k; ++c) r0[c] = Symbol::mu();
        r1[i] = z;
        for (int c = i + 1; c <= k; ++c) r1[c] = Symbol::mu();
        out.push_back({std::move(r0), std::move(r1)});
      }
  // Staggered staircases with one marked cell in row 1.
  for (int k = 0; k <= d; ++k)
    for (int l = k + 1; l <= d + 1; ++l)
      for (const Symbol& z : zetas) {
        std::vector<Symbol> r1(d + 1, Symbol::big_r());
        for (int c = 0; c < l - 1; ++c) r1[c] = Symbol::delta();
        r1[l - 1] = z;
        out.push_back({stair(d, k), std::move(r1)});
      }
  // Two isolated mu cells left of staggered onsets.
  for (int k = 1; k + 2 <= d + 1; ++k)
    for (int l = k + 2; l <= d + 1; ++l) {
      std::vector<Symbol> r0 = stair(d, k);
      std::vector<Symbol> r1 = stair(d, l);
      r0[k - 1] = Symbol::mu();
      r1[l - 1] = Symbol::mu();
      out.push_back({std::move(r0), std::move(r1)});
    }
  return out;
}

// All admitted rows of rank q >= 2, in enumeration order: leading D run,
// then each nondecreasing subgroup word, then R cells.
std::vector<std::vector<Symbol>> high_row_cands(int q, int d) {
  std::vector<NormalSubgroup> chain = nontrivial_normal_subgroups(q);
  std::vector<std::vector<Symbol>> out;
  for (int i = 0; i <= d + 1; ++i)
    for (int k = i; k <= d + 1; ++k) {
      int run = k - i;
      std::vector<int> word(run, 0);
      std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == run) {
          std::vector<Symbol> r;
          r.reserve(d + 1);
          for (int c = 0; c < i; ++c) r.push_back(Symbol::delta());
          for (int c = 0; c < run; ++c) r.push_back(Symbol::nsub(chain[word[c]]));
          for (int c = k; c <= d; ++c) r.push_back(Symbol::big_r());
          out.push_back(std::move(r));
          return;
        }
        for (int w = lo; w < static_cast<int>(chain.size()); ++w) {
          word[pos] = w;
          rec(pos + 1, w);
        }
      };
      rec(0, 0);
    }
  return out;
}

bool fits_above(const std::vector<Symbol>& upper,
                const std::vector<Symbol>& lower) {
  for (std::size_t c = 0; c < upper.size(); ++c)
    if (!below_ok(upper[c], lower[c])) return false;
  return true;
}

}  // namespace

std::vector<FCMatrix> enumerate_fc(int n, int d) {
  if (n < 1) throw std::invalid_argument("enumerate_fc: degree must be >= 1");
  if (d < 0) throw std::invalid_argument("enumerate_fc: twist bound must be >= 0");
  auto low = low_row_pairs(n, d);
  std::vector<std::vector<std::vector<Symbol>>> high(n + 1);
  for (int q = 2; q <= n; ++q) high[q] = high_row_cands(q, d);

  std::vector<FCMatrix> out;
  std::vector<std::vector<Symbol>> rows(n + 1);
  std::function<void(int)> rec = [&](int q) {
    if (q > n) {
      out.emplace_back(n, d, rows);
      return;
    }
    for (const auto& cand : high[q]) {
      if (!fits_above(cand, rows[q - 1])) continue;
      rows[q] = cand;
      rec(q + 1);
    }
  };
  for (const auto& pair : low) {
    rows[0] = pair[0];
    rows[1] = pair[1];
    rec(2);
  }
  return out;
}

bool cg_fc_member(const FCMatrix& M, const TwistedElement& a,
                  const TwistedElement& b) {
  auto check = [&](const TwistedElement& x) {
    if (x.is_zero()) return;
    if (x.alpha().n() != M.n())
      throw std::invalid_argument("cg_fc_member: element degree mismatch");
    if (x.i() < 0 || x.i() > M.d())
      throw std::invalid_argument("cg_fc_member: element column out of range");
  };
  check(a);
  check(b);
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_zero() || b.is_zero()) {
    const TwistedElement& x = a.is_zero() ? b : a;
    return M.entry(x.alpha().rank(), static_cast<int>(x.i())).is(SymKind::R);
  }
  const Partition& al = a.alpha();
  const Partition& be = b.alpha();
  int q = al.rank(), r = be.rank();
  int i = static_cast<int>(a.i()), j = static_cast<int>(b.i());
  if (q == r && i == j && al == be) return true;
  const Symbol& s = M.entry(q, i);
  const Symbol& t = M.entry(r, j);
  if (s.is(SymKind::R) && t.is(SymKind::R)) return true;
  if (s != t) return false;
  switch (s.kind()) {
    case SymKind::N:
      return i == j && greens(al, be, 'H') &&
             subgroup_contains(s.subgroup(), pd(al, be));
    case SymKind::MuDown:
      return hat(al) == hat(be) && greens(al, be, 'L');
    case SymKind::MuUp:
      return hat(al) == hat(be) && greens(al, be, 'R');
    case SymKind::Mu: {
      if (hat(al) != hat(be)) return false;
      if (q == r && i == j) return true;
      return i - j == M.min_col(q) - M.min_col(r);
    }
    default:
      return false;
  }
}

namespace {

// For degree 1 the one-sided mu variants collapse to D; comparisons are
// made on the rewritten matrices.
FCMatrix normalize_deg1(const FCMatrix& M) {
  if (M.n() != 1) return M;
  std::vector<std::vector<Symbol>> rows(2);
  for (int q = 0; q <= 1; ++q) {
    rows[q].reserve(M.d() + 1);
    for (const Symbol& s : M.row(q))
      rows[q].push_back(s.is(SymKind::MuUp) || s.is(SymKind::MuDown)
                            ? Symbol::delta()
                            : s);
  }
  return FCMatrix(1, M.d(), std::move(rows));
}

}  // namespace

bool includes_fc(const FCMatrix& M1, const FCMatrix& M2) {
  if (M1.n() != M2.n() || M1.d() != M2.d())
    throw std::invalid_argument("includes_fc: shape mismatch");
  FCMatrix A = normalize_deg1(M1);
  FCMatrix B = normalize_deg1(M2);
  for (int q = 0; q <= A.n(); ++q)
    for (int i = 0; i <= A.d(); ++i)
      if (!leqC(A.entry(q, i), B.entry(q, i))) return false;
  // A mu run pins the column alignment between rows 0 and 1; the larger
  // matrix must either swallow both anchor cells into its zero region or
  // repeat the same alignment.
  int p = first_of(A.row(0), SymKind::Mu);
  if (p <= A.d()) {
    int shift = A.min_col(1) - A.min_col(0);
    bool b1 = B.min_col(0) <= p && B.min_col(1) <= p + shift;
    bool b2 = first_of(B.row(0), SymKind::Mu) <= B.d() &&
              B.min_col(1) - B.min_col(0) == shift;
    if (!b1 && !b2) return false;
  }
  return true;
}

Lattice build_lattice(int n, int d) {
  Lattice L;
  L.n = n;
  L.d = d;
  L.nodes = enumerate_fc(n, d);
  int count = static_cast<int>(L.nodes.size());
  L.leq.assign(count, std::vector<bool>(count, false));
  parallel_for(0, count, [&](std::int64_t i) {
    for (int j = 0; j < count; ++j)
      L.leq[i][j] = includes_fc(L.nodes[i], L.nodes[j]);
  });
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (i == j || !L.leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < count; ++k)
        if (k != i && k != j && L.leq[i][k] && L.leq[k][j]) {
          cover = false;
          break;
        }
      if (cover) L.hasse.emplace_back(i, j);
    }
  for (int v = 0; v < count; ++v) {
    const FCMatrix& M = L.nodes[v];
    bool ok = true;
    int prev = 0;
    for (int q = 0; q <= n && ok; ++q) {
      int m = M.min_col(q);
      for (int c = 0; c <= d && ok; ++c)
        ok = c < m ? M.entry(q, c).is(SymKind::Delta)
                   : M.entry(q, c).is(SymKind::R);
      ok = ok && m >= prev;
      prev = m;
    }
    if (ok) L.rees.push_back(v);
  }
  return L;
}

std::vector<std::pair<std::string, FCMatrix>> family_d0(int n) {
  if (n < 2) throw std::invalid_argument("family_d0: degree must be >= 2");
  auto column = [&](const std::vector<Symbol>& low) {
    std::vector<std::vector<Symbol>> rows;
    for (int q = 0; q <= n; ++q)
      rows.push_back({q < static_cast<int>(low.size()) ? low[q]
                                                       : Symbol::delta()});
    return FCMatrix(n, 0, std::move(rows));
  };
  const Symbol R = Symbol::big_r();
  std::vector<std::pair<std::string, FCMatrix>> out;
  out.emplace_back("Delta", column({}));
  out.emplace_back("R_0", column({R}));
  out.emplace_back("mu_down", column({R, Symbol::muD()}));
  out.emplace_back("mu_up", column({R, Symbol::muU()}));
  out.emplace_back("mu", column({R, Symbol::mu()}));
  out.emplace_back("R_1", column({R, R}));
  out.emplace_back("mu_S2",
                   column({R, Symbol::mu(),
                           Symbol::nsub(NormalSubgroup::symmetric(2))}));
  std::vector<Symbol> rs;
  for (int q = 2; q <= n; ++q) {
    rs.assign(q, R);
    for (const NormalSubgroup& N : nontrivial_normal_subgroups(q)) {
      std::vector<Symbol> low = rs;
      low.push_back(Symbol::nsub(N));
      out.emplace_back("R_" + N.label(), column(low));
    }
    std::vector<Symbol> low = rs;
    low.push_back(R);
    out.emplace_back("R_" + std::to_string(q), column(low));
  }
  return out;
}

std::vector<std::pair<std::string, FCMatrix>> family_n1(int d) {
  if (d < 1) throw std::invalid_argument("family_n1: twist bound must be >= 1");
  auto name = [](const char* stem, int i, int j) {
    return std::string(stem) + "_" + std::to_string(i) + "_" + std::to_string(j);
  };
  std::vector<std::pair<std::string, FCMatrix>> out;
  for (int i = 0; i <= d + 1; ++i)
    for (int j = i; j <= d + 1; ++j)
      out.emplace_back(name("R", i, j),
                       FCMatrix(1, d, {stair(d, i), stair(d, j)}));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      std::vector<Symbol> r0 = stair(d, j);
      std::vector<Symbol> r1 = stair(d, j + 1);
      for (int c = i; c < j; ++c) r0[c] = Symbol::mu();
      for (int c = i + 1; c <= j; ++c) r1[c] = Symbol::mu();
      out.emplace_back(name("sigma", i, j),
                       FCMatrix(1, d, {std::move(r0), std::move(r1)}));
    }
  for (int i = 1; i < d; ++i)
    for (int j = i + 2; j <= d + 1; ++j) {
      std::vector<Symbol> r0 = stair(d, i);
      std::vector<Symbol> r1 = stair(d, j);
      r0[i - 1] = Symbol::mu();
      r1[j - 1] = Symbol::mu();
      out.emplace_back(name("tau", i, j),
                       FCMatrix(1, d, {std::move(r0), std::move(r1)}));
    }
  return out;
}

std::string lattice_to_dot(const Lattice& L, bool labels) {
  std::ostringstream os;
  os << "digraph lattice {\n"
     << "  rankdir=BT;\n"
     << "  node [shape=box, fontname=\"monospace\", fontsize=9];\n";
  std::vector<bool> is_rees(L.nodes.size(), false);
  for (int r : L.rees) is_rees[r] = true;
  for (std::size_t v = 0; v < L.nodes.size(); ++v) {
    os << "  n" << v << " [";
    if (labels) {
      os << "label=\"#" << v << "\\n";
      for (int q = L.n; q >= 0; --q) {
        for (int i = 0; i <= L.d; ++i) {
          if (i) os << ' ';
          os << L.nodes[v].entry(q, i).token();
        }
        os << "\\n";
      }
      os << "\"";
    } else {
      os << "label=\"\"";
    }
    if (is_rees[v]) os << " style=filled fillcolor=lightblue";
    os << "];\n";
  }
  for (const auto& e : L.hasse)
    os << "  n" << e.first << " -> n" << e.second << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ptw
