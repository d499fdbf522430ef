#include "ptw/cpair.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ptw {

// ---------------------------------------------------------------- RowSpec

RowSpec::RowSpec(std::vector<Symbol> prefix, Symbol tail)
    : prefix_(std::move(prefix)), tail_(tail) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

RowSpec RowSpec::constant(Symbol s) { return RowSpec({}, s); }

const Symbol& RowSpec::entry(int i) const {
    assert(i >= 0);
    if (i < static_cast<int>(prefix_.size())) return prefix_[static_cast<size_t>(i)];
    return tail_;
}

bool RowSpec::operator==(const RowSpec& o) const {
    return tail_ == o.tail_ && prefix_ == o.prefix_;
}

// ------------------------------------------------------------------ CPair

CPair::CPair(int n, std::vector<NatCong> theta, std::vector<RowSpec> rows)
    : n_(n), theta_(std::move(theta)), rows_(std::move(rows)) {
    if (n_ < 1) throw std::invalid_argument("CPair: degree must be at least 1");
    if (theta_.size() != static_cast<size_t>(n_ + 1) ||
        rows_.size() != static_cast<size_t>(n_ + 1))
        throw std::invalid_argument("CPair: need n+1 chain entries and n+1 rows");
}

const NatCong& CPair::theta(int q) const {
    if (q < 0 || q > n_) throw std::out_of_range("CPair::theta: bad rank");
    return theta_[static_cast<size_t>(q)];
}

const RowSpec& CPair::row(int q) const {
    if (q < 0 || q > n_) throw std::out_of_range("CPair::row: bad rank");
    return rows_[static_cast<size_t>(q)];
}

const Symbol& CPair::entry(int q, int i) const { return row(q).entry(i); }

bool CPair::operator==(const CPair& o) const {
    return n_ == o.n_ && theta_ == o.theta_ && rows_ == o.rows_;
}

// ------------------------------------------------------------- validation

namespace {

std::vector<Symbol> repeated(const Symbol& s, int count) {
    return std::vector<Symbol>(static_cast<size_t>(count), s);
}

bool isMuFamily(const Symbol& z) {
    return z.is(SymKind::Mu) || z.is(SymKind::MuUp) || z.is(SymKind::MuDown) ||
           z.is(SymKind::Delta);
}

// Allowed eventual symbols of rows 0/1 for period d: the hat-kernel
// refinements collapse to mu alone once d > 1.
bool isXi(const Symbol& x, int d) {
    if (x.is(SymKind::Mu)) return true;
    if (d != 1) return false;
    return x.is(SymKind::Rho) || x.is(SymKind::Lam) || x.is(SymKind::R);
}

bool hasPeriodOne(const NatCong& t) {
    return !t.is_trivial() && t.per() == ExtNat::finite(1);
}

struct Rows01 {
    int type;  // 1..7
    // First initial mu of row 0 and its matching cell in row 1; only
    // meaningful for types 2, 5 and 7.
    int muin0 = -1;
    int muin1 = -1;
};

std::optional<Rows01> classify01(const CPair& P) {
    const RowSpec& r0 = P.row(0);
    const RowSpec& r1 = P.row(1);
    const NatCong& t0 = P.theta(0);
    const NatCong& t1 = P.theta(1);
    const Symbol D = Symbol::delta();
    const Symbol MU = Symbol::mu();

    // Type 1: both rows all Delta, chain unconstrained.
    if (r0 == RowSpec::constant(D) && r1 == RowSpec::constant(D))
        return Rows01{1, -1, -1};

    // Type 2: trivial chain entries; row 0 = D^i mu^w, row 1 = D^i z mu^w.
    if (t0.is_trivial() && t1.is_trivial() && r0.tail() == MU) {
        int i = r0.bound();
        bool allDelta = true;
        for (int c = 0; c < i; ++c) allDelta = allDelta && r0.entry(c) == D;
        if (allDelta) {
            Symbol z = r1.entry(i);
            if (isMuFamily(z)) {
                auto pre = repeated(D, i);
                pre.push_back(z);
                if (r1 == RowSpec(std::move(pre), MU)) return Rows01{2, i, i + 1};
            }
        }
    }

    // Type 3: theta_0 = (m, m+1)#, row 0 = D^m xi^w with xi in {rho, lam, R},
    // row 1 all Delta.  theta_1 is only constrained by the chain.
    if (hasPeriodOne(t0) && r1 == RowSpec::constant(D)) {
        int m = t0.min().value();
        Symbol xi = r0.entry(m);
        if ((xi.is(SymKind::Rho) || xi.is(SymKind::Lam) || xi.is(SymKind::R)) &&
            r0 == RowSpec(repeated(D, m), xi))
            return Rows01{3, -1, -1};
    }

    if (t0.is_trivial() || t1.is_trivial()) return std::nullopt;
    int m = t0.min().value();
    int d = t0.per().value();
    int l = t1.min().value();
    bool samePer = t1.per() == ExtNat::finite(d);

    // Type 4: equal chain entries, identical rows D^m xi^w.
    if (samePer && l == m) {
        Symbol xi = r0.entry(m);
        if (isXi(xi, d) && r0 == RowSpec(repeated(D, m), xi) && r1 == r0)
            return Rows01{4, -1, -1};
    }

    // Type 5: theta_1 shifted by one; an initial mu block in both rows.
    if (samePer && l == m + 1 && m >= 1) {
        Symbol xi = r0.entry(m);
        int i = 0;
        while (i < m && r0.entry(i) == D) ++i;
        if (i < m && isXi(xi, d)) {
            auto pre0 = repeated(D, i);
            auto mids = repeated(MU, m - i);
            pre0.insert(pre0.end(), mids.begin(), mids.end());
            if (r0 == RowSpec(std::move(pre0), xi)) {
                Symbol z = r1.entry(i);
                if (isMuFamily(z)) {
                    auto pre1 = repeated(D, i);
                    pre1.push_back(z);
                    auto mids1 = repeated(MU, m - i);  // columns i+1 .. m
                    pre1.insert(pre1.end(), mids1.begin(), mids1.end());
                    if (r1 == RowSpec(std::move(pre1), xi)) return Rows01{5, i, i + 1};
                }
            }
        }
    }

    // Type 6: row 1 starts strictly later, single cell z at l-1.
    if (samePer && l > m) {
        Symbol xi = r0.entry(m);
        if (isXi(xi, d) && r0 == RowSpec(repeated(D, m), xi)) {
            Symbol z = r1.entry(l - 1);
            if (isMuFamily(z)) {
                auto pre1 = repeated(D, l - 1);
                pre1.push_back(z);
                if (r1 == RowSpec(std::move(pre1), xi)) return Rows01{6, -1, -1};
            }
        }
    }

    // Type 7: matching single mu cells one step before each minimum,
    // congruent positions mod d.
    if (samePer && m >= 1 && l - 1 > m && (l - 1 - m) % d == 0) {
        Symbol xi = r0.entry(m);
        if (isXi(xi, d)) {
            auto pre0 = repeated(D, m - 1);
            pre0.push_back(MU);
            auto pre1 = repeated(D, l - 1);
            pre1.push_back(MU);
            if (r0 == RowSpec(std::move(pre0), xi) && r1 == RowSpec(std::move(pre1), xi))
                return Rows01{7, m - 1, l - 1};
        }
    }

    return std::nullopt;
}

// Rows of rank >= 2: all Delta; or Delta prefix, a nondecreasing run of
// nontrivial normal subgroups, then a constant subgroup no later than the
// chain minimum; or the same with an R tail starting exactly at the minimum
// of a period-1 chain entry.  Returns an empty string on success.
std::string checkHighRow(const CPair& P, int q) {
    const RowSpec& r = P.row(q);
    const NatCong& t = P.theta(q);
    const Symbol D = Symbol::delta();

    for (int c = 0; c <= r.bound(); ++c) {
        const Symbol& s = r.entry(c);
        if (s.is(SymKind::Delta) || s.is(SymKind::R)) continue;
        if (s.is(SymKind::N)) {
            if (s.subgroup().q() != q) return "subgroup degree must match the row rank";
            continue;
        }
        return "rows of rank >= 2 admit only Delta, subgroup and R entries";
    }

    if (r == RowSpec::constant(D)) return "";

    int lead = 0;
    while (lead < r.bound() && r.entry(lead) == D) ++lead;

    if (r.tail().is(SymKind::N)) {
        int k = r.bound();
        for (int c = lead; c < k; ++c)
            if (!r.entry(c).is(SymKind::N))
                return "only subgroup entries may precede a constant subgroup tail";
        for (int c = lead; c < k; ++c)
            if (r.entry(c).subgroup().level() > r.entry(c + 1).subgroup().level())
                return "subgroup entries must be nondecreasing";
        if (!(ExtNat::finite(k) <= t.min()))
            return "the subgroup tail must be constant from the chain minimum on";
        return "";
    }

    if (r.tail().is(SymKind::R)) {
        if (!hasPeriodOne(t)) return "a cofinal R run needs a period-1 chain entry";
        int m = t.min().value();
        if (r.bound() != m) return "the R run must start exactly at the chain minimum";
        for (int c = lead; c < m; ++c)
            if (!r.entry(c).is(SymKind::N))
                return "only subgroup entries may precede the R run";
        for (int c = lead; c + 1 < m; ++c)
            if (r.entry(c).subgroup().level() > r.entry(c + 1).subgroup().level())
                return "subgroup entries must be nondecreasing";
        return "";
    }

    return "rows of rank >= 2 must end in Delta, a subgroup, or R";
}

std::optional<Violation> scanAdjacent(const CPair& P) {
    int maxB = 0;
    for (int q = 0; q <= P.n(); ++q) maxB = std::max(maxB, P.row(q).bound());
    for (int q = 1; q <= P.n(); ++q)
        for (int c = 0; c <= maxB + 1; ++c) {
            const Symbol& up = P.entry(q, c);
            const Symbol& lo = P.entry(q - 1, c);
            if (!below_ok(up, lo)) {
                std::string tag = up.is(SymKind::N)  ? "V1"
                                  : up.is(SymKind::R) ? "V2"
                                                      : "vertical";
                return Violation{q, c,
                                 tag + ": " + up.token() + " may not sit directly above " +
                                     lo.token()};
            }
        }
    for (int q = 0; q <= P.n(); ++q)
        for (int c = 0; c <= maxB + 1; ++c) {
            const Symbol& here = P.entry(q, c);
            const Symbol& next = P.entry(q, c + 1);
            if (!right_ok(here, next))
                return Violation{q, c,
                                 "horizontal: " + next.token() + " may not follow " +
                                     here.token()};
        }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> validate(const CPair& P) {
    for (int q = 1; q <= P.n(); ++q)
        if (!P.theta(q).leq(P.theta(q - 1)))
            return Violation{q, -1,
                             "chain: entry " + std::to_string(q) +
                                 " is not contained in entry " + std::to_string(q - 1)};

    for (int q = 0; q <= 1 && q <= P.n(); ++q)
        for (int c = 0; c <= P.row(q).bound(); ++c) {
            const Symbol& s = P.entry(q, c);
            if (s.is(SymKind::N))
                return Violation{q, c, "subgroup symbols live in rows of rank >= 2"};
            if (q == 0 && (s.is(SymKind::MuUp) || s.is(SymKind::MuDown)))
                return Violation{q, c, "one-sided mu symbols live in the rank-1 row"};
        }

    if (!classify01(P))
        return Violation{1, -1, "rows 0 and 1 match none of the joint row shapes"};

    for (int q = 2; q <= P.n(); ++q)
        if (auto msg = checkHighRow(P, q); !msg.empty()) return Violation{q, -1, msg};

    if (auto v = scanAdjacent(P)) return v;

    int oneSided = 0;
    for (int q = 0; q <= P.n(); ++q) {
        const RowSpec& r = P.row(q);
        if (r.tail().is(SymKind::MuUp) || r.tail().is(SymKind::MuDown))
            return Violation{q, -1, "a one-sided mu cannot repeat forever"};
        for (int c = 0; c < r.bound(); ++c)
            if (r.entry(c).is(SymKind::MuUp) || r.entry(c).is(SymKind::MuDown)) ++oneSided;
    }
    if (oneSided > 1)
        return Violation{1, -1, "at most one one-sided mu entry in the whole matrix"};

    return std::nullopt;
}

std::optional<ExceptionalInfo> is_exceptional(const CPair& P) {
    for (int q = 2; q <= P.n(); ++q) {
        const NatCong& t = P.theta(q);
        if (t.is_trivial()) continue;
        int per = t.per().value();
        if (per % 2 != 0) continue;
        int m = t.min().value();
        int d = per / 2;
        if (q > 2) {
            Symbol alt = Symbol::nsub(NormalSubgroup::alternating(q));
            if (!(P.entry(q, m) == alt)) continue;
        } else {
            if (!P.entry(2, m).is(SymKind::Delta)) continue;
            const Symbol& s1 = P.entry(1, m);
            if (!(s1.is(SymKind::Mu) || s1.is(SymKind::Rho) || s1.is(SymKind::Lam) ||
                  s1.is(SymKind::R)))
                continue;
            if (!NatCong::cyclic(m, d).leq(P.theta(1))) continue;
        }
        return ExceptionalInfo{q, NatCong::cyclic(m, d)};
    }
    return std::nullopt;
}

// ------------------------------------------------------------- membership

namespace {

// i < min theta, with the trivial chain entry counting as minimum infinity.
bool belowMin(int i, const NatCong& t) { return !(t.min() <= ExtNat::finite(i)); }

}  // namespace

bool cg_member(const CPair& P, const TwistedElement& a, const TwistedElement& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("cg_member: the infinite monoid has no zero");
    const Partition& al = a.alpha();
    const Partition& be = b.alpha();
    if (al.n() != P.n() || be.n() != P.n())
        throw std::invalid_argument("cg_member: degree mismatch");

    int q = al.rank(), r = be.rank();
    int i = static_cast<int>(a.i()), j = static_cast<int>(b.i());

    if (q == r && al == be && P.theta(q).contains(i, j)) return true;

    const Symbol& s = P.entry(q, i);
    const Symbol& t = P.entry(r, j);
    if (s.is(SymKind::R) && t.is(SymKind::R)) return true;
    if (!(s == t)) return false;

    switch (s.kind()) {
        case SymKind::N:
            return q == r && P.theta(q).contains(i, j) && greens(al, be, 'H') &&
                   subgroup_contains(s.subgroup(), pd(al, be));
        case SymKind::Lam:
            return greens(hat(al), hat(be), 'L');
        case SymKind::Rho:
            return greens(hat(al), hat(be), 'R');
        case SymKind::MuDown:
            return hat(al) == hat(be) && greens(al, be, 'L');
        case SymKind::MuUp:
            return hat(al) == hat(be) && greens(al, be, 'R');
        case SymKind::Mu: {
            if (!(hat(al) == hat(be))) return false;
            if (q == r) return P.theta(q).contains(i, j);
            if (!P.theta(0).contains(i + r, j + q)) return false;
            return belowMin(i, P.theta(q)) == belowMin(j, P.theta(r));
        }
        default:
            return false;  // matching Deltas are covered by the first clause
    }
}

bool cgx_member(const CPair& P, const TwistedElement& a, const TwistedElement& b) {
    auto exc = is_exceptional(P);
    if (!exc) throw std::invalid_argument("cgx_member: not an exceptional C-pair");
    if (cg_member(P, a, b)) return true;

    const Partition& al = a.alpha();
    const Partition& be = b.alpha();
    int x = exc->q;
    if (al.rank() != x || be.rank() != x) return false;
    int i = static_cast<int>(a.i()), j = static_cast<int>(b.i());
    if (!exc->half.contains(i, j) || P.theta(x).contains(i, j)) return false;
    if (!greens(al, be, 'H')) return false;
    return !pd(al, be).is_even();
}

// -------------------------------------------------------------- inclusion

namespace {

// Degree-1 collapse: one-sided mus act as Delta and lam/rho act as R, so
// comparisons are made on the rewritten form.
CPair normalizeDegree1(const CPair& P) {
    if (P.n() != 1) return P;
    auto fix = [](const Symbol& s) {
        switch (s.kind()) {
            case SymKind::MuUp:
            case SymKind::MuDown:
                return Symbol::delta();
            case SymKind::Lam:
            case SymKind::Rho:
                return Symbol::big_r();
            default:
                return s;
        }
    };
    std::vector<RowSpec> rows;
    for (int q = 0; q <= 1; ++q) {
        std::vector<Symbol> pre;
        pre.reserve(static_cast<size_t>(P.row(q).bound()));
        for (int c = 0; c < P.row(q).bound(); ++c) pre.push_back(fix(P.row(q).entry(c)));
        rows.emplace_back(std::move(pre), fix(P.row(q).tail()));
    }
    return CPair(1, {P.theta(0), P.theta(1)}, std::move(rows));
}

bool leqComponentwise(const CPair& A, const CPair& B) {
    for (int q = 0; q <= A.n(); ++q)
        if (!A.theta(q).leq(B.theta(q))) return false;
    for (int q = 0; q <= A.n(); ++q) {
        int maxB = std::max(A.row(q).bound(), B.row(q).bound());
        for (int c = 0; c <= maxB; ++c)
            if (!leqC(A.entry(q, c), B.entry(q, c))) return false;
    }
    return true;
}

bool hasInitialMu(const Rows01& c) {
    return c.type == 2 || c.type == 5 || c.type == 7;
}

}  // namespace

bool includes(const CPair& P1raw, bool exc1, const CPair& P2raw, bool exc2) {
    if (P1raw.n() != P2raw.n()) throw std::invalid_argument("includes: degree mismatch");
    CPair P1 = normalizeDegree1(P1raw);
    CPair P2 = normalizeDegree1(P2raw);
    auto e1 = is_exceptional(P1);
    auto e2 = is_exceptional(P2);
    if ((exc1 && !e1) || (exc2 && !e2))
        throw std::invalid_argument("includes: twisted flag on a non-exceptional C-pair");

    bool base = leqComponentwise(P1, P2);
    if (base) {
        auto c1 = classify01(P1);
        if (c1 && hasInitialMu(*c1)) {
            bool cut = P2.theta(0).min() <= ExtNat::finite(c1->muin0) &&
                       P2.theta(1).min() <= ExtNat::finite(c1->muin1);
            bool matched = false;
            auto c2 = classify01(P2);
            if (c2 && hasInitialMu(*c2))
                matched = (c2->muin1 - c2->muin0) == (c1->muin1 - c1->muin0);
            base = cut || matched;
        }
    }

    if (!exc1) return base;  // with or without exc2, the plain inclusion decides
    if (!base) return false;

    int x = e1->q;
    if (!exc2) {
        const NatCong& t2 = P2.theta(x);
        if (t2.is_trivial()) return false;  // unreachable once base holds
        long per1 = P1.theta(x).per().value();
        long per2 = t2.per().value();
        if (per1 % (2 * per2) != 0) return false;
        Symbol full = Symbol::nsub(NormalSubgroup::symmetric(x));
        int m2 = t2.min().value();
        int hi = std::max(m2, P2.row(x).bound());
        for (int c = m2; c <= hi; ++c) {
            const Symbol& s = P2.entry(x, c);
            if (!(s.is(SymKind::R) || s == full)) return false;
        }
        return true;
    }

    if (e2->q == x) {
        long per1 = P1.theta(x).per().value();
        long per2 = P2.theta(x).per().value();
        if (per1 % per2 != 0) return false;
        if (((per1 / per2) % 2) == 0) return false;
    }
    return true;
}

// ------------------------------------------------------------------ misc

bool finite_index(const CPair& P) { return !P.theta(P.n()).is_trivial(); }

CPair rees_cpair(int n, const std::vector<DCoord>& corners) {
    if (n < 1) throw std::invalid_argument("rees_cpair: degree must be at least 1");
    for (const auto& c : corners)
        if (c.q < 0 || c.q > n || c.i < 0)
            throw std::invalid_argument("rees_cpair: corner out of range");
    for (size_t s = 0; s < corners.size(); ++s)
        for (size_t t = 0; t < corners.size(); ++t) {
            if (s == t) continue;
            if (corners[s].q <= corners[t].q && corners[s].i >= corners[t].i)
                throw std::invalid_argument(
                    "rees_cpair: corners must be pairwise incomparable");
        }

    std::vector<NatCong> theta;
    std::vector<RowSpec> rows;
    for (int q = 0; q <= n; ++q) {
        long long m = -1;
        for (const auto& c : corners)
            if (c.q >= q) m = (m < 0) ? c.i : std::min<long long>(m, c.i);
        if (m < 0) {
            theta.push_back(NatCong::trivial());
            rows.push_back(RowSpec::constant(Symbol::delta()));
        } else {
            theta.push_back(NatCong::cyclic(static_cast<int>(m), 1));
            rows.emplace_back(std::vector<Symbol>(static_cast<size_t>(m), Symbol::delta()),
                              Symbol::big_r());
        }
    }
    return CPair(n, std::move(theta), std::move(rows));
}

int window(const CPair& P) {
    int mx = 0, px = 0, bx = 0;
    for (int q = 0; q <= P.n(); ++q) {
        const NatCong& t = P.theta(q);
        if (!t.is_trivial()) {
            mx = std::max(mx, static_cast<int>(t.min().value()));
            px = std::max(px, static_cast<int>(t.per().value()));
        }
        bx = std::max(bx, P.row(q).bound());
    }
    return std::max(2 * (mx + px) + 2, 2 * bx + 2);
}

}  // namespace ptw
