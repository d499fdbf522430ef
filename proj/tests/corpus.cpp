#include "corpus.hpp"

#include <utility>

namespace {

using ptw::CPair;
using ptw::DCoord;
using ptw::NatCong;
using ptw::NormalSubgroup;
using ptw::RowSpec;
using ptw::Symbol;

NatCong tv() { return NatCong::trivial(); }
NatCong un() { return NatCong::universal(); }
NatCong cyc(std::int64_t m, std::int64_t p) { return NatCong::cyclic(m, p); }

RowSpec cst(Symbol s) { return RowSpec::constant(s); }
RowSpec pre(std::vector<Symbol> p, Symbol t) { return RowSpec(std::move(p), t); }

Symbol D() { return Symbol::delta(); }
Symbol M() { return Symbol::mu(); }
Symbol MU() { return Symbol::muU(); }
Symbol MD() { return Symbol::muD(); }
Symbol L() { return Symbol::lam(); }
Symbol P() { return Symbol::rho(); }
Symbol R() { return Symbol::big_r(); }
Symbol S2() { return Symbol::nsub(NormalSubgroup::symmetric(2)); }
Symbol A3() { return Symbol::nsub(NormalSubgroup::alternating(3)); }
Symbol S3() { return Symbol::nsub(NormalSubgroup::symmetric(3)); }
Symbol A4() { return Symbol::nsub(NormalSubgroup::alternating(4)); }
Symbol K4() { return Symbol::nsub(NormalSubgroup::klein4()); }

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> v;
  auto add = [&](std::string name, CPair p, int exc_q, bool full) {
    v.push_back({std::move(name), std::move(p), exc_q, full});
  };

  // degree 2, exhaustively closable
  add("delta2", CPair(2, {tv(), tv(), tv()}, {cst(D()), cst(D()), cst(D())}),
      -1, true);
  add("del-chain",
      CPair(2, {un(), cyc(1, 2), cyc(2, 4)}, {cst(D()), cst(D()), cst(D())}),
      -1, true);
  add("noncomp-pi1",
      CPair(2, {tv(), tv(), tv()}, {cst(M()), pre({D()}, M()), cst(D())}), -1,
      true);
  add("noncomp-pi2",
      CPair(2, {cyc(0, 1), cyc(2, 1), tv()},
            {cst(R()), pre({D(), M()}, R()), cst(D())}),
      -1, true);
  add("weirdproj",
      CPair(2, {tv(), tv(), tv()}, {cst(M()), cst(M()), cst(D())}), -1, true);
  add("rt2-muU",
      CPair(2, {tv(), tv(), tv()},
            {pre({D(), D()}, M()), pre({D(), D(), MU()}, M()), cst(D())}),
      -1, true);
  add("rt2-muD",
      CPair(2, {tv(), tv(), tv()},
            {pre({D()}, M()), pre({D(), MD()}, M()), cst(D())}),
      -1, true);
  add("tau-lam0", CPair(2, {un(), un(), un()}, {cst(L()), cst(D()), cst(D())}),
      -1, true);
  add("rt3-rho",
      CPair(2, {cyc(1, 1), cyc(3, 6), tv()},
            {pre({D()}, P()), cst(D()), cst(D())}),
      -1, true);
  add("rt3-R",
      CPair(2, {cyc(2, 1), cyc(4, 1), tv()},
            {pre({D(), D()}, R()), cst(D()), cst(D())}),
      -1, true);
  add("tau-rho1", CPair(2, {un(), un(), un()}, {cst(P()), cst(P()), cst(D())}),
      -1, true);
  add("rt4-mu-d2",
      CPair(2, {cyc(1, 2), cyc(1, 2), tv()},
            {pre({D()}, M()), pre({D()}, M()), cst(D())}),
      -1, true);
  add("rees-1-2", ptw::rees_cpair(2, {DCoord{1, 2}}), -1, true);
  add("rt5-lam-muU",
      CPair(2, {cyc(3, 1), cyc(4, 1), tv()},
            {pre({D(), M(), M()}, L()), pre({D(), MU(), M(), M()}, L()),
             cst(D())}),
      -1, true);
  add("rt5-d2",
      CPair(2, {cyc(2, 2), cyc(3, 2), tv()},
            {cst(M()), pre({D()}, M()), cst(D())}),
      -1, true);
  add("exc-q2-n2",
      CPair(2, {cyc(5, 2), cyc(6, 2), cyc(8, 4)},
            {pre({D()}, M()), pre({D(), MD()}, M()), cst(D())}),
      2, true);
  add("rt6-d2",
      CPair(2, {cyc(1, 2), cyc(3, 2), tv()},
            {pre({D()}, M()), pre({D(), D(), D()}, M()), cst(D())}),
      -1, true);
  add("rt7",
      CPair(2, {cyc(1, 1), cyc(4, 1), tv()},
            {pre({M()}, R()), pre({D(), D(), D(), M()}, R()), cst(D())}),
      -1, true);
  add("rt7-d2",
      CPair(2, {cyc(2, 2), cyc(5, 2), tv()},
            {pre({D()}, M()), pre({D(), D(), D(), D()}, M()), cst(D())}),
      -1, true);
  add("tau-muS2", CPair(2, {un(), un(), un()}, {cst(M()), cst(M()), cst(S2())}),
      -1, true);
  add("rt9-prefix",
      CPair(2, {cyc(0, 2), cyc(0, 2), cyc(2, 4)},
            {cst(M()), cst(M()), pre({D(), D()}, S2())}),
      -1, true);
  add("rt10",
      CPair(2, {cyc(0, 1), cyc(1, 1), cyc(3, 1)},
            {cst(R()), pre({M()}, R()), pre({D(), S2(), S2()}, R())}),
      -1, true);
  add("rees-2corner", ptw::rees_cpair(2, {DCoord{0, 1}, DCoord{2, 3}}), -1,
      true);
  add("exc-q2-R",
      CPair(2, {cyc(0, 1), cyc(1, 1), cyc(2, 2)},
            {cst(R()), pre({D()}, R()), cst(D())}),
      2, true);
  add("tau-lam1", CPair(2, {un(), un(), un()}, {cst(L()), cst(L()), cst(D())}),
      -1, true);
  add("tau-lamS2",
      CPair(2, {un(), un(), un()}, {cst(L()), cst(L()), cst(S2())}), -1, true);
  add("tau-R-S2", CPair(2, {un(), un(), un()}, {cst(R()), cst(R()), cst(S2())}),
      -1, true);

  // degree 3, exhaustively closable
  add("tau3-muS2",
      CPair(3, {un(), un(), un(), un()},
            {cst(M()), cst(M()), cst(S2()), cst(D())}),
      -1, true);
  add("tau3-R-A3",
      CPair(3, {un(), un(), un(), un()},
            {cst(R()), cst(R()), cst(R()), cst(A3())}),
      -1, true);
  add("tau3-R-S3",
      CPair(3, {un(), un(), un(), un()},
            {cst(R()), cst(R()), cst(R()), cst(S3())}),
      -1, true);
  add("tau3-rho1",
      CPair(3, {un(), un(), un(), un()},
            {cst(P()), cst(P()), cst(D()), cst(D())}),
      -1, true);
  add("exc-q3",
      CPair(3, {cyc(1, 1), cyc(4, 1), cyc(4, 1), cyc(7, 8)},
            {pre({M()}, R()), pre({D(), D(), D(), M()}, R()),
             pre({D(), D(), D(), D()}, R()),
             pre({D(), D(), D(), D(), D()}, A3())}),
      3, true);
  add("rt9-S3",
      CPair(3, {un(), un(), un(), cyc(2, 3)},
            {cst(R()), cst(R()), cst(R()), pre({D()}, S3())}),
      -1, true);
  add("rt9-mixed",
      CPair(3, {un(), un(), un(), cyc(2, 2)},
            {cst(R()), cst(R()), cst(R()), pre({A3(), A3()}, S3())}),
      -1, true);
  add("rt10-n3",
      CPair(3, {un(), un(), un(), cyc(3, 1)},
            {cst(R()), cst(R()), cst(R()), pre({D(), A3(), S3()}, R())}),
      -1, true);
  add("del3-chain",
      CPair(3, {cyc(0, 1), cyc(1, 2), cyc(2, 4), cyc(4, 8)},
            {cst(D()), cst(D()), cst(D()), cst(D())}),
      -1, true);
  add("noncomp3-pi1",
      CPair(3, {tv(), tv(), tv(), tv()},
            {cst(M()), pre({D()}, M()), cst(D()), cst(D())}),
      -1, true);
  add("noncomp3-pi2",
      CPair(3, {cyc(0, 1), cyc(2, 1), tv(), tv()},
            {cst(R()), pre({D(), M()}, R()), cst(D()), cst(D())}),
      -1, true);
  add("rt2-n3",
      CPair(3, {tv(), tv(), tv(), tv()},
            {pre({D(), D(), D()}, M()), pre({D(), D(), D(), MU()}, M()),
             cst(D()), cst(D())}),
      -1, true);
  add("rt5-rho-muD-n3",
      CPair(3, {cyc(1, 1), cyc(2, 1), tv(), tv()},
            {pre({M()}, P()), pre({MD(), M()}, P()), cst(D()), cst(D())}),
      -1, true);
  add("exc-q2-n3",
      CPair(3, {cyc(5, 2), cyc(6, 2), cyc(8, 4), cyc(9, 4)},
            {pre({D()}, M()), pre({D(), MD()}, M()), cst(D()), cst(D())}),
      2, true);
  add("rees3",
      ptw::rees_cpair(3, {DCoord{0, 0}, DCoord{1, 2}, DCoord{3, 3}}), -1,
      true);

  // degree 4, sampled probes only
  add("rees4", ptw::rees_cpair(4, {DCoord{0, 0}, DCoord{1, 2}, DCoord{3, 3}}),
      -1, false);
  add("tau4-lam0",
      CPair(4, {un(), un(), un(), un(), un()},
            {cst(L()), cst(D()), cst(D()), cst(D()), cst(D())}),
      -1, false);
  add("tau4-rho1",
      CPair(4, {un(), un(), un(), un(), un()},
            {cst(P()), cst(P()), cst(D()), cst(D()), cst(D())}),
      -1, false);
  add("tau4-muS2",
      CPair(4, {un(), un(), un(), un(), un()},
            {cst(M()), cst(M()), cst(S2()), cst(D()), cst(D())}),
      -1, false);
  add("tau4-R-A3",
      CPair(4, {un(), un(), un(), un(), un()},
            {cst(R()), cst(R()), cst(R()), cst(A3()), cst(D())}),
      -1, false);
  add("weirdproj4",
      CPair(4, {tv(), tv(), tv(), tv(), tv()},
            {cst(M()), cst(M()), cst(D()), cst(D()), cst(D())}),
      -1, false);
  add("exc1",
      CPair(4, {cyc(0, 1), cyc(2, 1), cyc(3, 1), cyc(6, 1), cyc(9, 2)},
            {cst(R()), pre({D(), M()}, R()), pre({D(), S2(), S2()}, R()),
             pre({D(), D(), D(), D(), A3(), S3()}, R()),
             pre({D(), D(), D(), D(), D(), D(), K4(), K4()}, A4())}),
      4, false);
  add("exc2",
      CPair(4, {cyc(1, 1), cyc(4, 1), cyc(4, 1), cyc(7, 8), cyc(7, 16)},
            {pre({M()}, R()), pre({D(), D(), D(), M()}, R()),
             pre({D(), D(), D(), D()}, R()),
             pre({D(), D(), D(), D(), D()}, A3()), cst(D())}),
      3, false);
  add("exc3",
      CPair(4, {cyc(5, 2), cyc(6, 2), cyc(8, 4), cyc(9, 4), tv()},
            {pre({D()}, M()), pre({D(), MD()}, M()), cst(D()), cst(D()),
             cst(D())}),
      2, false);

  return v;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}
