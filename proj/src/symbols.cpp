#include "ptw/symbols.hpp"

#include <stdexcept>

namespace ptw {

Symbol Symbol::nsub(NormalSubgroup N) {
  if (N.is_trivial_set())
    throw std::invalid_argument("Symbol: N-symbols carry nontrivial subgroups");
  Symbol s(SymKind::N);
  s.sub_ = N;
  return s;
}

std::string Symbol::token() const {
  switch (kind_) {
    case SymKind::Delta: return "D";
    case SymKind::MuUp: return "muU";
    case SymKind::MuDown: return "muD";
    case SymKind::Mu: return "mu";
    case SymKind::Lam: return "lam";
    case SymKind::Rho: return "rho";
    case SymKind::R: return "R";
    case SymKind::N: {
      std::string t = "N:" + sub_->label();
      if (sub_->q() >= 5) t += "@" + std::to_string(sub_->q());
      return t;
    }
  }
  return {};
}

Symbol Symbol::from_token(const std::string& tok) {
  if (tok == "D") return delta();
  if (tok == "muU") return muU();
  if (tok == "muD") return muD();
  if (tok == "mu") return mu();
  if (tok == "lam") return lam();
  if (tok == "rho") return rho();
  if (tok == "R") return big_r();
  if (tok.rfind("N:", 0) == 0) {
    std::string body = tok.substr(2);
    auto at = body.find('@');
    std::string label = at == std::string::npos ? body : body.substr(0, at);
    if (label == "K4") return nsub(NormalSubgroup::klein4());
    if (label.size() >= 2 && (label[0] == 'A' || label[0] == 'S')) {
      int q = std::stoi(label.substr(1));
      if (at != std::string::npos && std::stoi(body.substr(at + 1)) != q)
        throw std::invalid_argument("Symbol: inconsistent token " + tok);
      return nsub(label[0] == 'A' ? NormalSubgroup::alternating(q)
                                  : NormalSubgroup::symmetric(q));
    }
  }
  throw std::invalid_argument("Symbol: unknown token " + tok);
}

bool leqC(const Symbol& s, const Symbol& t) {
  if (s == t) return true;
  if (s.kind() == SymKind::Delta) return true;
  if (s.kind() == SymKind::R) return false;
  if (t.kind() == SymKind::R) return true;
  if (t.kind() == SymKind::Delta) return false;
  if (s.kind() == SymKind::N || t.kind() == SymKind::N) {
    return s.kind() == SymKind::N && t.kind() == SymKind::N &&
           s.subgroup().q() == t.subgroup().q() &&
           s.subgroup().level() <= t.subgroup().level();
  }
  // both in {muU, muD, mu, lam, rho}
  if (s.kind() == SymKind::MuUp || s.kind() == SymKind::MuDown)
    return t.kind() == SymKind::Mu || t.kind() == SymKind::Lam ||
           t.kind() == SymKind::Rho;
  if (s.kind() == SymKind::Mu)
    return t.kind() == SymKind::Lam || t.kind() == SymKind::Rho;
  return false;
}

namespace {

bool inMuLamRhoR(const Symbol& x) {
  return x.is(SymKind::Mu) || x.is(SymKind::Lam) || x.is(SymKind::Rho) ||
         x.is(SymKind::R);
}

}  // namespace

bool below_ok(const Symbol& s, const Symbol& below) {
  switch (s.kind()) {
    case SymKind::Delta: return true;
    case SymKind::MuUp:
    case SymKind::MuDown:
    case SymKind::Mu:
    case SymKind::N: return inMuLamRhoR(below);
    case SymKind::Lam: return below.is(SymKind::Lam);
    case SymKind::Rho: return below.is(SymKind::Rho);
    case SymKind::R: return below.is(SymKind::R);
  }
  return false;
}

bool right_ok(const Symbol& s, const Symbol& right) {
  switch (s.kind()) {
    case SymKind::Delta: return true;
    case SymKind::MuUp:
    case SymKind::MuDown:
    case SymKind::Mu: return inMuLamRhoR(right);
    case SymKind::Lam: return right.is(SymKind::Lam);
    case SymKind::Rho: return right.is(SymKind::Rho);
    case SymKind::N:
      if (right.is(SymKind::R)) return true;
      return right.is(SymKind::N) &&
             right.subgroup().q() == s.subgroup().q() && leqC(s, right);
    case SymKind::R: return right.is(SymKind::R);
  }
  return false;
}

std::vector<Symbol> symbol_alphabet(int n) {
  std::vector<Symbol> out = {Symbol::delta(), Symbol::muU(), Symbol::muD(),
                             Symbol::mu(),    Symbol::lam(), Symbol::rho(),
                             Symbol::big_r()};
  for (int q = 2; q <= n; ++q)
    for (const NormalSubgroup& N : nontrivial_normal_subgroups(q))
      out.push_back(Symbol::nsub(N));
  return out;
}

std::vector<Symbol> allowed_below(const Symbol& s, int n) {
  std::vector<Symbol> out;
  for (const Symbol& t : symbol_alphabet(n))
    if (below_ok(s, t)) out.push_back(t);
  return out;
}

std::vector<Symbol> allowed_right(const Symbol& s, int n) {
  std::vector<Symbol> out;
  for (const Symbol& t : symbol_alphabet(n))
    if (right_ok(s, t)) out.push_back(t);
  return out;
}

}  // namespace ptw
