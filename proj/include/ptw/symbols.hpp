#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptw/partition.hpp"

namespace ptw {

enum class SymKind { Delta, MuUp, MuDown, Mu, Lam, Rho, R, N };

// C-matrix entry: one of D, muU, muD, mu, lam, rho, R, or an N-symbol
// carrying a nontrivial normal subgroup of some S_q.
class Symbol {
public:
  static Symbol delta() { return Symbol(SymKind::Delta); }
  static Symbol muU() { return Symbol(SymKind::MuUp); }
  static Symbol muD() { return Symbol(SymKind::MuDown); }
  static Symbol mu() { return Symbol(SymKind::Mu); }
  static Symbol lam() { return Symbol(SymKind::Lam); }
  static Symbol rho() { return Symbol(SymKind::Rho); }
  static Symbol big_r() { return Symbol(SymKind::R); }
  static Symbol nsub(NormalSubgroup N);

  SymKind kind() const { return kind_; }
  bool is(SymKind k) const { return kind_ == k; }
  const NormalSubgroup& subgroup() const { return *sub_; }

  std::string token() const;
  static Symbol from_token(const std::string& tok);

  bool operator==(const Symbol& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ != SymKind::N) return true;
    return *sub_ == *o.sub_;
  }
  bool operator!=(const Symbol& o) const { return !(*this == o); }

private:
  explicit Symbol(SymKind k) : kind_(k) {}
  SymKind kind_;
  std::optional<NormalSubgroup> sub_;
};

// The partial order on C-matrix entries: D below everything, R above
// everything, muU/muD - mu - lam/rho in the middle, and per-q chains of
// N-symbols; lam/rho, muU/muD and different-q N-chains are incomparable,
// as are N-symbols and the mu family.
bool leqC(const Symbol& s, const Symbol& t);

// Local adjacency rules: may `below` sit directly under `s`, may `right`
// sit directly right of `s`?
bool below_ok(const Symbol& s, const Symbol& below);
bool right_ok(const Symbol& s, const Symbol& right);

// Every symbol valid in a degree-n matrix, in a fixed deterministic order.
std::vector<Symbol> symbol_alphabet(int n);

std::vector<Symbol> allowed_below(const Symbol& s, int n);
std::vector<Symbol> allowed_right(const Symbol& s, int n);

}  // namespace ptw
