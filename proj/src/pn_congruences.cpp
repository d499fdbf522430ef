#include "ptw/pn_congruences.hpp"

#include <stdexcept>

namespace ptw {

namespace {

bool nu_member(const NormalSubgroup& N, const Partition& a,
               const Partition& b) {
  if (a.rank() != N.q() || b.rank() != N.q()) return false;
  if (!greens(a, b, 'H')) return false;
  return subgroup_contains(N, pd(a, b));
}

}  // namespace

std::vector<PnCongruence> enumerate_cong_Pn(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_cong_Pn: n must be >= 1");
  std::vector<PnCongruence> out;

  auto rees = [](int q) {
    return [q](const Partition& a, const Partition& b) {
      return a == b || (a.rank() <= q && b.rank() <= q);
    };
  };
  for (int q = 0; q <= n; ++q)
    out.push_back({"R_" + std::to_string(q), rees(q)});

  for (int q = 2; q <= n; ++q) {
    for (const NormalSubgroup& N : nontrivial_normal_subgroups(q)) {
      auto base = rees(q - 1);
      out.push_back({"R_" + N.label(),
                     [base, N](const Partition& a, const Partition& b) {
                       return base(a, b) || nu_member(N, a, b);
                     }});
    }
  }

  // lam/rho/mu for q in {0,1}; mu_0 is the trivial congruence
  auto hatRel = [](int q, char rel) {
    return [q, rel](const Partition& a, const Partition& b) {
      if (a == b) return true;
      if (a.rank() > q || b.rank() > q) return false;
      if (rel == '=') return hat(a) == hat(b);
      return greens(hat(a), hat(b), rel);
    };
  };
  for (int q = 0; q <= 1; ++q) {
    std::string s = std::to_string(q);
    out.push_back({"lam_" + s, hatRel(q, 'L')});
    out.push_back({"rho_" + s, hatRel(q, 'R')});
    out.push_back({"mu_" + s, hatRel(q, '=')});
  }

  if (n >= 2) {
    NormalSubgroup S2 = NormalSubgroup::symmetric(2);
    auto withNu = [S2](std::function<bool(const Partition&, const Partition&)>
                           base) {
      return [base, S2](const Partition& a, const Partition& b) {
        return base(a, b) || nu_member(S2, a, b);
      };
    };
    out.push_back({"lam_S2", withNu(hatRel(1, 'L'))});
    out.push_back({"rho_S2", withNu(hatRel(1, 'R'))});
    out.push_back({"mu_S2", withNu(hatRel(1, '='))});
  }

  // For n <= 2 some list entries coincide (all of P_1's collapse to two);
  // dedupe by the relations they define.
  if (n <= 2) {
    std::vector<Partition> ps = enumerate_partitions(n);
    std::vector<PnCongruence> uniq;
    std::vector<std::vector<bool>> tables;
    for (auto& c : out) {
      std::vector<bool> table;
      table.reserve(ps.size() * ps.size());
      for (const auto& a : ps)
        for (const auto& b : ps) table.push_back(c.member(a, b));
      bool dup = false;
      for (const auto& t : tables)
        if (t == table) {
          dup = true;
          break;
        }
      if (!dup) {
        tables.push_back(std::move(table));
        uniq.push_back(std::move(c));
      }
    }
    return uniq;
  }
  return out;
}

}  // namespace ptw
