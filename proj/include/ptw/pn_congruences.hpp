#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ptw/partition.hpp"

namespace ptw {

struct PnCongruence {
  std::string name;
  std::function<bool(const Partition&, const Partition&)> member;
};

// The congruences of P_n: Rees congruences R_q, the relations
// R_N = R_{q-1} u nu_N, the hat-kernel relations lam_q/rho_q/mu_q for
// q in {0,1}, and lam_{S2}/rho_{S2}/mu_{S2}.  Deduplicated for n <= 2,
// where some entries of the list coincide.
std::vector<PnCongruence> enumerate_cong_Pn(int n);

}  // namespace ptw
