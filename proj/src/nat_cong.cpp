#include "ptw/nat_cong.hpp"

namespace ptw {

NatCong NatCong::cyclic(std::int64_t min, std::int64_t per) {
  assert(min >= 0 && per >= 1);
  NatCong c;
  c.trivial_ = false;
  c.min_ = min;
  c.per_ = per;
  return c;
}

bool NatCong::contains(std::int64_t i, std::int64_t j) const {
  if (i == j) return true;
  if (trivial_) return false;
  return i >= min_ && j >= min_ && (i - j) % per_ == 0;
}

bool NatCong::leq(const NatCong& other) const {
  return other.min() <= min() && other.per().divides(per());
}

}  // namespace ptw
