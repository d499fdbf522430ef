#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ptw/partition.hpp"

namespace ptw {

// Element of Ptw(n) = N x P_n, or the adjoined zero of a d-twisted
// quotient Ptw(n,d).
class TwistedElement {
public:
  static TwistedElement zero() { return TwistedElement(); }
  static TwistedElement pair(std::int64_t i, Partition alpha);

  bool is_zero() const { return !alpha_.has_value(); }
  std::int64_t i() const { return i_; }
  const Partition& alpha() const { return *alpha_; }

  bool operator==(const TwistedElement& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return i_ == o.i_ && *alpha_ == *o.alpha_;
  }
  bool operator!=(const TwistedElement& o) const { return !(*this == o); }

private:
  TwistedElement() : i_(0) {}
  std::int64_t i_ = 0;
  std::optional<Partition> alpha_;
};

// D-class coordinate of Ptw(n): rank q and column i.
struct DCoord {
  int q;
  std::int64_t i;
};

// (i,a)(j,b) = (i+j+Phi(a,b), ab) in the infinite monoid.
TwistedElement mul_inf(const TwistedElement& a, const TwistedElement& b);

// Same, but the product drops to zero when its float count exceeds d;
// zero absorbs.
TwistedElement mul_d(const TwistedElement& a, const TwistedElement& b,
                     std::int64_t d);

DCoord dcoord(const TwistedElement& a);

// Membership in the ideal I_{q1 i1} u ... u I_{qk ik}: some corner has
// rank a <= q_t and i >= i_t.
bool ideal_member(const TwistedElement& a, const std::vector<DCoord>& corners);

}  // namespace ptw
