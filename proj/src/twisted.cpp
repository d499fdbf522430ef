#include "ptw/twisted.hpp"

#include <stdexcept>

namespace ptw {

TwistedElement TwistedElement::pair(std::int64_t i, Partition alpha) {
  if (i < 0) throw std::invalid_argument("TwistedElement: negative floats");
  TwistedElement e;
  e.i_ = i;
  e.alpha_ = std::move(alpha);
  return e;
}

TwistedElement mul_inf(const TwistedElement& a, const TwistedElement& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("mul_inf: zero is not an element of Ptw(n)");
  MulResult r = multiply(a.alpha(), b.alpha());
  return TwistedElement::pair(a.i() + b.i() + r.floats, std::move(r.product));
}

TwistedElement mul_d(const TwistedElement& a, const TwistedElement& b,
                     std::int64_t d) {
  if (a.is_zero() || b.is_zero()) return TwistedElement::zero();
  if (a.i() > d || b.i() > d)
    throw std::invalid_argument("mul_d: operand outside Ptw(n,d)");
  MulResult r = multiply(a.alpha(), b.alpha());
  std::int64_t i = a.i() + b.i() + r.floats;
  if (i > d) return TwistedElement::zero();
  return TwistedElement::pair(i, std::move(r.product));
}

DCoord dcoord(const TwistedElement& a) {
  if (a.is_zero()) throw std::invalid_argument("dcoord: zero has no D-class");
  return DCoord{a.alpha().rank(), a.i()};
}

bool ideal_member(const TwistedElement& a,
                  const std::vector<DCoord>& corners) {
  if (a.is_zero())
    throw std::invalid_argument("ideal_member: zero is not a pair");
  DCoord c = dcoord(a);
  for (const DCoord& t : corners)
    if (c.q <= t.q && c.i >= t.i) return true;
  return false;
}

}  // namespace ptw
