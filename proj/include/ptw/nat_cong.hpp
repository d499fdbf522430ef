#pragma once

#include <cassert>
#include <cstdint>

namespace ptw {

// Natural number extended with an infinity sentinel.  Infinity is the
// min/per of the trivial congruence; everything divides infinity,
// infinity divides only infinity.
class ExtNat {
public:
  static ExtNat finite(std::int64_t v) {
    assert(v >= 0);
    ExtNat e;
    e.inf_ = false;
    e.v_ = v;
    return e;
  }
  static ExtNat infinity() { return ExtNat{}; }

  bool is_inf() const { return inf_; }
  std::int64_t value() const {
    assert(!inf_);
    return v_;
  }

  bool divides(const ExtNat& x) const {
    if (x.inf_) return true;
    if (inf_) return false;
    return v_ != 0 && x.v_ % v_ == 0;
  }

  bool operator==(const ExtNat& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator!=(const ExtNat& o) const { return !(*this == o); }

  bool operator<=(const ExtNat& o) const {
    if (o.inf_) return true;
    if (inf_) return false;
    return v_ <= o.v_;
  }
  bool operator>=(const ExtNat& o) const { return o <= *this; }

private:
  ExtNat() : inf_(true), v_(0) {}
  bool inf_;
  std::int64_t v_;
};

// Congruence on (N,+): either the trivial relation, or
// (m, m+d)# = { (i,j) : i = j, or i,j >= m and i == j (mod d) }.
// Cyclic(0,1) is the universal congruence.
class NatCong {
public:
  static NatCong trivial() { return NatCong(); }
  static NatCong cyclic(std::int64_t min, std::int64_t per);
  static NatCong universal() { return cyclic(0, 1); }

  bool is_trivial() const { return trivial_; }
  bool is_universal() const { return !trivial_ && min_ == 0 && per_ == 1; }

  // Infinity for the trivial congruence.
  ExtNat min() const {
    return trivial_ ? ExtNat::infinity() : ExtNat::finite(min_);
  }
  ExtNat per() const {
    return trivial_ ? ExtNat::infinity() : ExtNat::finite(per_);
  }

  bool contains(std::int64_t i, std::int64_t j) const;

  // Set inclusion: *this a subset of other.
  bool leq(const NatCong& other) const;

  bool operator==(const NatCong& o) const {
    if (trivial_ != o.trivial_) return false;
    return trivial_ || (min_ == o.min_ && per_ == o.per_);
  }
  bool operator!=(const NatCong& o) const { return !(*this == o); }

private:
  NatCong() : trivial_(true), min_(0), per_(0) {}
  bool trivial_;
  std::int64_t min_;
  std::int64_t per_;
};

}  // namespace ptw
