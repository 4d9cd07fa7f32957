#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "tdlc/errors.hpp"

namespace tdlc {

// Exponent of a power of p, extended with +infinity (the valuation of 0).
// Every index, scale value and entropy in this library is an exact p-power
// and is carried as a PExp; the expanded integer p^e is never formed.
// Addition of exponents corresponds to multiplication of values.
class PExp {
 public:
  constexpr PExp() : value_(0), infinite_(false) {}
  constexpr explicit PExp(long long v) : value_(v), infinite_(false) {}

  static constexpr PExp infinity() {
    PExp e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }

  constexpr long long value() const {
    if (infinite_) throw error("PExp: value() of an infinite exponent");
    return value_;
  }

  friend constexpr PExp operator+(PExp a, PExp b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return PExp(a.value_ + b.value_);
  }
  friend constexpr PExp operator-(PExp a, PExp b) {
    if (a.infinite_ && !b.infinite_) return infinity();
    if (b.infinite_) throw error("PExp: cannot subtract an infinite exponent");
    return PExp(a.value_ - b.value_);
  }
  friend constexpr PExp operator*(long long k, PExp a) {
    if (a.infinite_) {
      if (k == 0) throw error("PExp: 0 * infinity is undefined");
      return infinity();
    }
    return PExp(k * a.value_);
  }
  PExp& operator+=(PExp other) { return *this = *this + other; }

  friend constexpr bool operator==(PExp a, PExp b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend constexpr bool operator<(PExp a, PExp b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(PExp a, PExp b) { return b < a; }
  friend constexpr bool operator<=(PExp a, PExp b) { return !(b < a); }
  friend constexpr bool operator>=(PExp a, PExp b) { return !(a < b); }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, PExp e) { return os << e.str(); }

 private:
  long long value_;
  bool infinite_;
};

}  // namespace tdlc
