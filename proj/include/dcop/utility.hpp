#pragma once

#include <cassert>
#include <cmath>
#include <limits>

namespace dcop {

// Extended-real utility value: either finite, or the absorbing minimal
// element ("forbidden") that a violated hard constraint contributes.
// Internally forbidden is -infinity, which gives exact absorbing addition
// and a total order without any sentinel arithmetic.
class Utility {
 public:
  constexpr Utility() = default;
  constexpr Utility(double v) : v_(v) { assert(!std::isnan(v) && v != inf()); }

  static constexpr Utility forbidden() { return Utility(raw_tag{}, -inf()); }

  constexpr bool is_forbidden() const { return v_ == -inf(); }
  constexpr bool is_finite() const { return !is_forbidden(); }

  // Finite numeric value; must not be called on forbidden.
  constexpr double finite() const {
    assert(is_finite());
    return v_;
  }

  // Underlying representation (-inf for forbidden). For ordering and I/O.
  constexpr double raw() const { return v_; }

  friend constexpr Utility operator+(Utility a, Utility b) {
    return Utility(raw_tag{}, a.v_ + b.v_);
  }
  Utility& operator+=(Utility b) {
    v_ += b.v_;
    return *this;
  }
  // Shift by a finite constant; forbidden stays forbidden.
  friend constexpr Utility operator-(Utility a, double c) {
    assert(std::isfinite(c));
    return Utility(raw_tag{}, a.v_ - c);
  }

  friend constexpr bool operator==(Utility a, Utility b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Utility a, Utility b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Utility a, Utility b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Utility a, Utility b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(Utility a, Utility b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(Utility a, Utility b) { return a.v_ >= b.v_; }

 private:
  struct raw_tag {};
  constexpr Utility(raw_tag, double v) : v_(v) {}
  static constexpr double inf() { return std::numeric_limits<double>::infinity(); }

  double v_ = 0.0;
};

inline Utility max(Utility a, Utility b) { return a < b ? b : a; }
inline Utility min(Utility a, Utility b) { return b < a ? b : a; }

}  // namespace dcop
