#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "w0sig/checked.hpp"

namespace w0sig {

/// Exact rational number with a normalized int64 numerator/denominator pair.
/// Intermediate products use 128-bit arithmetic; anything that does not fit
/// back into int64 throws OverflowError.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit like an integer literal
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// Integer value; throws LatticeError when the value is not integral.
  std::int64_t to_integer() const {
    if (den_ != 1) throw LatticeError("rational " + str() + " is not an integer");
    return num_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "a" or "a/b".
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) {
    using I = __int128;
    const I n = I(a.num_) * b.den_ + I(b.num_) * a.den_;
    const I d = I(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using I = __int128;
    return from_wide(I(a.num_) * b.num_, I(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    using I = __int128;
    if (b.num_ == 0) throw DomainError("division by zero rational");
    return from_wide(I(a.num_) * b.den_, I(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = checked_sub(0, num_);
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    using I = __int128;
    const I l = I(a.num_) * b.den_;
    const I r = I(b.num_) * a.den_;
    return l <=> r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = n < 0 ? -n : n;
    __int128 h = d;
    while (h != 0) {
      const __int128 t = g % h;
      g = h;
      h = t;
    }
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow_checked(n);
    r.den_ = narrow_checked(d);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DomainError("zero denominator");
    *this = from_wide(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace w0sig

namespace Eigen {

template <>
struct NumTraits<w0sig::Rational> : GenericNumTraits<w0sig::Rational> {
  using Real = w0sig::Rational;
  using NonInteger = w0sig::Rational;
  using Nested = w0sig::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
