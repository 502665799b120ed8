// Exact scalars: arbitrary-precision rationals and the quadratic field Q(z),
// where z is a primitive cube root of unity (z^2 = -1 - z). Every coefficient
// used anywhere in the library lives in this field; there is no floating
// point in the core.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct WrongFamily : Error { using Error::Error; };
struct UnknownArrow : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct IllFormedPath : Error { using Error::Error; };
struct DimensionCapExceeded : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct NotACut : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };
struct NotSelfinjectiveBasic : Error { using Error::Error; };
struct BadCutSpec : Error { using Error::Error; };

// mpq_class is kept canonical (reduced, positive denominator) by GMP for all
// arithmetic; only string construction needs an explicit canonicalize().
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q" or "p". Decimal notation is rejected by GMP.
inline Rational rat_parse(const std::string& s) {
  Rational r;
  try {
    r = Rational(s);
  } catch (const std::invalid_argument&) {
    throw InvalidParameter("bad rational literal: " + s);
  }
  if (r.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

// a + b*z with z^2 = -1 - z. Canonical form is the coordinate pair itself,
// so equality is structural.
struct Cyc3 {
  Rational a, b;

  Cyc3() : a(0), b(0) {}
  Cyc3(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
  explicit Cyc3(Rational ra) : a(std::move(ra)), b(0) {}
  explicit Cyc3(long n) : a(n), b(0) {}

  static Cyc3 zero() { return Cyc3(); }
  static Cyc3 one() { return Cyc3(1); }
  static Cyc3 zeta() { return Cyc3(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

  friend bool operator==(const Cyc3& x, const Cyc3& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Cyc3& x, const Cyc3& y) { return !(x == y); }

  friend Cyc3 operator+(const Cyc3& x, const Cyc3& y) { return Cyc3(x.a + y.a, x.b + y.b); }
  friend Cyc3 operator-(const Cyc3& x, const Cyc3& y) { return Cyc3(x.a - y.a, x.b - y.b); }
  friend Cyc3 operator-(const Cyc3& x) { return Cyc3(-x.a, -x.b); }

  friend Cyc3 operator*(const Cyc3& x, const Cyc3& y) {
    // (a1 + b1 z)(a2 + b2 z), reducing z^2 = -1 - z.
    Rational bb = x.b * y.b;
    return Cyc3(x.a * y.a - bb, x.a * y.b + x.b * y.a - bb);
  }

  Cyc3& operator+=(const Cyc3& y) { a += y.a; b += y.b; return *this; }
  Cyc3& operator-=(const Cyc3& y) { a -= y.a; b -= y.b; return *this; }
  Cyc3& operator*=(const Cyc3& y) { *this = *this * y; return *this; }

  // N(a + bz) = a^2 - ab + b^2, zero only at zero.
  Rational norm() const { return a * a - a * b + b * b; }
};

inline Cyc3 cyc3_mul(const Cyc3& x, const Cyc3& y) { return x * y; }

// Conjugate over norm; the conjugate of a + bz is (a - b) - bz.
inline Cyc3 cyc3_inv(const Cyc3& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero in Q(z)");
  Rational n = x.norm();
  return Cyc3((x.a - x.b) / n, -x.b / n);
}

inline Cyc3 operator/(const Cyc3& x, const Cyc3& y) { return x * cyc3_inv(y); }

// z^k with k taken mod 3: 1, z, -1-z.
inline Cyc3 zeta_pow(long k) {
  long m = ((k % 3) + 3) % 3;
  switch (m) {
    case 0: return Cyc3::one();
    case 1: return Cyc3::zeta();
    default: return Cyc3(Rational(-1), Rational(-1));
  }
}

// Compact display, e.g. "1", "-1/3", "z", "1-z", "2+3z".
inline std::string cyc3_str(const Cyc3& x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (sgn(x.a) != 0) out += rat_str(x.a);
  if (sgn(x.b) != 0) {
    if (!out.empty() && sgn(x.b) > 0) out += "+";
    if (x.b == -1)
      out += "-";
    else if (x.b != 1)
      out += rat_str(x.b) + "*";
    out += "z";
  }
  return out;
}

}  // namespace qpforge
