#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "orbifold/rational.hpp"

namespace orbifold {

// Integer square root; returns m with m*m == n, or 0 when n is not a perfect
// square (n >= 1 in every use here).
constexpr std::int64_t exact_sqrt(std::int64_t n) {
  if (n < 0) return 0;
  std::int64_t m = 0;
  while ((m + 1) * (m + 1) <= n) ++m;
  return m * m == n ? m : 0;
}

// Element of Q[sqrt(radicand)]: value a + b*sqrt(radicand), with a, b exact
// rationals. When radicand is a perfect square m^2 the irrational part folds
// into the rational part (b becomes 0, a gains b*m), so equality is canonical.
// All quantum dimensions of the orbifold ring live in this ring with
// radicand = 2k. Floating point is never used.
struct QDim {
  Rational a;
  Rational b;
  std::int64_t radicand = 1;

  QDim() = default;
  QDim(Rational ra, Rational rb, std::int64_t n) : a(ra), b(rb), radicand(n) {
    assert(n >= 1);
    fold();
  }
  static QDim rational_value(Rational r, std::int64_t n) { return QDim(r, Rational(0), n); }

  void fold() {
    const std::int64_t m = exact_sqrt(radicand);
    if (m != 0 && !b.is_zero()) {
      a = a + b * Rational(m);
      b = Rational(0);
    }
  }

  bool is_rational() const { return b.is_zero(); }

  friend QDim operator+(const QDim& x, const QDim& y) {
    assert(x.radicand == y.radicand);
    return QDim(x.a + y.a, x.b + y.b, x.radicand);
  }
  friend QDim operator-(const QDim& x, const QDim& y) {
    assert(x.radicand == y.radicand);
    return QDim(x.a - y.a, x.b - y.b, x.radicand);
  }
  // (a + b sqrt(N)) (c + d sqrt(N)) = (ac + N bd) + (ad + bc) sqrt(N)
  friend QDim operator*(const QDim& x, const QDim& y) {
    assert(x.radicand == y.radicand);
    return QDim(x.a * y.a + Rational(x.radicand) * x.b * y.b, x.a * y.b + x.b * y.a, x.radicand);
  }
  QDim& operator+=(const QDim& o) { return *this = *this + o; }

  friend bool operator==(const QDim& x, const QDim& y) {
    return x.radicand == y.radicand && x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QDim& x, const QDim& y) { return !(x == y); }

  // Exact comparison with a rational threshold. sqrt(radicand) is irrational
  // here whenever b != 0 (fold() removed the square case), so the sign of
  // (a - r) + b*sqrt(N) is decided by exact squaring.
  bool less_than(const Rational& r) const {
    const Rational d = a - r;
    if (b.is_zero()) return d < Rational(0);
    if (b > Rational(0)) {
      if (d >= Rational(0)) return false;
      // need b*sqrt(N) < -d, both sides positive
      return b * b * Rational(radicand) < d * d;
    }
    if (d <= Rational(0)) return true;
    return d * d < b * b * Rational(radicand);
  }
  bool at_least(const Rational& r) const { return !less_than(r); }

  std::string to_string() const {
    if (b.is_zero()) return a.to_string();
    std::string root = "sqrt(" + std::to_string(radicand) + ")";
    std::string irr = (b == Rational(1)) ? root : b.to_string() + "*" + root;
    if (a.is_zero()) return irr;
    return a.to_string() + "+" + irr;
  }
};

}  // namespace orbifold
