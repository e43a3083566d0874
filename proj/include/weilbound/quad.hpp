#pragma once

#include "weilbound/integer.hpp"

namespace weilbound {

/// a + b*sqrt(d) with rational a, b and a fixed non-negative radicand d.
/// A perfect-square radicand is folded into `a` on construction, so `b` is
/// always zero when sqrt(d) is rational.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadNum(const Rational& a, const Rational& b, const Integer& d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const Integer& radicand() const { return d_; }

  friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x);
  friend bool operator==(const QuadNum& x, const QuadNum& y);

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  Integer d_ = 0;
};

/// Exact sign of a + b*sqrt(d): -1, 0 or +1.
int quad_sign(const QuadNum& v);

}  // namespace weilbound
