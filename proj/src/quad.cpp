#include "weilbound/quad.hpp"

#include <stdexcept>

namespace weilbound {

QuadNum::QuadNum(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw std::invalid_argument("negative radicand");
  if (is_perfect_square(d)) {
    a_ += b_ * Rational(isqrt(d));
    b_ = 0;
    d_ = 0;
  }
  if (b_ == 0) d_ = 0;
}

namespace {

// Radicand shared by two operands; operands with b == 0 carry none.
Integer common_radicand(const QuadNum& x, const QuadNum& y) {
  if (x.radical_part() == 0) return y.radicand();
  if (y.radical_part() == 0) return x.radicand();
  if (x.radicand() != y.radicand()) throw std::invalid_argument("mixing different quadratic fields");
  return x.radicand();
}

}  // namespace

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y)};
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y)};
}

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  const Integer d = common_radicand(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadNum operator-(const QuadNum& x) { return {-x.a_, -x.b_, x.d_}; }

bool operator==(const QuadNum& x, const QuadNum& y) { return quad_sign(x - y) == 0; }

int quad_sign(const QuadNum& v) {
  const int sa = sgn(v.rational_part());
  const int sb = v.radicand() == 0 ? 0 : sgn(v.radical_part());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with d*b^2.
  const Rational lhs = v.rational_part() * v.rational_part();
  const Rational rhs = Rational(v.radicand()) * v.radical_part() * v.radical_part();
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

}  // namespace weilbound
