#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weilbound/integer.hpp"

namespace weilbound {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The zero polynomial has no coefficients and degree -1; trailing zeros are
/// never stored.
template <class Scalar>
class Poly {
 public:
  using scalar_type = Scalar;

  Poly() = default;
  Poly(std::initializer_list<Scalar> ascending) : c_(ascending) { trim(); }
  explicit Poly(std::vector<Scalar> ascending) : c_(std::move(ascending)) { trim(); }

  static Poly constant(const Scalar& v) { return Poly(std::vector<Scalar>{v}); }
  static Poly monomial(const Scalar& v, std::size_t power) {
    std::vector<Scalar> c(power + 1, Scalar(0));
    c[power] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Coefficient of x^i; zero past the degree.
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      const Scalar& v = p.c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      const Scalar mag = v < 0 ? Scalar(-v) : v;
      if (mag != 1 || i == 0) os << mag;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

template <class Scalar, class T>
T evaluate(const Poly<Scalar>& p, const T& at) {
  T acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * at + T(p.coeffs()[static_cast<std::size_t>(i)]);
  return acc;
}

template <class Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * Scalar(static_cast<long>(i));
  return Poly<Scalar>(std::move(out));
}

template <class Scalar>
Poly<Scalar> power(Poly<Scalar> base, unsigned exponent) {
  Poly<Scalar> acc = Poly<Scalar>::constant(Scalar(1));
  while (exponent != 0) {
    if (exponent & 1U) acc = acc * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return acc;
}

/// Lexicographic order on the coefficient vector, highest degree first; only
/// meaningful between polynomials of equal degree, used for stable output.
bool descending_lex_less(const IntPoly& a, const IntPoly& b);

RatPoly to_rational(const IntPoly& p);

/// gcd of the coefficients, non-negative; 0 for the zero polynomial.
Integer content(const IntPoly& p);

/// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Scale a rational polynomial to a primitive integer one with positive
/// leading coefficient.
IntPoly primitive_part(const RatPoly& p);

/// Common denominator of the coefficients (lcm, positive).
Integer denominator_lcm(const RatPoly& p);

struct RatDivision {
  RatPoly quotient;
  RatPoly remainder;
};

/// Division over the rationals: f = q*g + r, deg r < deg g.
RatDivision divrem(const RatPoly& f, const RatPoly& g);
RatDivision divrem(const IntPoly& f, const IntPoly& g);

/// Exact quotient f/g over the integers when g divides f in Z[x].
std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g);

struct ExtendedGcd {
  RatPoly gcd;  // monic
  RatPoly u;
  RatPoly v;    // u*f + v*g == gcd
};

ExtendedGcd extended_gcd(const RatPoly& f, const RatPoly& g);

/// Monic gcd over the rationals.
RatPoly gcd(const RatPoly& f, const RatPoly& g);

/// Primitive gcd over the integers, positive leading coefficient.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

/// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f,
/// which agrees with the Sylvester determinant. Subresultant PRS.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Linear polynomials have discriminant 1.
Integer discriminant(const IntPoly& f);

/// Squarefree part f / gcd(f, f'), primitive, positive leading coefficient.
IntPoly radical(const IntPoly& f);

}  // namespace weilbound
