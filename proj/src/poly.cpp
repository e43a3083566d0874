#include "weilbound/poly.hpp"

namespace weilbound {

bool descending_lex_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto idx = static_cast<std::size_t>(i);
    if (a.coeffs()[idx] != b.coeffs()[idx]) return a.coeffs()[idx] < b.coeffs()[idx];
  }
  return false;
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.lead() < 0) c = -c;
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    out.push_back(q);
  }
  return IntPoly(std::move(out));
}

Integer denominator_lcm(const RatPoly& p) {
  Integer l = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

IntPoly primitive_part(const RatPoly& p) {
  const Integer den = denominator_lcm(p);
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) out.push_back(v.get_num() * (den / v.get_den()));
  return primitive_part(IntPoly(std::move(out)));
}

RatDivision divrem(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = f.coeffs();
  const int dg = g.degree();
  const int df = f.degree();
  if (df < dg) return {RatPoly(), f};
  std::vector<Rational> q(static_cast<std::size_t>(df - dg + 1));
  const Rational& lg = g.lead();
  for (int i = df; i >= dg; --i) {
    const auto top = static_cast<std::size_t>(i);
    if (r[top] == 0) continue;
    const Rational t = r[top] / lg;
    q[static_cast<std::size_t>(i - dg)] = t;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= t * g.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(dg));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatDivision divrem(const IntPoly& f, const IntPoly& g) { return divrem(to_rational(f), to_rational(g)); }

std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.is_zero()) return IntPoly();
  const int dg = g.degree();
  const int df = f.degree();
  if (df < dg) return std::nullopt;
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(df - dg + 1));
  const Integer& lg = g.lead();
  for (int i = df; i >= dg; --i) {
    const auto top = static_cast<std::size_t>(i);
    if (r[top] == 0) continue;
    if (!mpz_divisible_p(r[top].get_mpz_t(), lg.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), r[top].get_mpz_t(), lg.get_mpz_t());
    q[static_cast<std::size_t>(i - dg)] = t;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= t * g.coeffs()[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < dg; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

namespace {

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.lead());
}

}  // namespace

ExtendedGcd extended_gcd(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("extended gcd of two zero polynomials");
  // Invariant: r0 = s0*f + t0*g, r1 = s1*f + t1*g.
  RatPoly r0 = f, r1 = g;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rational scale = 1 / r0.lead();
  return {r0 * scale, s0 * scale, t0 * scale};
}

RatPoly gcd(const RatPoly& f, const RatPoly& g) {
  RatPoly a = f, b = g;
  while (!b.is_zero()) {
    RatPoly r = divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) return {};
  return primitive_part(gcd(to_rational(f), to_rational(g)));
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  const int dg = g.degree();
  if (f.degree() < dg) return f;
  std::vector<Integer> r = f.coeffs();
  const Integer& lg = g.lead();
  int steps = f.degree() - dg + 1;
  for (int i = f.degree(); i >= dg; --i) {
    const Integer t = r[static_cast<std::size_t>(i)];
    for (auto& v : r) v *= lg;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= t * g.coeffs()[static_cast<std::size_t>(j)];
    --steps;
  }
  WEILBOUND_CHECK(steps == 0, "pseudo-remainder step count");
  r.resize(static_cast<std::size_t>(dg));
  return IntPoly(std::move(r));
}

namespace {

IntPoly divide_exact(const IntPoly& p, const Integer& d) {
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    WEILBOUND_CHECK(mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()), "inexact division in subresultant chain");
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    out.push_back(q);
  }
  return IntPoly(std::move(out));
}

Integer divexact(const Integer& a, const Integer& b) {
  WEILBOUND_CHECK(mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()), "inexact division in subresultant chain");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  if (g.degree() == 0) return ipow(g.lead(), static_cast<unsigned long>(f.degree()));
  if (f.degree() == 0) return ipow(f.lead(), static_cast<unsigned long>(g.degree()));

  // Collins/Brown subresultant chain on the primitive parts.
  const Integer a = content(f);
  const Integer b = content(g);
  IntPoly A = divide_exact(f, a);
  IntPoly B = divide_exact(g, b);
  const Integer t = ipow(a, static_cast<unsigned long>(g.degree())) * ipow(b, static_cast<unsigned long>(f.degree()));
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -1;
  }
  Integer gl = 1, h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    B = divide_exact(R, gl * ipow(h, static_cast<unsigned long>(delta)));
    gl = A.lead();
    if (delta == 0) {
      // h unchanged
    } else {
      h = divexact(ipow(gl, static_cast<unsigned long>(delta)), ipow(h, static_cast<unsigned long>(delta - 1)));
    }
    if (B.degree() == 0) break;
  }
  const int da = A.degree();
  const Integer tail = divexact(ipow(B.lead(), static_cast<unsigned long>(da)), ipow(h, static_cast<unsigned long>(da - 1)));
  return s * t * tail;
}

Integer discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant of a constant polynomial");
  const int n = f.degree();
  if (n == 1) return 1;
  Integer res = resultant(f, derivative(f));
  res = divexact(res, f.lead());
  return ((n * (n - 1) / 2) % 2 == 0) ? res : Integer(-res);
}

IntPoly radical(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("radical of the zero polynomial");
  if (f.degree() == 0) return IntPoly::constant(1);
  const RatPoly rf = to_rational(f);
  const RatPoly g = gcd(rf, derivative(rf));
  return primitive_part(divrem(rf, g).quotient);
}

}  // namespace weilbound
