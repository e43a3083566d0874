#include "weilbound/tate_bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace weilbound {

ComponentDecomposition decomposition_from(std::vector<FactorPower> components) {
  if (components.empty()) throw std::invalid_argument("empty component list");
  ComponentDecomposition out;
  out.components = std::move(components);
  out.poly = expand(out.components);

  const std::size_t s = out.size();
  std::vector<IntPoly> blocks;
  for (std::size_t i = 0; i < s; ++i) {
    if (!out.components[i].factor.is_monic() || out.components[i].exponent < 1) {
      throw std::invalid_argument("components must be monic with positive exponents");
    }
    blocks.push_back(out.block(i));
  }
  for (std::size_t i = 0; i < s; ++i) {
    IntPoly k = IntPoly::constant(1);
    for (std::size_t j = 0; j < s; ++j) {
      if (j != i) k = k * blocks[j];
    }
    out.cofactors.push_back(std::move(k));
  }

  // g_i = K_i^{-1} mod P_i^{e_i}; then sum g_i K_i - 1 vanishes modulo every
  // block and has degree < deg P, so it is zero.
  for (std::size_t i = 0; i < s; ++i) {
    if (s == 1) {
      out.bezout.push_back(RatPoly::constant(1));
      continue;
    }
    const RatPoly block = to_rational(blocks[i]);
    const RatPoly k = divrem(to_rational(out.cofactors[i]), block).remainder;
    const ExtendedGcd eg = extended_gcd(k, block);
    if (eg.gcd != RatPoly::constant(1)) throw std::invalid_argument("components are not pairwise coprime");
    out.bezout.push_back(eg.u);
  }

  RatPoly sum;
  for (std::size_t i = 0; i < s; ++i) sum += out.bezout[i] * to_rational(out.cofactors[i]);
  WEILBOUND_CHECK(sum == RatPoly::constant(1), "Bezout identity sum g_i K_i = 1 failed");
  return out;
}

ComponentDecomposition decompose(const IntPoly& P) {
  if (P.degree() < 1 || !P.is_monic()) throw std::invalid_argument("decompose needs a monic polynomial of degree >= 1");
  ComponentDecomposition out = decomposition_from(factor_int_poly(P));
  WEILBOUND_CHECK(out.poly == P, "component blocks do not multiply back to P");
  return out;
}

namespace {

Integer bezout_denominator(const ComponentDecomposition& decomp) {
  Integer l = 1;
  for (const auto& g : decomp.bezout) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator_lcm(g).get_mpz_t());
  return l;
}

Integer max_of(const Integer& a, const Integer& b) { return a < b ? b : a; }

}  // namespace

BoundsReport compute_D_and_N(const IntPoly& P, const ComponentDecomposition& decomp) {
  WEILBOUND_CHECK(decomp.poly == P, "decomposition does not belong to P");
  BoundsReport r;
  const Integer den = bezout_denominator(decomp);
  r.N0 = den == 1 ? Integer(1) : prime_factors(den).back();
  r.discQ = discriminant(radical(P));
  r.N1 = abs(r.discQ);
  r.D = r.discQ * r.discQ;
  r.N = max_of(r.N0, max_of(r.N1, r.D));
  return r;
}

int s1(unsigned long l, const ComponentDecomposition& decomp) {
  if (!is_prime(l)) throw std::invalid_argument("s1 needs a prime l");
  int out = 0;
  for (const auto& g : decomp.bezout) {
    for (const auto& c : g.coeffs()) out = std::max(out, valuation(c.get_den(), l));
  }
  return out;
}

int s2(unsigned long l, const ComponentDecomposition& decomp) {
  if (!is_prime(l)) throw std::invalid_argument("s2 needs a prime l");
  int block_max = 0;
  int block_sum = 0;
  int total_exponent = 0;
  for (const auto& c : decomp.components) {
    const int v = valuation(discriminant(c.factor), l);
    block_max = std::max(block_max, v);
    block_sum += v;
    total_exponent += c.exponent;
  }
  return block_max + 2 * total_exponent * block_sum;
}

BoundsReport bounds_report(const IntPoly& P, unsigned long prime_cutoff) {
  const ComponentDecomposition decomp = decompose(P);
  BoundsReport r = compute_D_and_N(P, decomp);
  r.prime_cutoff = prime_cutoff;
  const unsigned long limit = r.N < prime_cutoff ? r.N.get_ui() : prime_cutoff;
  for (unsigned long l : primes_up_to(limit)) r.per_prime.push_back({l, s1(l, decomp), s2(l, decomp)});
  return r;
}

}  // namespace weilbound
