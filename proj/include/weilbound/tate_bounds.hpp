#pragma once

#include <vector>

#include "weilbound/factor.hpp"
#include "weilbound/poly.hpp"

namespace weilbound {

/// P = prod P_i^e_i split into coprime primary blocks, with cofactors
/// K_i = prod_{j != i} P_j^e_j and Bezout multipliers g_i such that
/// sum g_i K_i = 1 and deg g_i < deg P_i^e_i.
struct ComponentDecomposition {
  IntPoly poly;
  std::vector<FactorPower> components;
  std::vector<IntPoly> cofactors;
  std::vector<RatPoly> bezout;

  std::size_t size() const { return components.size(); }
  IntPoly block(std::size_t i) const {
    return power(components[i].factor, static_cast<unsigned>(components[i].exponent));
  }
};

/// Builds cofactors and Bezout multipliers for the given block order and
/// asserts the Bezout identity. Factors must be monic, irreducible and distinct.
ComponentDecomposition decomposition_from(std::vector<FactorPower> components);

/// Factorization of a monic P grouped into its primary blocks.
ComponentDecomposition decompose(const IntPoly& P);

struct PrimeExponents {
  unsigned long l = 0;
  int s1 = 0;
  int s2 = 0;
  int e() const { return s1 + s2; }
  friend bool operator==(const PrimeExponents&, const PrimeExponents&) = default;
};

struct BoundsReport {
  Integer N0;     // largest prime dividing a Bezout denominator, 1 if none
  Integer discQ;  // disc(radical(P))
  Integer N1;     // |discQ|
  Integer D;      // discQ^2
  Integer N;      // max(N0, N1, D)
  unsigned long prime_cutoff = 0;
  std::vector<PrimeExponents> per_prime;  // primes l <= min(N, prime_cutoff)
};

/// The report without its per-prime table.
BoundsReport compute_D_and_N(const IntPoly& P, const ComponentDecomposition& decomp);

/// Smallest s with l^s g_i l-integral for every i.
int s1(unsigned long l, const ComponentDecomposition& decomp);

/// max_i v_l(disc P_i) + v_l(Dt) with Dt = (prod_i |disc P_i|)^(2E), E = sum e_i.
int s2(unsigned long l, const ComponentDecomposition& decomp);

BoundsReport bounds_report(const IntPoly& P, unsigned long prime_cutoff);

}  // namespace weilbound
