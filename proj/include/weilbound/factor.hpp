#pragma once

#include <vector>

#include "weilbound/poly.hpp"

namespace weilbound {

struct FactorPower {
  IntPoly factor;
  int exponent = 0;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Yun's algorithm for a monic f: pairs (a_i, i) with f = prod a_i^i, every
/// a_i monic squarefree and pairwise coprime. Entries with a_i = 1 are omitted.
std::vector<FactorPower> squarefree_decomposition(const IntPoly& f);

/// Smallest prime p >= 3 for which f mod p stays squarefree. f monic squarefree.
unsigned long factoring_prime(const IntPoly& f);

/// Irreducible factors of a monic squarefree f over Z (Zassenhaus: modular
/// factorization, Hensel lifting, subset recombination).
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

/// Complete factorization of a monic f of degree >= 1 into monic irreducible
/// factors with multiplicities, ordered by degree then coefficients.
/// Throws std::invalid_argument for non-monic or constant input.
std::vector<FactorPower> factor_int_poly(const IntPoly& f);

/// Product of factor^exponent.
IntPoly expand(const std::vector<FactorPower>& factors);

}  // namespace weilbound
