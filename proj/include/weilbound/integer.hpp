#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilbound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an internal consistency check fails (an implementation defect,
/// never bad user input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when a requested computation exceeds the configured search limits.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WEILBOUND_CHECK(cond, msg)                                   \
  do {                                                               \
    if (!(cond)) throw ::weilbound::InternalError(std::string(msg)); \
  } while (0)

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

Integer ipow(const Integer& base, unsigned long exponent);

/// Exponent of the prime `l` in `n`; `n` must be nonzero.
int valuation(const Integer& n, unsigned long l);

Integer binomial(unsigned long n, unsigned long k);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

bool is_prime(std::uint64_t n);
std::vector<unsigned long> primes_up_to(unsigned long bound);

/// Distinct prime factors of |n|, ascending. Trial division, then Pollard rho
/// on whatever cofactor is left. n != 0.
std::vector<Integer> prime_factors(const Integer& n);

/// Decimal parse; throws std::invalid_argument on malformed text.
Integer parse_integer(const std::string& text);

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace weilbound
