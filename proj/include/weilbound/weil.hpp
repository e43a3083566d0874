#pragma once

#include <vector>

#include "weilbound/poly.hpp"
#include "weilbound/quad.hpp"

namespace weilbound {

/// Field size q = p^m and abelian-variety dimension g.
struct WeilParams {
  unsigned long p = 0;
  unsigned m = 0;
  Integer q;
  int g = 0;

  /// Validates p prime (trial division), m >= 1, g >= 1.
  static WeilParams make(unsigned long p, unsigned m, int g);
  /// Recovers (p, m) from q; throws std::invalid_argument if q is not a prime power.
  static WeilParams from_q(const Integer& q, int g);

  bool q_is_square() const { return is_perfect_square(q); }
};

inline constexpr int kMaxDimension = 6;

/// Exponents of the real-root factors stripped from a polynomial.
/// For non-square q only (x^2 - q)^pair_power occurs; for square q = r^2 the
/// factor x^2 - q splits and is recorded as (x - r)^plus_root (x + r)^minus_root.
struct StripRecord {
  int pair_power = 0;
  int plus_root = 0;
  int minus_root = 0;

  int degree() const { return 2 * pair_power + plus_root + minus_root; }
  friend bool operator==(const StripRecord&, const StripRecord&) = default;
};

struct StripResult {
  IntPoly remainder;
  StripRecord record;
};

/// The real-root part described by `record`.
IntPoly real_factor(const StripRecord& record, const WeilParams& params);

StripResult strip_real_factors(const IntPoly& f, const WeilParams& params);

/// True iff f has even degree 2h and its ascending coefficients satisfy
/// c_i = q^(h-i) * c_(2h-i) for all i <= h.
bool check_functional_symmetry(const IntPoly& f, const WeilParams& params);

/// The monic h with f(x) = x^h * h(x + q/x). Throws std::invalid_argument for
/// asymmetric or non-monic input.
IntPoly trace_polynomial(const IntPoly& f, const WeilParams& params);

/// Number of distinct real roots of a squarefree h in the half-open interval
/// (lo, hi]. Throws InternalError when an endpoint is a root.
int sturm_count(const IntPoly& h, const QuadNum& lo, const QuadNum& hi);

/// Number of distinct real roots of a squarefree h.
int real_root_count(const IntPoly& h);

/// True iff every complex root of the monic degree-2g polynomial f has
/// absolute value exactly sqrt(q). Throws std::invalid_argument on non-monic
/// input or the wrong degree.
bool is_weil(const IntPoly& f, const WeilParams& params);

/// A Weil polynomial together with its real-root split.
struct WeilCandidate {
  IntPoly poly;
  WeilParams params;
  StripRecord strip;
  IntPoly trace_poly;  // trace polynomial of the symmetric remainder
};

/// Sorted census with the real-root split of every member.
std::vector<WeilCandidate> enumerate_weil_candidates(const WeilParams& params);

/// All monic degree-2g integer polynomials whose roots have absolute value
/// sqrt(q), sorted by descending_lex_less and free of duplicates.
std::vector<IntPoly> enumerate_weil(const WeilParams& params);

/// Number of q-Weil polynomials of degree 2g: an upper bound for the number of
/// isogeny classes of g-dimensional abelian varieties over F_q.
std::size_t isogeny_class_upper_bound(const WeilParams& params);

/// |a_s| <= C(2g, s) q^(s/2) rounded down: the coefficient box for x^(2g-s).
Integer coefficient_bound(int g, int s, const Integer& q);

}  // namespace weilbound
