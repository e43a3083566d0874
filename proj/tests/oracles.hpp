#pragma once

// Independent reference implementations used only by the tests. None of them
// call into the library's algorithms beyond the basic data types.

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "weilbound/poly.hpp"

namespace oracle {

using weilbound::Integer;
using weilbound::IntPoly;
using weilbound::Rational;

/// det of the (m+n)x(m+n) Sylvester matrix, by rational Gaussian elimination.
inline Integer sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  if (m < 0 || n < 0) return 0;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size), 0));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) a[r][r + i] = f.coeff(static_cast<std::size_t>(m - i));
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) a[n + r][r + i] = g.coeff(static_cast<std::size_t>(n - i));
  }
  Rational det = 1;
  for (int c = 0; c < size; ++c) {
    int p = c;
    while (p < size && a[p][c] == 0) ++p;
    if (p == size) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < size; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f_rc = a[r][c] / a[c][c];
      for (int j = c; j < size; ++j) a[r][j] -= f_rc * a[c][j];
    }
  }
  return det.get_num();
}

inline double to_double(const Integer& v) { return v.get_d(); }

/// Roots of a monic polynomial as eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> double_roots(const IntPoly& f) {
  const int n = f.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -to_double(f.coeff(static_cast<std::size_t>(i)));
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

using HpReal = boost::multiprecision::cpp_bin_float_100;
using HpComplex = boost::multiprecision::cpp_complex_100;

/// Aberth-Ehrlich iteration in 100-digit arithmetic.
inline std::vector<HpComplex> high_precision_roots(const IntPoly& f) {
  const int n = f.degree();
  std::vector<HpComplex> coeff;
  for (const auto& c : f.coeffs()) coeff.emplace_back(HpReal(c.get_str()));
  HpReal radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, HpReal(abs(coeff[i].real())));
  radius = 1 + radius;  // Cauchy bound
  std::vector<HpComplex> z;
  for (int k = 0; k < n; ++k) {
    const HpReal angle = HpReal(2) * boost::math::constants::pi<HpReal>() * k / n + HpReal("0.4");
    z.emplace_back(radius / 2 * cos(angle), radius / 2 * sin(angle));
  }
  auto eval = [&](const HpComplex& x, HpComplex& value, HpComplex& deriv) {
    value = coeff[static_cast<std::size_t>(n)];
    deriv = 0;
    for (int i = n - 1; i >= 0; --i) {
      deriv = deriv * x + value;
      value = value * x + coeff[static_cast<std::size_t>(i)];
    }
  };
  const HpReal eps("1e-90");
  for (int iter = 0; iter < 2000; ++iter) {
    HpReal largest = 0;
    for (int k = 0; k < n; ++k) {
      HpComplex value, deriv;
      eval(z[k], value, deriv);
      if (abs(value) == 0) continue;
      const HpComplex ratio = value / deriv;
      HpComplex sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += HpComplex(1) / (z[k] - z[j]);
      }
      const HpComplex step = ratio / (HpComplex(1) - ratio * sum);
      z[k] -= step;
      largest = std::max(largest, HpReal(abs(step)));
    }
    if (largest < eps) break;
  }
  return z;
}

struct ModulusVerdict {
  bool weil = false;
  bool adjudicated = false;  // decided by the high-precision pass
};

inline constexpr double kDoubleTolerance = 1e-6;
inline constexpr double kAmbiguousBand = 1e-2;
inline constexpr double kHighPrecisionTolerance = 1e-12;

/// Root-modulus test for a monic degree-2g polynomial. Deviations below 1e-6
/// accept, above 1e-2 reject; the band in between (clustered or repeated
/// roots) is re-run in 100 digits against 1e-12.
inline ModulusVerdict root_modulus_oracle(const IntPoly& f, const Integer& q) {
  const int n = f.degree();
  Integer qg;
  mpz_pow_ui(qg.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n / 2));
  if (abs(f.coeff(0)) != qg) return {false, false};
  const double target = std::sqrt(q.get_d());
  double dev = 0;
  for (const auto& r : double_roots(f)) dev = std::max(dev, std::abs(std::abs(r) - target));
  if (dev < kDoubleTolerance) return {true, false};
  if (dev >= kAmbiguousBand) return {false, false};
  const HpReal hp_target = sqrt(HpReal(q.get_str()));
  HpReal hp_dev = 0;
  for (const auto& r : high_precision_roots(f)) hp_dev = std::max(hp_dev, HpReal(abs(HpReal(abs(r)) - hp_target)));
  return {hp_dev < HpReal(kHighPrecisionTolerance), true};
}

inline Integer box_bound(int g, int s, const Integer& q) {
  // floor(C(2g,s) * q^(s/2)) = floor(sqrt(C(2g,s)^2 q^s))
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * g), static_cast<unsigned long>(s));
  Integer qs;
  mpz_pow_ui(qs.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(s));
  Integer sq = b * b * qs;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
  return r;
}

/// Visits every monic degree-2g polynomial in the coefficient box
/// |a_s| <= box_bound(g, s, q), with a_s the coefficient of x^(2g-s), in
/// lexicographic order of (a_1, ..., a_2g).
template <class Visitor>
void for_each_in_box(int g, const Integer& q, Visitor&& visit) {
  const int n = 2 * g;
  std::vector<Integer> bound(static_cast<std::size_t>(n + 1));
  for (int s = 1; s <= n; ++s) bound[s] = box_bound(g, s, q);
  std::vector<Integer> a(static_cast<std::size_t>(n + 1));
  for (int s = 1; s <= n; ++s) a[s] = -bound[s];
  while (true) {
    std::vector<Integer> c(static_cast<std::size_t>(n + 1));
    for (int s = 0; s <= n; ++s) c[static_cast<std::size_t>(n - s)] = s == 0 ? Integer(1) : a[s];
    visit(IntPoly(std::move(c)));
    int s = n;
    for (; s >= 1; --s) {
      if (++a[s] <= bound[s]) break;
      a[s] = -bound[s];
    }
    if (s == 0) break;
  }
}

/// Full coefficient box scan filtered by the root-modulus oracle, in box order.
inline std::vector<IntPoly> brute_force_census(int g, const Integer& q, int* adjudications = nullptr) {
  std::vector<IntPoly> out;
  for_each_in_box(g, q, [&](const IntPoly& f) {
    const ModulusVerdict v = root_modulus_oracle(f, q);
    if (v.adjudicated && adjudications != nullptr) ++*adjudications;
    if (v.weil) out.push_back(f);
  });
  return out;
}

/// Stable subgroups of (Z/l^k)^n under the integer matrix c, found by
/// closing every n-tuple of elements. Each subgroup is its sorted element list.
inline std::set<std::vector<std::vector<long>>> stable_subgroups(const std::vector<std::vector<long>>& c, long l, int k) {
  const std::size_t n = c.size();
  long mod = 1;
  for (int i = 0; i < k; ++i) mod *= l;
  long total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= mod;
  auto decode = [&](long code) {
    std::vector<long> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = code % mod;
      code /= mod;
    }
    return v;
  };
  auto encode = [&](const std::vector<long>& v) {
    long code = 0;
    for (std::size_t i = n; i-- > 0;) code = code * mod + ((v[i] % mod) + mod) % mod;
    return code;
  };
  std::set<std::vector<std::vector<long>>> out;
  std::vector<long> gens(n, 0);
  while (true) {
    std::vector<char> in(static_cast<std::size_t>(total), 0);
    std::vector<long> members{0};
    in[0] = 1;
    for (long gcode : gens) {
      // add the cyclic group of each generator, then close under sums
      const std::vector<long> gv = decode(gcode);
      std::vector<long> current = members;
      for (long m : current) {
        std::vector<long> acc = decode(m);
        for (long t = 0; t < mod; ++t) {
          const long code = encode(acc);
          if (!in[code]) {
            in[code] = 1;
            members.push_back(code);
          }
          for (std::size_t i = 0; i < n; ++i) acc[i] += gv[i];
        }
      }
    }
    bool stable = true;
    for (long m : members) {
      const std::vector<long> v = decode(m);
      std::vector<long> w(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i] += c[i][j] * v[j];
      }
      if (!in[encode(w)]) {
        stable = false;
        break;
      }
    }
    if (stable) {
      std::vector<std::vector<long>> elems;
      for (long m : members) elems.push_back(decode(m));
      std::sort(elems.begin(), elems.end());
      out.insert(std::move(elems));
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++gens[i] < total) break;
      gens[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

/// Random monic irreducible polynomials of degree 1..4 whose irreducibility is
/// certified by an elementary criterion: linear; quadratic with non-square
/// discriminant; cubic without integer roots; Eisenstein quartic.
class IrreducibleSource {
 public:
  explicit IrreducibleSource(std::uint64_t seed) : rng_(seed) {}

  IntPoly next(int degree) {
    std::uniform_int_distribution<long> small(-6, 6);
    switch (degree) {
      case 1:
        return IntPoly{Integer(small(rng_)), Integer(1)};
      case 2:
        while (true) {
          const long b = small(rng_), c = small(rng_);
          const long d = b * b - 4 * c;
          if (d < 0 || !is_square(d)) return IntPoly{Integer(c), Integer(b), Integer(1)};
        }
      case 3:
        while (true) {
          IntPoly f{Integer(small(rng_)), Integer(small(rng_)), Integer(small(rng_)), Integer(1)};
          if (f.coeff(0) != 0 && !has_integer_root(f)) return f;
        }
      default: {
        const long p = std::uniform_int_distribution<int>(0, 1)(rng_) ? 2 : 3;
        std::uniform_int_distribution<long> mult(-2, 2);
        long c0 = p * mult(rng_);
        while (c0 % (p * p) == 0) c0 = p * mult(rng_);
        return IntPoly{Integer(c0), Integer(p * mult(rng_)), Integer(p * mult(rng_)), Integer(p * mult(rng_)), Integer(1)};
      }
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  static bool is_square(long d) {
    const long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(d))));
    for (long t = std::max(0L, r - 1); t <= r + 1; ++t) {
      if (t * t == d) return true;
    }
    return false;
  }
  static bool has_integer_root(const IntPoly& f) {
    const long c0 = std::labs(f.coeff(0).get_si());
    for (long d = 1; d <= c0; ++d) {
      if (c0 % d != 0) continue;
      if (weilbound::evaluate(f, Integer(d)) == 0 || weilbound::evaluate(f, Integer(-d)) == 0) return true;
    }
    return false;
  }

  std::mt19937_64 rng_;
};

}  // namespace oracle
