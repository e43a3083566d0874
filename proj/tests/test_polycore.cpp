#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weilbound/factor.hpp"
#include "weilbound/quad.hpp"

using namespace weilbound;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int degree, long range, bool monic) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<Integer> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(d(rng));
  long lead = monic ? 1 : d(rng);
  if (lead == 0) lead = 3;
  c.emplace_back(lead);
  return IntPoly(std::move(c));
}

IntPoly P(std::initializer_list<long> ascending) {
  std::vector<Integer> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("integer helpers") {
  CHECK(valuation(Integer(48), 2) == 4);
  CHECK(valuation(Integer(-81), 3) == 4);
  CHECK(valuation(Integer(7), 5) == 0);
  CHECK(binomial(6, 3) == 20);
  CHECK(isqrt(Integer(80)) == 8);
  CHECK(isqrt(Integer(81)) == 9);
  CHECK(is_perfect_square(Integer(0)));
  CHECK_FALSE(is_perfect_square(Integer(-4)));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(1));
  CHECK(primes_up_to(20) == std::vector<unsigned long>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(prime_factors(Integer(3136)) == std::vector<Integer>{2, 7});
  const Integer big = Integer("1000000007") * Integer("998244353");
  CHECK(prime_factors(big) == std::vector<Integer>{Integer("998244353"), Integer("1000000007")});
  CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_integer("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(make_rational(4, -6) == Rational(-2, 3));
}

TEST_CASE("poly arithmetic and normal form") {
  const IntPoly f = P({2, 1, 1});
  CHECK(f.degree() == 2);
  CHECK(P({0, 0}).is_zero());
  CHECK(IntPoly().degree() == -1);
  CHECK(f * P({2, -1, 1}) == P({4, 0, 3, 0, 1}));
  CHECK(f - f == IntPoly());
  CHECK(derivative(f) == P({1, 2}));
  CHECK(power(P({-1, 1}), 3) == P({-1, 3, -3, 1}));
  CHECK(evaluate(f, Integer(3)) == 14);
  CHECK(content(P({6, -4, 2})) == 2);
  CHECK(primitive_part(P({6, -4, -2})) == P({-3, 2, 1}));
  const auto d = divrem(P({4, 0, 3, 0, 1}), f);
  CHECK(d.quotient == to_rational(P({2, -1, 1})));
  CHECK(d.remainder.is_zero());
  CHECK(exact_quotient(P({4, 0, 3, 0, 1}), f) == P({2, -1, 1}));
  CHECK_FALSE(exact_quotient(P({1, 0, 1}), P({1, 1})).has_value());
  CHECK(descending_lex_less(P({5, -1, 1}), P({0, 0, 1})));
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(rng() % 6);
    const int n = static_cast<int>(rng() % 6);
    const IntPoly f = random_poly(rng, m, 7, trial % 3 == 0);
    const IntPoly g = random_poly(rng, n, 7, false);
    CAPTURE(f);
    CAPTURE(g);
    CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
  CHECK(resultant(P({5}), P({1, 1, 1})) == 25);
  CHECK(resultant(P({1, 0, 1}), P({3})) == 9);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P({2, 1, 1})) == -7);
  CHECK(discriminant(P({2, 0, 1})) == -8);
  CHECK(discriminant(P({-1, 1})) == 1);
  CHECK(discriminant(P({1, 0, -2, 0, 1})) == 0);
  CHECK(discriminant(P({2, -1, 0, 1})) == -104);  // -4p^3 - 27q^2
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 4), 5, true);
    const IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 4), 5, true);
    const Integer r = resultant(f, g);
    CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * r * r);
  }
}

TEST_CASE("radical and gcd") {
  const IntPoly f = P({2, 1, 1});
  const IntPoly g = P({-1, 1});
  CHECK(radical(power(f, 3) * g * g) == f * g);
  CHECK(gcd(power(f, 2) * g, f * P({3, 1})) == f);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const RatPoly a = to_rational(random_poly(rng, 1 + static_cast<int>(rng() % 5), 6, false));
    const RatPoly b = to_rational(random_poly(rng, 1 + static_cast<int>(rng() % 5), 6, false));
    const ExtendedGcd e = extended_gcd(a, b);
    CHECK(e.u * a + e.v * b == e.gcd);
    CHECK(e.gcd.is_monic());
    CHECK(divrem(a, e.gcd).remainder.is_zero());
    if (e.gcd.degree() == 0) {
      CHECK(e.u.degree() < b.degree());
      CHECK(e.v.degree() < a.degree());
    }
  }
}

TEST_CASE("quad_sign matches floating point away from zero") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int trial = 0; trial < 2000; ++trial) {
    const long a = d(rng), b = d(rng), r = std::abs(d(rng));
    const QuadNum v{Rational(a), Rational(b), Integer(r)};
    const double x = static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(r));
    if (std::abs(x) > 1e-9) CHECK(quad_sign(v) == (x > 0 ? 1 : -1));
    else CHECK(quad_sign(v) == 0);
  }
  const QuadNum s2(0, 1, 2);
  CHECK(s2 * s2 == QuadNum(2));
  CHECK(quad_sign(QuadNum(3, -2, 2)) == 1);  // 3 - 2 sqrt 2 > 0
  CHECK(QuadNum(0, 1, 4) == QuadNum(2));
  CHECK(quad_sign(QuadNum(-3, 2, 2)) == -1);
  CHECK(quad_sign(QuadNum(-2, 1, 4)) == 0);
  CHECK(quad_sign(QuadNum(1)) == 1);
}

TEST_CASE("factorization examples") {
  const auto a = factor_int_poly(P({-1, 0, 1}));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == FactorPower{P({-1, 1}), 1});
  CHECK(a[1] == FactorPower{P({1, 1}), 1});
  const auto b = factor_int_poly(P({4, 6, 6, 3, 1}));
  REQUIRE(b.size() == 2);
  CHECK(b[0].factor.degree() == 2);
  CHECK(b[1].factor.degree() == 2);
  CHECK(expand(b) == P({4, 6, 6, 3, 1}));
  CHECK(factor_int_poly(P({2, 1, 1})) == std::vector<FactorPower>{{P({2, 1, 1}), 1}});
  // x^4 + 1 is irreducible over Z but splits modulo every prime
  CHECK(factor_int_poly(P({1, 0, 0, 0, 1})).size() == 1);
  const auto sq = factor_int_poly(power(P({2, 0, 1}), 3) * power(P({-1, 1}), 2));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == FactorPower{P({-1, 1}), 2});
  CHECK(sq[1] == FactorPower{P({2, 0, 1}), 3});
  CHECK_THROWS_AS(factor_int_poly(P({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(factor_int_poly(P({3})), std::invalid_argument);
}

TEST_CASE("factorization round trip on random products") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 6), 20, true);
    const IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 6), 20, true);
    const auto fac = factor_int_poly(f * g);
    CHECK(expand(fac) == f * g);
    for (const auto& fp : fac) {
      CHECK(fp.factor.is_monic());
      CHECK(fp.exponent >= 1);
      CHECK(factor_int_poly(fp.factor).size() == 1);
    }
  }
  const auto sq = factor_int_poly(P({4, 0, 4, 0, 1}));
  CHECK(sq == std::vector<FactorPower>{{P({2, 0, 1}), 2}});
}

TEST_CASE("squarefree decomposition") {
  const IntPoly f = P({2, 1, 1});
  const IntPoly g = P({-3, 1});
  const auto parts = squarefree_decomposition(f * power(g, 3));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == FactorPower{f, 1});
  CHECK(parts[1] == FactorPower{g, 3});
}

TEST_CASE("factorization round trip on certified irreducibles") {
  oracle::IrreducibleSource src(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<IntPoly> chosen;
    int total = 0;
    while (true) {
      const int deg = 1 + static_cast<int>(src.rng()() % 4);
      if (total + deg > 8) break;
      chosen.push_back(src.next(deg));
      total += deg;
      if (src.rng()() % 3 == 0) break;
    }
    IntPoly prod = IntPoly::constant(1);
    for (const auto& c : chosen) prod = prod * c;
    const auto fac = factor_int_poly(prod);
    std::vector<std::vector<Integer>> want, got;
    for (const auto& c : chosen) want.push_back(c.coeffs());
    for (const auto& f : fac) {
      for (int e = 0; e < f.exponent; ++e) got.push_back(f.factor.coeffs());
    }
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CAPTURE(prod);
    CHECK(want == got);
  }
}
