#include "weilbound/integer.hpp"

#include <algorithm>
#include <cctype>

namespace weilbound {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

int valuation(const Integer& n, unsigned long l) {
  if (n == 0) throw std::domain_error("valuation of zero");
  if (l < 2) throw std::invalid_argument("valuation base must be >= 2");
  Integer m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), l)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), l);
    ++v;
  }
  return v;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<unsigned long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

namespace {

// Pollard rho with Floyd cycle detection; m is composite and odd.
Integer rho_divisor(const Integer& m) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % m;
      y = (y * y + c) % m;
      y = (y * y + c) % m;
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
    }
    if (d != m) return d;
  }
}

void split_into(const Integer& m, std::vector<Integer>& out) {
  if (m == 1) return;
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
    out.push_back(m);
    return;
  }
  const Integer d = rho_divisor(m);
  split_into(d, out);
  split_into(m / d, out);
}

}  // namespace

std::vector<Integer> prime_factors(const Integer& n) {
  if (n == 0) throw std::domain_error("prime factors of zero");
  std::vector<Integer> out;
  Integer m = abs(n);
  for (unsigned long d = 2; d <= 100000 && Integer(d) * d <= m; ++d) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      out.emplace_back(d);
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
    }
  }
  std::vector<Integer> rest;
  split_into(m, rest);
  std::sort(rest.begin(), rest.end());
  rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  Integer out;
  const std::string digits = text[0] == '+' ? text.substr(1) : text;
  if (out.set_str(digits, 10) != 0) throw std::invalid_argument("not an integer: '" + text + "'");
  return out;
}

}  // namespace weilbound
