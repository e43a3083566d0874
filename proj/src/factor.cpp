#include "weilbound/factor.hpp"

#include <algorithm>
#include <random>

namespace weilbound {

namespace {

// Polynomials over Z/m as ascending coefficient vectors reduced into [0, m).
using ModPoly = std::vector<Integer>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

ModPoly reduce(const IntPoly& f, const Integer& m) {
  ModPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(mod(c, m));
  trim(out);
  return out;
}

// Lift to Z with coefficients in (-m/2, m/2].
IntPoly symmetric_lift(const ModPoly& a, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(c > half ? Integer(c - m) : c);
  return IntPoly(std::move(out));
}

ModPoly sub(const ModPoly& a, const ModPoly& b, const Integer& m) {
  ModPoly out(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod(out[i] - b[i], m);
  trim(out);
  return out;
}

ModPoly add(const ModPoly& a, const ModPoly& b, const Integer& m) {
  ModPoly out(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod(out[i] + b[i], m);
  trim(out);
  return out;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) c = mod(c, m);
  trim(out);
  return out;
}

ModPoly scale(const ModPoly& a, const Integer& s, const Integer& m) {
  ModPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(mod(c * s, m));
  trim(out);
  return out;
}

Integer inverse(const Integer& v, const Integer& m) {
  Integer out;
  if (mpz_invert(out.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InternalError("non-invertible leading coefficient modulo " + m.get_str());
  }
  return out;
}

// a = q*b + r over Z/m; lc(b) must be a unit.
std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b, const Integer& m) {
  WEILBOUND_CHECK(!b.empty(), "modular division by zero polynomial");
  ModPoly r = a;
  if (deg(a) < deg(b)) return {{}, r};
  const Integer inv = inverse(b.back(), m);
  ModPoly q(static_cast<std::size_t>(deg(a) - deg(b) + 1), Integer(0));
  for (int i = deg(a); i >= deg(b); --i) {
    const auto top = static_cast<std::size_t>(i);
    if (r[top] == 0) continue;
    const Integer t = mod(r[top] * inv, m);
    q[static_cast<std::size_t>(i - deg(b))] = t;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = r[static_cast<std::size_t>(i - deg(b)) + j];
      slot = mod(slot - t * b[j], m);
    }
  }
  trim(q);
  r.resize(static_cast<std::size_t>(deg(b)));
  trim(r);
  return {q, r};
}

ModPoly rem(const ModPoly& a, const ModPoly& b, const Integer& m) { return divrem(a, b, m).second; }

ModPoly monic(const ModPoly& a, const Integer& p) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), p), p);
}

ModPoly gcd(ModPoly a, ModPoly b, const Integer& p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s*a + t*b = 1 mod p for coprime a, b.
std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b, const Integer& p) {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{Integer(1)}, s1;
  ModPoly t0, t1{Integer(1)};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  WEILBOUND_CHECK(deg(r0) == 0, "Hensel factors are not coprime modulo p");
  const Integer inv = inverse(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

ModPoly derivative(const ModPoly& a, const Integer& m) {
  ModPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mod(a[i] * static_cast<unsigned long>(i), m));
  trim(out);
  return out;
}

ModPoly powmod(ModPoly base, const Integer& exponent, const ModPoly& f, const Integer& p) {
  ModPoly acc{Integer(1)};
  base = rem(base, f, p);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = rem(mul(acc, acc, p), f, p);
    if (mpz_tstbit(exponent.get_mpz_t(), i) != 0) acc = rem(mul(acc, base, p), f, p);
  }
  return acc;
}

struct DegreeBlock {
  ModPoly product;  // product of all irreducible factors of this degree
  int degree;
};

std::vector<DegreeBlock> distinct_degree(ModPoly f, const Integer& p) {
  std::vector<DegreeBlock> out;
  const ModPoly x{Integer(0), Integer(1)};
  ModPoly h = rem(x, f, p);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, p, f, p);
    ModPoly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      out.push_back({g, d});
      f = divrem(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back({f, deg(f)});
  return out;
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void equal_degree(const ModPoly& f, int d, const Integer& p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  const Integer exponent = (ipow(p, static_cast<unsigned long>(d)) - 1) / 2;
  const unsigned long pl = p.get_ui();
  std::uniform_int_distribution<unsigned long> coeff(0, pl - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(deg(f)));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = sub(powmod(a, exponent, f, p), ModPoly{Integer(1)}, p);
    ModPoly g = gcd(b, f, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divrem(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const ModPoly& f, const Integer& p) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<ModPoly> out;
  for (const auto& block : distinct_degree(f, p)) equal_degree(block.product, block.degree, p, rng, out);
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

// Lift f = g*h (mod p) to f = G*H (mod p^k) with G, H monic, G = g, H = h (mod p).
std::pair<ModPoly, ModPoly> hensel_lift(const ModPoly& f, const ModPoly& g, const ModPoly& h, const Integer& p,
                                        const Integer& pk) {
  const auto [s, t] = bezout(g, h, p);
  ModPoly G = g, H = h;
  for (Integer pj = p; pj < pk; pj *= p) {
    ModPoly diff = sub(f, mul(G, H, pk), pk);
    ModPoly e;
    e.reserve(diff.size());
    for (const auto& c : diff) {
      WEILBOUND_CHECK(mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t()), "Hensel step lost congruence");
      e.push_back(mod(c / pj, p));
    }
    trim(e);
    if (e.empty()) continue;
    auto [q, r] = divrem(mul(t, e, p), g, p);
    ModPoly u = add(mul(s, e, p), mul(q, h, p), p);
    G = add(G, scale(r, pj, pk), pk);
    H = add(H, scale(u, pj, pk), pk);
  }
  return {G, H};
}

Integer mignotte_bound(const IntPoly& f) {
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  return ipow(Integer(2), static_cast<unsigned long>(f.degree())) * (isqrt(norm2) + 1);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool factor_order(const IntPoly& a, const IntPoly& b) { return descending_lex_less(a, b); }

}  // namespace

std::vector<FactorPower> squarefree_decomposition(const IntPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("squarefree decomposition needs a monic non-constant polynomial");
  std::vector<FactorPower> out;
  const RatPoly rf = to_rational(f);
  const RatPoly a0 = gcd(rf, derivative(rf));
  RatPoly b = divrem(rf, a0).quotient;
  RatPoly c = divrem(derivative(rf), a0).quotient;
  RatPoly d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    const RatPoly a = gcd(b, d);
    b = divrem(b, a).quotient;
    c = divrem(d, a).quotient;
    d = c - derivative(b);
    if (a.degree() > 0) out.push_back({primitive_part(a), i});
  }
  return out;
}

unsigned long factoring_prime(const IntPoly& f) {
  for (unsigned long p = 3;; p += 2) {
    if (!is_prime(p)) continue;
    const Integer pm(p);
    if (mpz_divisible_ui_p(f.lead().get_mpz_t(), p) != 0) continue;
    const ModPoly fp = reduce(f, pm);
    if (deg(gcd(fp, derivative(fp, pm), pm)) == 0) return p;
  }
}

std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("factor_squarefree needs a monic non-constant polynomial");
  if (f.degree() == 1) return {f};

  const Integer p(factoring_prime(f));
  const ModPoly fp = reduce(f, p);
  const std::vector<ModPoly> modular = factor_mod_p(fp, p);
  if (modular.size() == 1) return {f};

  const Integer bound = 2 * mignotte_bound(f) + 1;
  Integer pk = p;
  while (pk <= bound) pk *= p;

  // Sequential two-factor lifting: peel one modular factor at a time.
  std::vector<ModPoly> lifted;
  ModPoly rest = reduce(f, pk);
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    ModPoly tail{Integer(1)};
    for (std::size_t j = i + 1; j < modular.size(); ++j) tail = mul(tail, modular[j], p);
    auto [G, H] = hensel_lift(rest, modular[i], tail, p, pk);
    lifted.push_back(std::move(G));
    rest = std::move(H);
  }
  lifted.push_back(rest);

  std::vector<IntPoly> out;
  IntPoly remaining = f;
  std::vector<ModPoly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    bool found = false;
    do {
      ModPoly prod{Integer(1)};
      for (auto i : idx) prod = mul(prod, pool[i], pk);
      const IntPoly candidate = symmetric_lift(prod, pk);
      if (auto q = exact_quotient(remaining, candidate)) {
        out.push_back(candidate);
        remaining = std::move(*q);
        std::vector<ModPoly> next;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
        }
        pool = std::move(next);
        found = true;
        break;
      }
    } while (next_combination(idx, pool.size()));
    if (!found) ++size;
  }
  if (remaining.degree() > 0) out.push_back(remaining);
  std::sort(out.begin(), out.end(), factor_order);
  return out;
}

std::vector<FactorPower> factor_int_poly(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("cannot factor a constant polynomial");
  if (!f.is_monic()) throw std::invalid_argument("factorization requires a monic polynomial");
  std::vector<FactorPower> out;
  for (const auto& part : squarefree_decomposition(f)) {
    for (auto& irreducible : factor_squarefree(part.factor)) out.push_back({std::move(irreducible), part.exponent});
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.factor != b.factor) return factor_order(a.factor, b.factor);
    return a.exponent < b.exponent;
  });
  WEILBOUND_CHECK(expand(out) == f, "factorization does not multiply back to its input");
  return out;
}

IntPoly expand(const std::vector<FactorPower>& factors) {
  IntPoly acc = IntPoly::constant(1);
  for (const auto& fp : factors) acc = acc * power(fp.factor, static_cast<unsigned>(fp.exponent));
  return acc;
}

}  // namespace weilbound
