#include "weilbound/weil.hpp"

#include <algorithm>
#include <stdexcept>

namespace weilbound {

WeilParams WeilParams::make(unsigned long p, unsigned m, int g) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  return {p, m, ipow(Integer(p), m), g};
}

WeilParams WeilParams::from_q(const Integer& q, int g) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  const auto primes = prime_factors(q);
  if (primes.size() != 1) throw std::invalid_argument("q = " + q.get_str() + " is not a prime power");
  const unsigned long p = primes.front().get_ui();
  return make(p, static_cast<unsigned>(valuation(q, p)), g);
}

namespace {

IntPoly linear(const Integer& root) { return IntPoly{-root, Integer(1)}; }

IntPoly pair_factor(const Integer& q) { return IntPoly{-q, Integer(0), Integer(1)}; }

// Positive rational multiple of p with integer coefficients; keeps signs.
IntPoly positive_integer_multiple(const RatPoly& p) {
  const Integer den = denominator_lcm(p);
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.get_num() * (den / v.get_den()));
  IntPoly out(std::move(c));
  const Integer g = content(out);
  if (g > 1) {
    std::vector<Integer> reduced;
    for (const auto& v : out.coeffs()) reduced.push_back(v / g);
    out = IntPoly(std::move(reduced));
  }
  return out;
}

std::vector<IntPoly> sturm_chain(const IntPoly& h) {
  std::vector<IntPoly> chain{h};
  if (h.degree() < 1) return chain;
  chain.push_back(derivative(h));
  while (true) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    const RatPoly r = divrem(to_rational(a), to_rational(b)).remainder;
    if (r.is_zero()) break;
    chain.push_back(positive_integer_multiple(-r));
  }
  return chain;
}

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<IntPoly>& chain, const QuadNum& at) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(quad_sign(evaluate(to_rational(p), at)));
  return variations(signs);
}

int variations_at_infinity(const std::vector<IntPoly>& chain, bool positive) {
  std::vector<int> signs;
  for (const auto& p : chain) {
    int s = sgn(p.lead());
    if (!positive && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

QuadNum sqrt_q_multiple(long k, const Integer& q) { return {Rational(0), Rational(k), q}; }

// Coefficients of f(x) = x^h * t(x + q/x) from t.
IntPoly from_trace(const IntPoly& t, const Integer& q) {
  const int h = t.degree();
  const IntPoly base{q, Integer(0), Integer(1)};  // x^2 + q
  IntPoly acc;
  IntPoly pw = IntPoly::constant(1);
  for (int j = 0; j <= h; ++j) {
    const Integer& c = t.coeffs()[static_cast<std::size_t>(j)];
    if (c != 0) acc += IntPoly::monomial(c, static_cast<std::size_t>(h - j)) * pw;
    pw = pw * base;
  }
  return acc;
}

// Every root of p is real and lies strictly inside (-2 sqrt q, 2 sqrt q).
bool roots_inside_open_interval(const IntPoly& p, const Integer& q) {
  if (p.degree() < 1) return true;
  const IntPoly sq = radical(p);
  const QuadNum lo = sqrt_q_multiple(-2, q);
  const QuadNum hi = sqrt_q_multiple(2, q);
  const RatPoly rs = to_rational(sq);
  if (quad_sign(evaluate(rs, lo)) == 0 || quad_sign(evaluate(rs, hi)) == 0) return false;
  return sturm_count(sq, lo, hi) == sq.degree();
}

class CoreEnumerator {
 public:
  CoreEnumerator(int half_degree, const Integer& q) : h_(half_degree), q_(q), c_(static_cast<std::size_t>(h_ + 1)) {
    c_[static_cast<std::size_t>(h_)] = 1;
    for (int s = 1; s <= h_; ++s) bounds_.push_back(coefficient_bound(h_, s, q_));
  }

  std::vector<IntPoly> run() {
    out_.clear();
    a_.assign(static_cast<std::size_t>(h_ + 1), Integer(0));
    a_[0] = 1;
    if (h_ == 0) {
      out_.push_back(IntPoly::constant(1));
      return out_;
    }
    descend(1);
    return out_;
  }

 private:
  // Fix a_s; the top s+1 trace coefficients are then determined and the
  // (h-s)-th derivative of the trace polynomial must already have all of its
  // roots inside the interval (Rolle).
  void descend(int s) {
    const Integer& bound = bounds_[static_cast<std::size_t>(s - 1)];
    const auto idx = static_cast<std::size_t>(h_ - s);
    for (Integer a = -bound; a <= bound; ++a) {
      a_[static_cast<std::size_t>(s)] = a;
      Integer c = a;
      for (int t = 1; 2 * t <= s; ++t) {
        const int j = h_ - s + 2 * t;
        c -= c_[static_cast<std::size_t>(j)] * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(t)) *
             ipow(q_, static_cast<unsigned long>(t));
      }
      c_[idx] = c;
      if (!roots_inside_open_interval(derivative_from(h_ - s), q_)) continue;
      if (s == h_) {
        out_.push_back(from_trace(IntPoly(c_), q_));
      } else {
        descend(s + 1);
      }
    }
  }

  IntPoly derivative_from(int order) const {
    std::vector<Integer> d;
    for (int i = order; i <= h_; ++i) {
      Integer falling = 1;
      for (int k = i; k > i - order; --k) falling *= k;
      d.push_back(c_[static_cast<std::size_t>(i)] * falling);
    }
    return IntPoly(std::move(d));
  }

  int h_;
  Integer q_;
  std::vector<Integer> c_;
  std::vector<Integer> a_;
  std::vector<Integer> bounds_;
  std::vector<IntPoly> out_;
};

}  // namespace

Integer coefficient_bound(int g, int s, const Integer& q) {
  const Integer c = binomial(static_cast<unsigned long>(2 * g), static_cast<unsigned long>(s));
  return isqrt(c * c * ipow(q, static_cast<unsigned long>(s)));
}

IntPoly real_factor(const StripRecord& record, const WeilParams& params) {
  IntPoly out = power(pair_factor(params.q), static_cast<unsigned>(record.pair_power));
  if (record.plus_root > 0 || record.minus_root > 0) {
    const Integer r = isqrt(params.q);
    out = out * power(linear(r), static_cast<unsigned>(record.plus_root)) *
          power(linear(-r), static_cast<unsigned>(record.minus_root));
  }
  return out;
}

StripResult strip_real_factors(const IntPoly& f, const WeilParams& params) {
  if (f.is_zero()) throw std::invalid_argument("cannot strip the zero polynomial");
  StripResult out{f, {}};
  auto strip = [&out](const IntPoly& factor, int& counter) {
    while (out.remainder.degree() >= factor.degree()) {
      auto q = exact_quotient(out.remainder, factor);
      if (!q) break;
      out.remainder = std::move(*q);
      ++counter;
    }
  };
  if (params.q_is_square()) {
    const Integer r = isqrt(params.q);
    strip(linear(r), out.record.plus_root);
    strip(linear(-r), out.record.minus_root);
  } else {
    strip(pair_factor(params.q), out.record.pair_power);
  }
  return out;
}

bool check_functional_symmetry(const IntPoly& f, const WeilParams& params) {
  if (f.is_zero() || f.degree() % 2 != 0) return false;
  const int h = f.degree() / 2;
  for (int i = 0; i <= h; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(2 * h - i);
    if (f.coeffs()[lo] != ipow(params.q, static_cast<unsigned long>(h - i)) * f.coeffs()[hi]) return false;
  }
  return true;
}

IntPoly trace_polynomial(const IntPoly& f, const WeilParams& params) {
  if (!f.is_monic()) throw std::invalid_argument("trace polynomial needs a monic polynomial");
  if (!check_functional_symmetry(f, params)) throw std::invalid_argument("trace polynomial needs a symmetric polynomial");
  const int h = f.degree() / 2;
  std::vector<Integer> c(static_cast<std::size_t>(h + 1));
  c[static_cast<std::size_t>(h)] = 1;
  for (int i = 1; i <= h; ++i) {
    Integer v = f.coeff(static_cast<std::size_t>(2 * h - i));
    for (int t = 1; 2 * t <= i; ++t) {
      const int j = h - i + 2 * t;
      v -= c[static_cast<std::size_t>(j)] * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(t)) *
           ipow(params.q, static_cast<unsigned long>(t));
    }
    c[static_cast<std::size_t>(h - i)] = v;
  }
  IntPoly t(std::move(c));
  WEILBOUND_CHECK(from_trace(t, params.q) == f, "trace polynomial does not reproduce its input");
  return t;
}

int sturm_count(const IntPoly& h, const QuadNum& lo, const QuadNum& hi) {
  if (h.is_zero()) throw std::invalid_argument("Sturm count of the zero polynomial");
  const RatPoly rh = to_rational(h);
  if (quad_sign(evaluate(rh, lo)) == 0 || quad_sign(evaluate(rh, hi)) == 0) {
    throw InternalError("Sturm interval endpoint is a root");
  }
  const auto chain = sturm_chain(h);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

int real_root_count(const IntPoly& h) {
  if (h.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  const auto chain = sturm_chain(h);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

bool is_weil(const IntPoly& f, const WeilParams& params) {
  if (!f.is_monic()) throw std::invalid_argument("Weil test needs a monic polynomial");
  if (f.degree() != 2 * params.g) throw std::invalid_argument("Weil test needs degree 2g");
  // Product of the roots has absolute value q^g.
  if (abs(f.coeffs().front()) != ipow(params.q, static_cast<unsigned long>(params.g))) return false;
  const StripResult stripped = strip_real_factors(f, params);
  const IntPoly& core = stripped.remainder;
  if (!check_functional_symmetry(core, params)) return false;
  if (core.degree() == 0) return true;
  const IntPoly sq = radical(trace_polynomial(core, params));
  const QuadNum lo = sqrt_q_multiple(-2, params.q);
  const QuadNum hi = sqrt_q_multiple(2, params.q);
  return sturm_count(sq, lo, hi) == sq.degree() && real_root_count(sq) == sq.degree();
}

std::vector<WeilCandidate> enumerate_weil_candidates(const WeilParams& params) {
  if (params.g < 1 || params.g > kMaxDimension) {
    throw std::invalid_argument("dimension g = " + std::to_string(params.g) + " outside the supported range 1.." +
                                std::to_string(kMaxDimension));
  }
  std::vector<WeilCandidate> out;
  const bool square = params.q_is_square();
  for (int core_half = params.g; core_half >= 0; --core_half) {
    const int real_degree = 2 * (params.g - core_half);
    std::vector<StripRecord> splits;
    if (square) {
      for (int plus = 0; plus <= real_degree; ++plus) splits.push_back({0, plus, real_degree - plus});
    } else {
      splits.push_back({real_degree / 2, 0, 0});
    }
    const auto cores = CoreEnumerator(core_half, params.q).run();
    for (const auto& split : splits) {
      const IntPoly real = real_factor(split, params);
      for (const auto& core : cores) {
        out.push_back({real * core, params, split, core_half == 0 ? IntPoly::constant(1) : trace_polynomial(core, params)});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const WeilCandidate& a, const WeilCandidate& b) { return descending_lex_less(a.poly, b.poly); });
  for (std::size_t i = 1; i < out.size(); ++i) {
    WEILBOUND_CHECK(out[i - 1].poly != out[i].poly, "duplicate polynomial in the Weil census");
  }
  return out;
}

std::vector<IntPoly> enumerate_weil(const WeilParams& params) {
  std::vector<IntPoly> out;
  for (auto& c : enumerate_weil_candidates(params)) out.push_back(std::move(c.poly));
  return out;
}

std::size_t isogeny_class_upper_bound(const WeilParams& params) { return enumerate_weil_candidates(params).size(); }

}  // namespace weilbound
