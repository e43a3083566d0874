#include "weilbound/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace weilbound {

namespace {

using Index = Eigen::Index;

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct ColumnEchelon {
  IntMatrix h;
  IntMatrix u;           // unimodular, h = input * u
  Index zero_columns = 0;  // columns [0, zero_columns) of h vanish
};

void column_axpy(IntMatrix& a, Index dst, const Integer& factor, Index src) {
  for (Index r = 0; r < a.rows(); ++r) a(r, dst) -= factor * a(r, src);
}

void apply_axpy(ColumnEchelon& w, Index dst, const Integer& factor, Index src) {
  column_axpy(w.h, dst, factor, src);
  column_axpy(w.u, dst, factor, src);
}

void apply_swap(ColumnEchelon& w, Index a, Index b) {
  if (a == b) return;
  w.h.col(a).swap(w.h.col(b));
  w.u.col(a).swap(w.u.col(b));
}

void apply_negate(ColumnEchelon& w, Index c) {
  for (Index r = 0; r < w.h.rows(); ++r) w.h(r, c) = -w.h(r, c);
  for (Index r = 0; r < w.u.rows(); ++r) w.u(r, c) = -w.u(r, c);
}

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon w{a, identity_matrix(a.cols()), 0};
  const Index n = a.rows();
  const Index m = a.cols();
  Index right = m;
  std::vector<Index> pivot_row(static_cast<std::size_t>(m), -1);
  for (Index i = n - 1; i >= 0 && right > 0; --i) {
    while (true) {
      Index best = -1;
      for (Index c = 0; c < right; ++c) {
        if (w.h(i, c) != 0 && (best < 0 || abs(w.h(i, c)) < abs(w.h(i, best)))) best = c;
      }
      if (best < 0) break;
      bool single = true;
      for (Index c = 0; c < right; ++c) {
        if (c == best || w.h(i, c) == 0) continue;
        apply_axpy(w, c, floor_div(w.h(i, c), w.h(i, best)), best);
        if (w.h(i, c) != 0) single = false;
      }
      if (!single) continue;
      apply_swap(w, best, right - 1);
      if (w.h(i, right - 1) < 0) apply_negate(w, right - 1);
      --right;
      pivot_row[static_cast<std::size_t>(right)] = i;
      break;
    }
  }
  for (Index c = m - 1; c >= right; --c) {
    const Index p = pivot_row[static_cast<std::size_t>(c)];
    for (Index d = c + 1; d < m; ++d) {
      const Integer q = floor_div(w.h(p, d), w.h(p, c));
      if (q != 0) apply_axpy(w, d, q, c);
    }
  }
  w.zero_columns = right;
  return w;
}

Index pivot_of(const IntMatrix& hnf, Index col) {
  for (Index r = hnf.rows() - 1; r >= 0; --r) {
    if (hnf(r, col) != 0) return r;
  }
  throw std::invalid_argument("zero column in a Hermite basis");
}

}  // namespace

IntMatrix identity_matrix(Eigen::Index n) {
  IntMatrix out = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& generators) {
  const ColumnEchelon w = column_echelon(generators);
  return w.h.rightCols(generators.cols() - w.zero_columns);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const ColumnEchelon w = column_echelon(a);
  return w.u.leftCols(w.zero_columns);
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& hnf, const IntVector& v) {
  if (v.size() != hnf.rows()) throw std::invalid_argument("vector length does not match the lattice dimension");
  IntVector rest = v;
  IntVector coords(hnf.cols());
  for (Index j = hnf.cols() - 1; j >= 0; --j) {
    const Index p = pivot_of(hnf, j);
    for (Index r = p + 1; r < rest.size(); ++r) {
      if (rest(r) != 0) return std::nullopt;
    }
    if (!mpz_divisible_p(rest(p).get_mpz_t(), hnf(p, j).get_mpz_t())) return std::nullopt;
    coords(j) = rest(p) / hnf(p, j);
    for (Index r = 0; r <= p; ++r) rest(r) -= coords(j) * hnf(r, j);
  }
  for (Index r = 0; r < rest.size(); ++r) {
    if (rest(r) != 0) return std::nullopt;
  }
  return coords;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = -1;
      for (Index r = k + 1; r < n; ++r) {
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntPoly characteristic_polynomial(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const Index n = a.rows();
  std::vector<Integer> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix m = IntMatrix::Zero(n, n);
  const IntMatrix id = identity_matrix(n);
  for (Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
    const IntMatrix am = a * m;
    Integer tr = 0;
    for (Index i = 0; i < n; ++i) tr += am(i, i);
    WEILBOUND_CHECK(mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)), "Faddeev-LeVerrier trace not divisible");
    c[static_cast<std::size_t>(n - k)] = -tr / static_cast<long>(k);
  }
  return IntPoly(std::move(c));
}

namespace {

bool next_subset(std::vector<Index>& idx, Index n) {
  const auto k = static_cast<Index>(idx.size());
  for (Index i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Integer> smith_invariants(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("Smith invariants of a non-square matrix");
  const Index n = a.rows();
  std::vector<Integer> divisors{Integer(1)};
  for (Index k = 1; k <= n; ++k) {
    Integer g = 0;
    std::vector<Index> rows(static_cast<std::size_t>(k));
    std::iota(rows.begin(), rows.end(), Index{0});
    do {
      std::vector<Index> cols(static_cast<std::size_t>(k));
      std::iota(cols.begin(), cols.end(), Index{0});
      do {
        IntMatrix minor(k, k);
        for (Index i = 0; i < k; ++i) {
          for (Index j = 0; j < k; ++j) minor(i, j) = a(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        }
        const Integer d = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      } while (g != 1 && next_subset(cols, n));
    } while (g != 1 && next_subset(rows, n));
    if (g == 0) throw std::invalid_argument("Smith invariants of a singular matrix");
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

IntMatrix evaluate_at_matrix(const IntPoly& p, const IntMatrix& a) {
  const Index n = a.rows();
  IntMatrix acc = IntMatrix::Zero(n, n);
  const IntMatrix id = identity_matrix(n);
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + p.coeffs()[static_cast<std::size_t>(i)] * id;
  return acc;
}

IntMatrix reduce_mod(const IntMatrix& a, const Integer& m) {
  IntMatrix out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) mpz_fdiv_r(out(i, j).get_mpz_t(), a(i, j).get_mpz_t(), m.get_mpz_t());
  }
  return out;
}

std::vector<Integer> flatten(const IntMatrix& a) {
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) out.push_back(a(i, j));
  }
  return out;
}

}  // namespace weilbound
