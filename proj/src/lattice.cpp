#include "weilbound/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace weilbound {

namespace {

using Index = Eigen::Index;
using ModVec = std::vector<std::int64_t>;
using ModMat = std::vector<ModVec>;  // row-major, entries in [0, l)

std::int64_t mod_inverse(std::int64_t a, std::int64_t l) {
  std::int64_t t = 0, new_t = 1, r = l, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return t < 0 ? t + l : t;
}

// Reduced row echelon form over F_l; zero rows dropped. Canonical per subspace.
ModMat rref(ModMat rows, std::int64_t l) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::int64_t inv = mod_inverse(rows[rank][col], l);
    for (auto& v : rows[rank]) v = v * inv % l;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::int64_t f = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % l + l) % l;
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

ModVec apply(const ModMat& a, const ModVec& v, std::int64_t l) {
  ModVec out(v.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc = (acc + a[i][j] * v[j]) % l;
    out[i] = acc;
  }
  return out;
}

ModMat cyclic_span(const ModMat& a, const ModVec& v, std::int64_t l) {
  ModMat rows{v};
  ModMat basis = rref(rows, l);
  ModVec w = v;
  while (true) {
    w = apply(a, w, l);
    rows.push_back(w);
    ModMat next = rref(rows, l);
    if (next.size() == basis.size()) return basis;
    basis = std::move(next);
  }
}

ModVec key_of(const ModMat& m) {
  ModVec out;
  for (const auto& r : m) out.insert(out.end(), r.begin(), r.end());
  out.push_back(static_cast<std::int64_t>(m.size()));
  return out;
}

std::uint64_t projective_point_count(std::uint64_t l, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += pw;
    if (total > cap) return cap + 1;
    if (pw > cap / l + 1) pw = cap + 1;
    else pw *= l;
  }
  return total;
}

// All A-stable subspaces of F_l^n, including {0} and the whole space.
std::vector<ModMat> stable_subspaces(const ModMat& a, std::int64_t l, const SearchLimits& limits) {
  const std::size_t n = a.size();
  if (projective_point_count(static_cast<std::uint64_t>(l), n, limits.max_points) > limits.max_points) {
    throw ResourceLimit("stable subspace search over F_" + std::to_string(l) + "^" + std::to_string(n) +
                        " exceeds the limit of " + std::to_string(limits.max_points) + " projective points");
  }
  std::map<ModVec, ModMat> cyclic;
  for (std::size_t lead = 0; lead < n; ++lead) {
    ModVec v(n, 0);
    v[lead] = 1;
    const std::size_t free = n - lead - 1;
    while (true) {
      ModMat span = cyclic_span(a, v, l);
      cyclic.emplace(key_of(span), std::move(span));
      std::size_t i = lead + 1;
      for (; i < n; ++i) {
        if (++v[i] < l) break;
        v[i] = 0;
      }
      if (free == 0 || i == n) break;
    }
  }
  std::map<ModVec, ModMat> found;
  std::deque<ModMat> queue{ModMat{}};
  found.emplace(key_of(ModMat{}), ModMat{});
  while (!queue.empty()) {
    const ModMat w = queue.front();
    queue.pop_front();
    for (const auto& [key, z] : cyclic) {
      ModMat rows = w;
      rows.insert(rows.end(), z.begin(), z.end());
      ModMat sum = rref(rows, l);
      auto [it, inserted] = found.emplace(key_of(sum), sum);
      if (!inserted) continue;
      if (found.size() > limits.max_lattices) {
        throw ResourceLimit("more than " + std::to_string(limits.max_lattices) + " stable subspaces");
      }
      queue.push_back(it->second);
    }
  }
  std::vector<ModMat> out;
  for (auto& [key, m] : found) out.push_back(std::move(m));
  return out;
}

ModMat to_mod(const IntMatrix& a, std::int64_t l) {
  ModMat out(static_cast<std::size_t>(a.rows()), ModVec(static_cast<std::size_t>(a.cols())));
  const Integer lm(static_cast<long>(l));
  const IntMatrix r = reduce_mod(a, lm);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r(i, j).get_si();
  }
  return out;
}

std::int64_t det_mod(ModMat m, std::int64_t l) {
  const std::size_t n = m.size();
  std::int64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = (l - det) % l;
    }
    det = det * m[c][c] % l;
    const std::int64_t inv = mod_inverse(m[c][c], l);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::int64_t f = m[r][c] * inv % l;
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) m[r][j] = ((m[r][j] - f * m[c][j]) % l + l) % l;
    }
  }
  return det;
}

IntMatrix column_concat(const std::vector<IntMatrix>& parts, Index rows) {
  Index cols = 0;
  for (const auto& p : parts) cols += p.cols();
  IntMatrix out(rows, cols);
  Index at = 0;
  for (const auto& p : parts) {
    out.middleCols(at, p.cols()) = p;
    at += p.cols();
  }
  return out;
}

IntMatrix scaled(const IntMatrix& a, const Integer& s) {
  IntMatrix out = a;
  for (Index i = 0; i < out.rows(); ++i) {
    for (Index j = 0; j < out.cols(); ++j) out(i, j) *= s;
  }
  return out;
}

Integer lpow(unsigned long l, int k) { return ipow(Integer(l), static_cast<unsigned long>(k)); }

// B^-1 M for a full-rank Hermite basis B; nullopt when not integral, with the
// offending column index reported through `bad_column`.
std::optional<IntMatrix> solve_in_basis(const IntMatrix& b, const IntMatrix& m, Index* bad_column) {
  IntMatrix out(b.cols(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    auto coords = lattice_coordinates(b, m.col(j));
    if (!coords) {
      if (bad_column != nullptr) *bad_column = j;
      return std::nullopt;
    }
    out.col(j) = *coords;
  }
  return out;
}

bool contains_scaled_identity(const IntMatrix& hnf, const Integer& s) {
  const Index n = hnf.rows();
  for (Index j = 0; j < n; ++j) {
    IntVector e = IntVector::Zero(n);
    e(j) = s;
    if (!lattice_contains(hnf, e)) return false;
  }
  return true;
}

bool lattice_order(const LatticeBasis& a, const LatticeBasis& b) {
  const Integer da = determinant(a.basis);
  const Integer db = determinant(b.basis);
  if (da != db) return da < db;
  return flatten(a.basis) < flatten(b.basis);
}

void require_prime(unsigned long l) {
  if (!is_prime(l)) throw std::invalid_argument("l = " + std::to_string(l) + " is not prime");
}

}  // namespace

IntMatrix companion_matrix(const IntPoly& monic) {
  if (!monic.is_monic() || monic.degree() < 1) throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
  const Index n = monic.degree();
  IntMatrix out = IntMatrix::Zero(n, n);
  for (Index i = 1; i < n; ++i) out(i, i - 1) = 1;
  for (Index i = 0; i < n; ++i) out(i, n - 1) = -monic.coeffs()[static_cast<std::size_t>(i)];
  return out;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix out = IntMatrix::Zero(n, n);
  Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

FrobeniusMatrix canonical_matrix(const ComponentDecomposition& decomp) {
  std::vector<IntMatrix> blocks;
  for (std::size_t i = 0; i < decomp.size(); ++i) blocks.push_back(companion_matrix(decomp.block(i)));
  FrobeniusMatrix out{block_diagonal(blocks), decomp.poly};
  WEILBOUND_CHECK(characteristic_polynomial(out.entries) == out.charpoly, "canonical matrix has the wrong characteristic polynomial");
  return out;
}

FrobeniusMatrix canonical_matrix(const IntPoly& P) { return canonical_matrix(decompose(P)); }

std::vector<LatticeBasis> component_lattices(const ComponentDecomposition& decomp, unsigned long l) {
  require_prime(l);
  const FrobeniusMatrix c = canonical_matrix(decomp);
  std::vector<LatticeBasis> out;
  for (std::size_t i = 0; i < decomp.size(); ++i) {
    const IntMatrix m = hermite_normal_form(evaluate_at_matrix(decomp.cofactors[i], c.entries));
    // Saturation of M_i: the integer points of ker P_i^e_i(C).
    const IntMatrix sat = hermite_normal_form(integer_kernel(evaluate_at_matrix(decomp.block(i), c.entries)));
    WEILBOUND_CHECK(m.cols() == sat.cols() && m.cols() == decomp.block(i).degree(), "component lattice has the wrong rank");
    const auto coords = solve_in_basis(sat, m, nullptr);
    WEILBOUND_CHECK(coords.has_value(), "component lattice is not inside its saturation");
    const Integer index = abs(determinant(*coords));
    const Integer lp = lpow(l, valuation(index, l));
    out.push_back({hermite_normal_form(column_concat({m, scaled(sat, lp)}, m.rows())), lp});
  }
  return out;
}

LatticeBasis lattice_sum(const std::vector<LatticeBasis>& parts, unsigned long l) {
  require_prime(l);
  if (parts.empty()) throw std::invalid_argument("empty lattice sum");
  const Index n = parts.front().basis.rows();
  std::vector<IntMatrix> mats;
  for (const auto& p : parts) mats.push_back(p.basis);
  const IntMatrix sum = hermite_normal_form(column_concat(mats, n));
  if (sum.cols() != n) throw std::invalid_argument("lattice sum is not of full rank");
  const Integer lp = lpow(l, valuation(determinant(sum), l));
  return {hermite_normal_form(column_concat({sum, scaled(identity_matrix(n), lp)}, n)), lp};
}

int default_precision(const ComponentDecomposition& decomp, unsigned long l) {
  require_prime(l);
  return s1(l, decomp) + s2(l, decomp) + 1;
}

SandwichResult verify_sandwich(const IntPoly& P, unsigned long l) {
  require_prime(l);
  const ComponentDecomposition decomp = decompose(P);
  SandwichResult out;
  out.s1 = s1(l, decomp);
  const LatticeBasis sum = lattice_sum(component_lattices(decomp, l), l);
  out.index_valuation = valuation(determinant(sum.basis), l);
  const Index n = sum.basis.rows();
  const Integer scale = lpow(l, out.s1);
  for (Index j = 0; j < n && !out.witness; ++j) {
    IntVector e = IntVector::Zero(n);
    e(j) = scale;
    if (!lattice_contains(sum.basis, e)) out.witness = e;
  }
  out.holds = !out.witness.has_value() && out.index_valuation <= static_cast<int>(n) * out.s1;
  return out;
}

std::vector<LatticeBasis> enumerate_stable_lattices(const FrobeniusMatrix& c, unsigned long l, int k,
                                                    const SearchLimits& limits) {
  require_prime(l);
  if (k < 0) throw std::invalid_argument("precision k must be non-negative");
  const Index n = c.entries.rows();
  if (n > limits.max_dimension) {
    throw ResourceLimit("lattice enumeration supports dimension <= " + std::to_string(limits.max_dimension) + ", got " +
                        std::to_string(n));
  }
  const Integer lk = lpow(l, k);
  if (lk > limits.max_modulus) {
    throw ResourceLimit("l^k = " + lk.get_str() + " exceeds the limit " + limits.max_modulus.get_str());
  }
  const auto lm = static_cast<std::int64_t>(l);

  std::vector<LatticeBasis> out;
  std::set<std::vector<Integer>> seen;
  std::deque<IntMatrix> queue;
  const IntMatrix top = identity_matrix(n);
  seen.insert(flatten(top));
  queue.push_back(top);
  while (!queue.empty()) {
    const IntMatrix b = queue.front();
    queue.pop_front();
    out.push_back({b, lk});
    Index bad = 0;
    const auto action = solve_in_basis(b, c.entries * b, &bad);
    WEILBOUND_CHECK(action.has_value(), "enumerated lattice is not stable");
    for (const auto& w : stable_subspaces(to_mod(*action, lm), lm, limits)) {
      if (static_cast<Index>(w.size()) == n) continue;
      IntMatrix gens(n, static_cast<Index>(w.size()) + n);
      for (std::size_t r = 0; r < w.size(); ++r) {
        IntVector coords(n);
        for (Index t = 0; t < n; ++t) coords(t) = static_cast<long>(w[r][static_cast<std::size_t>(t)]);
        gens.col(static_cast<Index>(r)) = b * coords;
      }
      gens.rightCols(n) = scaled(b, Integer(l));
      IntMatrix child = hermite_normal_form(gens);
      if (!contains_scaled_identity(child, lk)) continue;
      if (!seen.insert(flatten(child)).second) continue;
      if (seen.size() > limits.max_lattices) {
        throw ResourceLimit("more than " + std::to_string(limits.max_lattices) + " stable lattices");
      }
      queue.push_back(std::move(child));
    }
  }
  std::sort(out.begin(), out.end(), lattice_order);
  return out;
}

InducedAction induced_action(const FrobeniusMatrix& c, const LatticeBasis& lattice, unsigned long l, int k) {
  require_prime(l);
  const IntMatrix& b = lattice.basis;
  if (b.rows() != b.cols() || b.rows() != c.entries.rows()) throw std::invalid_argument("lattice basis has the wrong shape");
  Index bad = 0;
  const auto m = solve_in_basis(b, c.entries * b, &bad);
  if (!m) {
    throw UnstableLattice("lattice is not stable: image of basis column " + std::to_string(bad) + " leaves the lattice",
                          c.entries * b.col(bad));
  }
  InducedAction out;
  out.matrix = *m;
  out.reduced = reduce_mod(out.matrix, lpow(l, k));
  for (const auto& d : smith_invariants(b)) out.profile.push_back(valuation(d, l));
  WEILBOUND_CHECK(characteristic_polynomial(out.matrix) == c.charpoly, "induced action changed the characteristic polynomial");
  return out;
}

bool conjugate_mod(const IntMatrix& a, const IntMatrix& b, unsigned long l, int k, const SearchLimits& limits) {
  require_prime(l);
  const Index n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n) throw std::invalid_argument("conjugacy test needs square matrices of one size");
  const Integer lk = lpow(l, k);
  const IntMatrix ar = reduce_mod(a, lk);
  const IntMatrix br = reduce_mod(b, lk);
  if (ar == br) return true;
  {
    const IntPoly pa = characteristic_polynomial(a);
    const IntPoly pb = characteristic_polynomial(b);
    for (int i = 0; i <= static_cast<int>(n); ++i) {
      Integer d = pa.coeff(static_cast<std::size_t>(i)) - pb.coeff(static_cast<std::size_t>(i));
      if (!mpz_divisible_p(d.get_mpz_t(), lk.get_mpz_t())) return false;
    }
  }

  // Solutions of S A - B S = 0 (mod l^k) form a lattice in Z^(n*n) containing l^k Z^(n*n).
  const Index dim = n * n;
  IntMatrix system = IntMatrix::Zero(dim, 2 * dim);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index eq = i * n + j;
      for (Index t = 0; t < n; ++t) {
        system(eq, i * n + t) += ar(t, j);
        system(eq, t * n + j) -= br(i, t);
      }
      system(eq, dim + eq) = lk;
    }
  }
  const IntMatrix kernel = integer_kernel(system);
  const IntMatrix solutions =
      hermite_normal_form(column_concat({IntMatrix(kernel.topRows(dim)), scaled(identity_matrix(dim), lk)}, dim));
  WEILBOUND_CHECK(solutions.cols() == dim, "solution lattice is not of full rank");

  std::vector<Integer> radix(static_cast<std::size_t>(dim));
  Integer total = 1;
  for (Index i = 0; i < dim; ++i) {
    radix[static_cast<std::size_t>(i)] = lk / solutions(i, i);
    total *= radix[static_cast<std::size_t>(i)];
  }
  if (total > limits.max_conjugators) {
    throw ResourceLimit("conjugacy search over " + total.get_str() + " candidates exceeds the limit " +
                        std::to_string(limits.max_conjugators));
  }
  const auto lm = static_cast<std::int64_t>(l);
  const ModMat basis_mod = to_mod(solutions, lm);
  std::vector<std::int64_t> digit(static_cast<std::size_t>(dim), 0);
  std::vector<std::int64_t> limit(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) limit[static_cast<std::size_t>(i)] = radix[static_cast<std::size_t>(i)].get_si();
  while (true) {
    // Invertibility mod l only depends on S mod l.
    ModMat s(static_cast<std::size_t>(n), ModVec(static_cast<std::size_t>(n), 0));
    for (Index v = 0; v < dim; ++v) {
      std::int64_t acc = 0;
      for (Index col = 0; col < dim; ++col) {
        const std::int64_t d = digit[static_cast<std::size_t>(col)] % lm;
        if (d != 0) acc = (acc + d * basis_mod[static_cast<std::size_t>(v)][static_cast<std::size_t>(col)]) % lm;
      }
      s[static_cast<std::size_t>(v / n)][static_cast<std::size_t>(v % n)] = acc;
    }
    if (det_mod(s, lm) != 0) return true;
    Index pos = 0;
    for (; pos < dim; ++pos) {
      if (++digit[static_cast<std::size_t>(pos)] < limit[static_cast<std::size_t>(pos)]) break;
      digit[static_cast<std::size_t>(pos)] = 0;
    }
    if (pos == dim) return false;
  }
}

ActionClassification classify_actions(const std::vector<InducedAction>& actions, unsigned long l, int k,
                                      const SearchLimits& limits) {
  require_prime(l);
  ActionClassification out;
  if (actions.empty()) return out;
  const IntPoly charpoly = characteristic_polynomial(actions.front().matrix);
  for (const auto& a : actions) {
    if (characteristic_polynomial(a.matrix) != charpoly) throw std::invalid_argument("actions do not share a characteristic polynomial");
  }
  out.class_of.resize(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < out.classes.size() && !placed; ++c) {
      const InducedAction& first = actions[out.classes[c].members.front()];
      if (first.profile != actions[i].profile) continue;
      if (!conjugate_mod(first.matrix, actions[i].matrix, l, k, limits)) continue;
      out.classes[c].members.push_back(i);
      out.class_of[i] = c;
      placed = true;
    }
    if (!placed) {
      out.class_of[i] = out.classes.size();
      out.classes.push_back({{i}, i});
    }
  }
  for (auto& cls : out.classes) {
    for (std::size_t m : cls.members) {
      if (flatten(actions[m].reduced) < flatten(actions[cls.representative].reduced)) cls.representative = m;
    }
  }
  return out;
}

}  // namespace weilbound
