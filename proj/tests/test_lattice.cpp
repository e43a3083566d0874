#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "weilbound/lattice.hpp"
#include "weilbound/weil.hpp"

using namespace weilbound;

namespace {

IntPoly P(std::initializer_list<long> ascending) {
  std::vector<Integer> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

FrobeniusMatrix frob(const IntMatrix& m) { return {m, characteristic_polynomial(m)}; }

std::vector<std::vector<long>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<long>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j).get_si());
  }
  return out;
}

// L / l^k Z^n as a sorted element list.
std::vector<std::vector<long>> quotient_elements(const IntMatrix& b, long mod) {
  const auto n = static_cast<std::size_t>(b.rows());
  std::set<std::vector<long>> elems;
  std::vector<long> x(n, 0);
  while (true) {
    std::vector<long> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).get_si() * x[j];
      v[i] = ((acc % mod) + mod) % mod;
    }
    elems.insert(v);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++x[i] < mod) break;
      x[i] = 0;
    }
    if (i == n) break;
  }
  return {elems.begin(), elems.end()};
}

void check_against_subgroups(const IntMatrix& c, long l, int k) {
  CAPTURE(l);
  CAPTURE(k);
  long mod = 1;
  for (int i = 0; i < k; ++i) mod *= l;
  const auto lattices = enumerate_stable_lattices(frob(c), static_cast<unsigned long>(l), k);
  std::set<std::vector<std::vector<long>>> ours;
  for (const auto& lat : lattices) ours.insert(quotient_elements(lat.basis, mod));
  CHECK(ours.size() == lattices.size());
  CHECK(ours == oracle::stable_subgroups(to_rows(c), l, k));
}

}  // namespace

TEST_CASE("companion and canonical matrices") {
  CHECK(companion_matrix(P({2, 1, 1})) == M({{0, -2}, {1, -1}}));
  CHECK(characteristic_polynomial(companion_matrix(P({5, -3, 0, 2, 1}))) == P({5, -3, 0, 2, 1}));
  const FrobeniusMatrix c = canonical_matrix(P({4, 0, 3, 0, 1}));
  CHECK(c.entries.rows() == 4);
  CHECK(c.charpoly == P({4, 0, 3, 0, 1}));
  CHECK(c.entries(0, 2) == 0);  // block diagonal
  CHECK_THROWS_AS(companion_matrix(P({1, 2})), std::invalid_argument);
}

TEST_CASE("Hermite normal form and kernel") {
  const IntMatrix h = hermite_normal_form(M({{7, 11, 4}, {0, 1, 1}}));
  CHECK(h == M({{7, 4}, {0, 1}}));
  CHECK(determinant(M({{2, 1}, {7, 4}})) == 1);
  const IntMatrix k = integer_kernel(M({{1, 2, 3}}));
  CHECK(k.cols() == 2);
  CHECK((M({{1, 2, 3}}) * k).isZero());
  CHECK(smith_invariants(M({{2, 0}, {0, 4}})) == std::vector<Integer>{2, 4});
  CHECK(smith_invariants(M({{7, 4}, {0, 1}})) == std::vector<Integer>{1, 7});
}

TEST_CASE("stable lattice counts") {
  const FrobeniusMatrix c = canonical_matrix(P({2, 1, 1}));
  CHECK(enumerate_stable_lattices(c, 3, 1).size() == 2);
  const auto seven = enumerate_stable_lattices(c, 7, 1);
  REQUIRE(seven.size() == 3);
  CHECK(seven[1].basis == M({{7, 4}, {0, 1}}));
  CHECK(enumerate_stable_lattices(frob(M({{1, 0}, {0, -1}})), 2, 1).size() == 5);
}

TEST_CASE("enumeration agrees with exhaustive subgroup scans") {
  const IntMatrix c = companion_matrix(P({2, 1, 1}));
  check_against_subgroups(c, 3, 1);
  check_against_subgroups(c, 7, 1);
  check_against_subgroups(c, 2, 1);
  check_against_subgroups(c, 2, 2);
  check_against_subgroups(c, 2, 3);
  check_against_subgroups(M({{1, 0}, {0, -1}}), 2, 1);
  check_against_subgroups(M({{1, 0}, {0, -1}}), 2, 2);
  check_against_subgroups(M({{1, 0}, {0, -1}}), 3, 2);
  check_against_subgroups(companion_matrix(P({4, 0, 3, 0, 1})), 2, 1);
  check_against_subgroups(companion_matrix(P({2, 0, 1})), 3, 1);
}

TEST_CASE("count does not depend on the matrix presentation") {
  // The transpose of a companion matrix is conjugate to it over Z.
  for (const IntPoly& f : {P({2, 1, 1}), P({4, 0, 3, 0, 1}), P({3, 3, 1})}) {
    const IntMatrix c = companion_matrix(f);
    for (unsigned long l : {2UL, 3UL, 7UL}) {
      CHECK(enumerate_stable_lattices(frob(c), l, 1).size() ==
            enumerate_stable_lattices(frob(c.transpose()), l, 1).size());
    }
  }
}

TEST_CASE("enumeration output is sorted, stable and unique") {
  const FrobeniusMatrix c = canonical_matrix(P({4, 0, 3, 0, 1}));
  const auto lattices = enumerate_stable_lattices(c, 2, 2);
  std::set<std::vector<Integer>> seen;
  Integer lk = 4;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    CHECK(seen.insert(flatten(lattices[i].basis)).second);
    CHECK(hermite_normal_form(lattices[i].basis) == lattices[i].basis);
    CHECK_NOTHROW(induced_action(c, lattices[i], 2, 2));
    for (Eigen::Index j = 0; j < 4; ++j) {
      IntVector e = IntVector::Zero(4);
      e(j) = lk;
      CHECK(lattice_contains(lattices[i].basis, e));
    }
    if (i > 0) CHECK(determinant(lattices[i - 1].basis) <= determinant(lattices[i].basis));
  }
  CHECK(lattices == enumerate_stable_lattices(c, 2, 2));
}

TEST_CASE("induced action") {
  const FrobeniusMatrix c = canonical_matrix(P({2, 1, 1}));
  const InducedAction a = induced_action(c, {M({{7, 4}, {0, 1}}), 7}, 7, 1);
  CHECK(a.matrix == M({{-4, -2}, {7, 3}}));
  CHECK(a.reduced == M({{3, 5}, {0, 3}}));
  CHECK(a.profile == std::vector<int>{0, 1});
  try {
    induced_action(c, {M({{7, 1}, {0, 1}}), 7}, 7, 1);
    FAIL("expected UnstableLattice");
  } catch (const UnstableLattice& e) {
    CHECK(e.witness().size() == 2);
  }
}

TEST_CASE("conjugacy modulo l^k") {
  const IntMatrix a = companion_matrix(P({2, 1, 1}));
  CHECK(conjugate_mod(a, a, 7, 2));
  CHECK(conjugate_mod(a, a.transpose(), 7, 2));
  CHECK(conjugate_mod(a.transpose(), a, 7, 2));
  const IntMatrix b = M({{-4, -2}, {7, 3}});
  // b = a mod nothing, yet its reduction mod 7 is a Jordan block like a's
  CHECK(conjugate_mod(a, b, 7, 1));
  CHECK_FALSE(conjugate_mod(M({{1, 0}, {0, 1}}), M({{1, 1}, {0, 1}}), 2, 1));
  CHECK_FALSE(conjugate_mod(M({{1, 0}, {0, -1}}), M({{1, 0}, {0, 1}}), 3, 1));
  CHECK(conjugate_mod(M({{1, 0}, {0, -1}}), M({{-1, 0}, {0, 1}}), 3, 2));
}

TEST_CASE("classification") {
  const FrobeniusMatrix c = canonical_matrix(P({2, 1, 1}));
  for (auto [l, expected] : std::vector<std::pair<unsigned long, std::size_t>>{{3, 2}, {7, 3}}) {
    const auto lattices = enumerate_stable_lattices(c, l, 1);
    std::vector<InducedAction> actions;
    for (const auto& lat : lattices) actions.push_back(induced_action(c, lat, l, 1));
    const ActionClassification cls = classify_actions(actions, l, 1);
    CHECK(cls.classes.size() == expected);
    CHECK(cls.classes.size() <= lattices.size());
    for (std::size_t i = 0; i < actions.size(); ++i) {
      const ActionClass& k = cls.classes[cls.class_of[i]];
      CHECK(std::find(k.members.begin(), k.members.end(), i) != k.members.end());
      CHECK(actions[i].profile == actions[k.representative].profile);
      CHECK(conjugate_mod(actions[i].matrix, actions[k.representative].matrix, l, 1));
    }
  }
}

TEST_CASE("sandwich") {
  for (const IntPoly& f : {P({4, 0, 3, 0, 1}), P({2, 0, 1}), P({2, 1, 1}), power(P({2, 1, 1}), 2)}) {
    for (unsigned long l : {2UL, 3UL, 5UL, 7UL}) {
      CAPTURE(f);
      CAPTURE(l);
      const SandwichResult r = verify_sandwich(f, l);
      CHECK(r.holds);
      CHECK_FALSE(r.witness.has_value());
    }
  }
  const SandwichResult two = verify_sandwich(P({4, 0, 3, 0, 1}), 2);
  CHECK(two.s1 == 2);
  CHECK(two.index_valuation > 0);
}

TEST_CASE("resource limits") {
  const FrobeniusMatrix c = canonical_matrix(P({2, 1, 1}));
  CHECK_THROWS_AS(enumerate_stable_lattices(c, 257, 2), ResourceLimit);
  SearchLimits tight;
  tight.max_dimension = 1;
  CHECK_THROWS_AS(enumerate_stable_lattices(c, 3, 1, tight), ResourceLimit);
  CHECK_THROWS_AS(enumerate_stable_lattices(c, 4, 1), std::invalid_argument);
  SearchLimits few;
  few.max_conjugators = 2;
  CHECK_THROWS_AS(conjugate_mod(M({{1, 0}, {0, -1}}), M({{-1, 0}, {0, 1}}), 3, 2, few), ResourceLimit);
}
