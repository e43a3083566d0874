#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "weilbound/integer.hpp"
#include "weilbound/poly.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Literal = mpz_class;
  using Nested = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace weilbound {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

IntMatrix identity_matrix(Eigen::Index n);

/// Column Hermite normal form of the lattice spanned by the columns of
/// `generators`: columns are ordered by strictly increasing pivot row (the
/// pivot is the lowest nonzero entry), pivots are positive, and every entry in
/// a pivot row to the right of its pivot lies in [0, pivot). A full-rank
/// square lattice comes out upper triangular.
IntMatrix hermite_normal_form(const IntMatrix& generators);

/// Z-basis of {x : A x = 0}, one vector per column.
IntMatrix integer_kernel(const IntMatrix& a);

/// Coordinates of v in the HNF basis `hnf`, or nullopt if v is not in the lattice.
std::optional<IntVector> lattice_coordinates(const IntMatrix& hnf, const IntVector& v);

inline bool lattice_contains(const IntMatrix& hnf, const IntVector& v) { return lattice_coordinates(hnf, v).has_value(); }

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

/// Characteristic polynomial det(xI - A), monic (Faddeev-LeVerrier).
IntPoly characteristic_polynomial(const IntMatrix& a);

/// Invariant factors d_1 | d_2 | ... of a square nonsingular matrix from the
/// gcds of its minors.
std::vector<Integer> smith_invariants(const IntMatrix& a);

/// p(A) by Horner's rule.
IntMatrix evaluate_at_matrix(const IntPoly& p, const IntMatrix& a);

/// Entries reduced into [0, m).
IntMatrix reduce_mod(const IntMatrix& a, const Integer& m);

/// Row-major flattening, used for lexicographic comparisons.
std::vector<Integer> flatten(const IntMatrix& a);

}  // namespace weilbound
