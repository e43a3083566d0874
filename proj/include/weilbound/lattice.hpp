#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weilbound/matrix.hpp"
#include "weilbound/tate_bounds.hpp"

namespace weilbound {

/// Integer matrix of Frobenius together with its characteristic polynomial.
struct FrobeniusMatrix {
  IntMatrix entries;
  IntPoly charpoly;
};

/// A lattice given by a column Hermite basis. `modulus` is the power l^k the
/// lattice was enumerated or localized at (0 when not applicable).
struct LatticeBasis {
  IntMatrix basis;
  Integer modulus;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.basis.rows() == b.basis.rows() && a.basis.cols() == b.basis.cols() && a.basis == b.basis;
  }
};

/// Frobenius written in the basis of a stable lattice.
struct InducedAction {
  IntMatrix matrix;          // B^-1 C B
  IntMatrix reduced;         // matrix mod l^k, entries in [0, l^k)
  std::vector<int> profile;  // l-adic valuations of the elementary divisors of B
};

/// Thrown by induced_action when C does not preserve the lattice.
class UnstableLattice : public std::invalid_argument {
 public:
  UnstableLattice(const std::string& what, IntVector witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const IntVector& witness() const { return witness_; }

 private:
  IntVector witness_;
};

/// Feasibility limits for the exhaustive searches.
struct SearchLimits {
  Integer max_modulus = 65536;             // l^k
  Eigen::Index max_dimension = 4;          // 2g
  std::uint64_t max_points = 2'000'000;    // projective points of F_l^(2g)
  std::size_t max_lattices = 200'000;
  std::uint64_t max_conjugators = 5'000'000;
};

/// Companion matrix: ones on the subdiagonal, last column -c_0, ..., -c_(n-1).
IntMatrix companion_matrix(const IntPoly& monic);

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// Block-diagonal companion form, one block per primary component P_i^e_i.
FrobeniusMatrix canonical_matrix(const ComponentDecomposition& decomp);
FrobeniusMatrix canonical_matrix(const IntPoly& P);

/// M_i = K_i(C) Z^n localized at l, one Hermite basis (n x deg P_i^e_i) per
/// component. C is the canonical matrix of the decomposition.
std::vector<LatticeBasis> component_lattices(const ComponentDecomposition& decomp, unsigned long l);

/// Sum of full-rank-together lattices, localized at l.
LatticeBasis lattice_sum(const std::vector<LatticeBasis>& parts, unsigned long l);

struct SandwichResult {
  bool holds = false;
  int s1 = 0;
  int index_valuation = 0;          // v_l [Z^n : sum M_i]
  std::optional<IntVector> witness; // l^s1 e_j outside the sum, if any
};

/// s1(l) + s2(l) + 1: one level below the sandwich, so every lattice index
/// that can occur is separated.
int default_precision(const ComponentDecomposition& decomp, unsigned long l);

/// Checks l^s1 Z^n within sum M_i within Z^n by Hermite membership.
SandwichResult verify_sandwich(const IntPoly& P, unsigned long l);

/// Every C-stable lattice between l^k Z^n and Z^n, as Hermite bases sorted by
/// index and then entries. Throws ResourceLimit beyond `limits`.
std::vector<LatticeBasis> enumerate_stable_lattices(const FrobeniusMatrix& c, unsigned long l, int k,
                                                    const SearchLimits& limits = {});

/// Throws UnstableLattice when B^-1 C B is not integral.
InducedAction induced_action(const FrobeniusMatrix& c, const LatticeBasis& lattice, unsigned long l, int k);

/// S A = B S (mod l^k) for some S invertible mod l.
bool conjugate_mod(const IntMatrix& a, const IntMatrix& b, unsigned long l, int k, const SearchLimits& limits = {});

struct ActionClass {
  std::vector<std::size_t> members;
  std::size_t representative = 0;  // member with the smallest reduced matrix
};

struct ActionClassification {
  std::vector<ActionClass> classes;     // in order of first appearance
  std::vector<std::size_t> class_of;    // per input action
};

/// Partition by elementary-divisor profile and conjugacy modulo l^k.
ActionClassification classify_actions(const std::vector<InducedAction>& actions, unsigned long l, int k,
                                      const SearchLimits& limits = {});

}  // namespace weilbound
