#pragma once

#include <cstdint>
#include <vector>

#include "thickrep/exterior.hpp"
#include "thickrep/linalg.hpp"

namespace thickrep {

/// k^{2n} with w = sum_i e*_i ^ e*_{n+i}.
struct SymplecticSpace {
  FieldSpec field;
  std::size_t n = 0;  // half-dimension
  Matrix j;           // Gram matrix, j(i, n+i) = 1

  static SymplecticSpace standard(const FieldSpec& f, std::size_t n);
  std::size_t dim() const noexcept { return 2 * n; }
  Scalar form(const Vector& u, const Vector& v) const;
  /// {x : w(s, x) = 0 for all s in s_}.
  Subspace orthogonal(const Subspace& s) const;
  bool is_isotropic(const Subspace& s) const;
};

/// Matrix of the contraction f_m from the m-th to the (m-2)-th power (colex bases).
Matrix contraction_matrix(const SymplecticSpace& sp, std::size_t m);
/// Kernel of f_m for 2 <= m <= n.
Subspace ker_fm(const SymplecticSpace& sp, std::size_t m);

/// Basis with w(v_i, v_{n+i}) = 1 and all other pairings zero, such that
/// W = <v_1..v_{n-l}, v_{n+1}..v_{n+k}> (0-based in `basis`).
struct NormalBasis {
  std::vector<Vector> basis;
  std::size_t k = 0;
  std::size_t l = 0;
};
NormalBasis symplectic_normal_basis(const SymplecticSpace& sp, const Subspace& w);

/// Lagrangian L with L + W = V; throws CodimTooLarge when codim W > n.
Subspace lagrangian_complement(const SymplecticSpace& sp, const Subspace& w);

/// Isotropic U of dimension i with U meeting W only in 0; throws CodimMismatch
/// unless codim W = i <= n.
Subspace isotropic_transversal(const SymplecticSpace& sp, const Subspace& w, std::size_t i);

struct KerPerpReport {
  std::size_t m = 0;
  Subspace ker_perp;                   // in the (2n-m)-th power
  std::size_t trials = 0;
  std::size_t trials_passed = 0;       // random W with nonzero pairing against its transversal
  bool pairings_all_nonzero = false;
  Realizability perp_realizability = Realizability::Unknown;  // decomposable vectors in ker_perp
  bool perp_scan_exhaustive = false;
  std::uint64_t points_examined = 0;
};

/// Throws BadM unless 1 < m <= n.
KerPerpReport ker_perp_realizability_check(const SymplecticSpace& sp, std::size_t m, std::size_t trials,
                                           std::uint64_t seed = 0, const RealizabilityBudget& budget = {});

}  // namespace thickrep
