#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thickrep/repcore.hpp"

namespace thickrep {

/// Two n x n cyclic-shift generators whose top-right entries are a and b,
/// with the invariant window subspaces W_m = <e_i ^ ... ^ e_{i+m-1}> (indices mod n).
struct CompanionPair {
  Representation rep;
  std::vector<Subspace> windows;  // windows[m-1] lives in the m-th power, 0 < m < n
  bool roots_present = false;     // a and b each have n distinct n-th roots
  Tri irreducible = Tri::Unknown;
};

/// Throws PreconditionFailed when a == b or either is zero.
CompanionPair companion_pair(const FieldSpec& f, std::size_t n, const Scalar& a, const Scalar& b);

/// Block-cyclic matrix: blocks[0..l-2] on the block subdiagonal, blocks[l-1] top right.
Matrix block_cyclic(const std::vector<Matrix>& blocks);

struct BlockRepSpec {
  FieldSpec field;
  std::size_t ell = 2;
  std::size_t m = 2;
  Vector alphas;                 // diagonal of the top-right block of A
  std::optional<Matrix> b_last;  // chosen generically when absent
};

struct BlockRep {
  Representation rep;  // generators A, B
  Subspace w;          // dim ell in the m-th power
  Subspace y;          // dim m^ell in the ell-th power
  Matrix b_last;
  Vector betas;        // eigenvalues of b_last when it was generated
  /// coefficients[r][c]: A-eigenvector r written in the B-eigenbasis; all nonzero
  /// when B is built from a diagonalizable b_last with eigenvalues off the alphas.
  std::vector<Vector> coefficients;
  bool coefficients_nonzero = false;
  std::size_t attempts = 0;
  Tri irreducible = Tri::Unknown;
};

/// Distinct c^ell for c = 1, 2, ... (field order), skipping `exclude`, each having
/// exactly ell ell-th roots. Throws FieldTooSmall.
Vector ell_th_powers(const FieldSpec& f, std::size_t ell, std::size_t count, const Vector& exclude = {});

/// Spec with the first m admissible ell-th powers as alphas.
BlockRepSpec default_block_spec(const FieldSpec& f, std::size_t ell, std::size_t m);

/// Smallest prime p = 1 (mod ell*m) with at least 2m nonzero ell-th powers.
std::uint64_t suggest_prime(std::size_t ell, std::size_t m);

/// Retries up to `max_attempts` seeds for an irreducible pair when b_last is absent.
/// With b_rest_identity false the blocks B_1..B_{l-1} are random invertible.
BlockRep block_rep(const BlockRepSpec& spec, bool b_rest_identity = true, std::uint64_t seed = 0,
                   std::size_t max_attempts = 32);

/// Eigenpairs (xi, w) of block_cyclic(blocks), ordered by the eigenvalues of
/// C = A_l ... A_1 and then by root. Throws PreconditionFailed.
std::vector<std::pair<Scalar, Vector>> block_eigenvectors(const std::vector<Matrix>& blocks);

struct Diagonalizable {
  Matrix f;
  std::vector<Vector> basis;  // eigenvectors summing to v
  Vector betas;
};

/// Throws FieldTooSmall or ZeroInput.
Diagonalizable generic_diagonalizable(const Vector& v, const Vector& avoid, std::uint64_t seed = 0);

/// e_1 ^ k^n inside the second power; throws BadN for n < 4.
Subspace e1_wedge_subspace(const FieldSpec& f, std::size_t n);

enum class LieFamily { gl, sl, so_split, sp };
std::string to_string(LieFamily family);
/// Throws BadFamily.
LieFamily parse_lie_family(const std::string& name);

/// Invariant form in split coordinates: sp uses size 2n with w(e_i, e_{n+i}) = 1;
/// so_split uses size n with Q(e_i, e_{h+i}) = 1 (h = n/2) and Q(e_n, e_n) = 1 for odd n.
Matrix lie_form(const FieldSpec& f, LieFamily family, std::size_t n);

/// Spanning set of the Lie algebra; for sp, n is half the matrix size.
std::vector<Matrix> lie_generators(const FieldSpec& f, LieFamily family, std::size_t n);

}  // namespace thickrep
