#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thickrep/exterior.hpp"
#include "thickrep/linalg.hpp"

namespace thickrep {

enum class RepMode { Group, Lie };
std::string to_string(RepMode mode);

/// A representation given by generator matrices. In Group mode the generators
/// are invertible and generate the group; in Lie mode they span (or generate)
/// a Lie algebra acting by derivations.
struct Representation {
  FieldSpec field;
  std::size_t dim = 0;
  RepMode mode = RepMode::Group;
  std::vector<Matrix> generators;
  std::string label;

  /// Checks shapes, fields, and invertibility in Group mode; throws.
  void validate() const;
};

Representation make_representation(const FieldSpec& f, RepMode mode, std::vector<Matrix> generators,
                                   std::string label = {});

/// Search budgets. Defaults can be overridden by THICKREP_CAPS, e.g.
/// "group=200000,points=5000000,pairs=100000000".
struct Caps {
  std::uint64_t group = 100'000;
  std::uint64_t points = 1'000'000;
  std::uint64_t pairs = 50'000'000;

  static Caps from_string(const std::string& spec);
  static Caps from_string(const std::string& spec, Caps base);
  static Caps from_env();
};

Representation exterior_rep(const Representation& r, std::size_t m);
/// Same generators with entries read in a larger field containing the old one.
Representation extend_scalars(const Representation& r, const FieldSpec& bigger);
/// Action on an invariant subspace, in the coordinates of its canonical basis.
Representation restrict_to(const Representation& r, const Subspace& w);

Subspace spin(const Representation& r, const std::vector<Vector>& seeds);
bool is_invariant(const Representation& r, const Subspace& w);

/// Dimension of the unital matrix algebra generated by the generators.
std::size_t burnside_dim(const Representation& r);

/// Every invariant subspace, sorted by (dim, canonical basis). Finite fields
/// only; throws CapExceeded when k^n has more than `cap` projective points.
std::vector<Subspace> all_submodules(const Representation& r, std::uint64_t cap);

struct Commutant {
  std::size_t dim = 0;
  std::vector<Matrix> basis;
};
Commutant commutant(const Representation& r);

/// Eigenspaces of a random commutant element when the commutant is commutative
/// and that element splits with one eigenvalue per commutant dimension.
/// Empty optional means Unknown.
std::optional<std::vector<Subspace>> isotypic_decomposition(const Representation& r, std::uint64_t seed = 0);

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

Tri is_m_dense(const Representation& r, std::size_t m, bool absolute, const Caps& caps = Caps::from_env());

enum class Verdict { Thick, NotThick, Unknown };
std::string to_string(Verdict v);

/// Invariant W1 in the m-th power and W2 = perp(W1), each with a decomposable witness.
struct InvariantPairCertificate {
  std::size_t m = 0;
  Subspace w1, w2;
  WedgeVector witness1, witness2;
  std::vector<Vector> vectors1, vectors2;
};

/// V1 of dim m and V2 of dim n-m with g V1 + V2 != V for every g.
struct SubspacePairCertificate {
  Subspace v1, v2;
};

struct ThicknessReport {
  std::size_t m = 0;
  Verdict verdict = Verdict::Unknown;
  std::string method;
  /// Verdicts concern the concrete field, never its algebraic closure.
  std::string field_scope = "OverK";
  RepMode mode = RepMode::Group;
  std::optional<InvariantPairCertificate> invariant_pair;
  std::optional<SubspacePairCertificate> subspace_pair;
  std::vector<std::string> log;
};

/// Exact decision over a finite field from the definition: every m-subspace
/// can be moved by the group to be complementary to every (n-m)-subspace.
ThicknessReport is_m_thick_definition(const Representation& r, std::size_t m, const Caps& caps = Caps::from_env());

/// Decision through invariant realizable pairs (W1, perp W1) in the exterior powers.
ThicknessReport is_m_thick_criterion(const Representation& r, std::size_t m, const Caps& caps = Caps::from_env(),
                                     std::uint64_t seed = 0);

struct RecheckResult {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Independent re-verification of a NotThick certificate using only exterior
/// and linear-algebra operations.
RecheckResult recheck_certificate(const Representation& r, const ThicknessReport& report);

struct RNumberBounds {
  std::uint64_t lower = 1;
  std::uint64_t upper = 1;
  std::optional<std::uint64_t> exact;
};
RNumberBounds r_number_bounds(std::uint64_t n, std::uint64_t m);

/// All group elements by breadth-first products of generators; throws CapExceeded.
std::vector<Matrix> group_closure(const Representation& r, std::uint64_t cap);

/// Number of m-dimensional subspaces of F_q^n, saturating.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t m);

/// Every m-dimensional subspace of F_q^n in canonical order.
std::vector<Subspace> grassmannian(const FieldSpec& f, std::size_t n, std::size_t m);

}  // namespace thickrep
