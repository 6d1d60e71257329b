#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace thickrep {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

std::string to_string(const Partition& p);
/// Throws ParseError; accepts "3,2", "(3,2)" or "3 2".
Partition parse_partition(const std::string& text);

/// All partitions of d, largest first in reverse lexicographic order:
/// (d), (d-1,1), ..., (1,...,1). This is the class order of every ClassFunction.
std::vector<Partition> partitions(int d);
/// Number of permutations of cycle type mu.
std::uint64_t class_size(const Partition& mu);
/// Cycle type of the square of a permutation of type mu.
Partition square_cycle_type(const Partition& mu);
std::uint64_t hook_length_dim(const Partition& lambda);

struct ClassFunction {
  int d = 0;
  std::vector<mpq_class> values;  // indexed like partitions(d)

  mpq_class at(const Partition& mu) const;
  /// Value at the identity.
  mpq_class degree() const;
  bool operator==(const ClassFunction& o) const { return d == o.d && values == o.values; }
};

/// Largest supported degree for symmetric-group characters.
inline constexpr int kMaxSymmetricDegree = 8;

/// Irreducible character of S_d by the Murnaghan-Nakayama rule; throws ScaleExceeded for d > 8.
ClassFunction sym_char(const Partition& lambda);
/// (chi(g)^2 - chi(g^2)) / 2.
ClassFunction exterior_square_char(const ClassFunction& chi);
mpq_class inner_product(const ClassFunction& a, const ClassFunction& b);
/// Nonzero multiplicities in partitions(d) order; throws NonIntegralMultiplicity.
std::vector<std::pair<Partition, long long>> decompose(const ClassFunction& f);

/// Exact integer Laurent polynomial in two variables, keyed by (deg x, deg y).
using Laurent2 = std::map<std::pair<int, int>, long long>;

/// Character of the GL2 irreducible with highest weight (p, q), p >= q.
Laurent2 gl2_char(int p, int q);
/// Highest weights (2a+2b-2k+1, 2b+2k-1), 1 <= k <= (a+1)/2, of the expected summands
/// of the exterior square of V_{(a+b, b)}.
std::vector<std::pair<int, int>> gl2_wedge_summands(int a, int b);
/// Exterior-square character of V_{(a+b,b)} equals the sum of the given summands.
bool gl2_wedge_matches(int a, int b, const std::vector<std::pair<int, int>>& summands);
bool gl2_wedge_identity(int a, int b);

/// Coefficients of prod_{i=1}^{n} (1 + x^i); throws BadN for n < 1.
std::vector<std::uint64_t> distinct_parts_coeffs(int n);

enum class PlethysmKind { sym2, wedge2 };
std::string to_string(PlethysmKind kind);

/// Symmetric polynomial in n variables keyed by exponent vectors.
using SymPoly = std::map<std::vector<int>, long long>;
SymPoly schur_polynomial(const Partition& lambda, int n);
/// Schur expansion by peeling leading monomials; throws PreconditionFailed when
/// a negative coefficient appears.
std::vector<std::pair<Partition, long long>> schur_expand(SymPoly f, int n);

/// Number of irreducible GL_n components (with multiplicity) of the m-th exterior
/// power of S^2 V or of the exterior square of V. Throws ScaleExceeded beyond n <= 4, m <= 6.
std::uint64_t plethysm_component_count(PlethysmKind kind, int n, int m);

}  // namespace thickrep
