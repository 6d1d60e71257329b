#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thickrep/linalg.hpp"

namespace thickrep {

// m-subsets of {0..n-1} are indexed in colex order: rank(S) = sum_i C(s_i, i+1)
// for s_0 < s_1 < ... . The rank does not depend on n. Public JSON uses 1-based
// indices; everything in C++ is 0-based.
using IndexSet = std::vector<std::size_t>;

std::size_t colex_rank(const IndexSet& s);
IndexSet colex_unrank(std::size_t rank, std::size_t m);
/// All m-subsets of {0..n-1} in colex order.
std::vector<IndexSet> colex_subsets(std::size_t n, std::size_t m);

/// Element of the m-th exterior power of k^n in the colex basis.
class WedgeVector {
 public:
  WedgeVector() = default;
  WedgeVector(FieldSpec f, std::size_t n, std::size_t m);
  WedgeVector(FieldSpec f, std::size_t n, std::size_t m, Vector coords);

  /// The basis vector e_S.
  static WedgeVector basis(const FieldSpec& f, std::size_t n, const IndexSet& s);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  const Vector& coords() const noexcept { return coords_; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const { return is_zero_vector(coords_); }

  WedgeVector operator+(const WedgeVector& o) const;
  WedgeVector scaled(const Scalar& c) const;
  bool operator==(const WedgeVector& o) const {
    return n_ == o.n_ && m_ == o.m_ && coords_ == o.coords_;
  }

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  Vector coords_;
};

/// v_1 ^ ... ^ v_m; coordinates are the maximal minors of [v_1 ... v_m].
/// The empty list gives the unit of the 0-th power.
WedgeVector wedge_of_vectors(const FieldSpec& f, std::size_t n, const std::vector<Vector>& vs);

/// Matrix of the m-th exterior power of a on the colex basis; entry (S, T) is
/// the minor with rows S and columns T.
Matrix compound(const Matrix& a, std::size_t m);

/// Matrix of the derivation x -> sum_i 1 ^ .. ^ X ^ .. ^ 1 on the m-th power.
Matrix lie_derivation(const Matrix& x, std::size_t m);

/// Sign of the permutation sorting the concatenation (S, T); 0 if they meet.
int merge_sign(const IndexSet& s, const IndexSet& t);

WedgeVector wedge_product(const WedgeVector& x, const WedgeVector& y);

/// P with x^y = (x^T P y) e_{0..n-1} for x in the m-th and y in the (n-m)-th power.
Matrix pairing_matrix(const FieldSpec& f, std::size_t n, std::size_t m);

/// Annihilator of w (inside the m-th power) in the (n-m)-th power under the wedge pairing.
Subspace perp(const Subspace& w, std::size_t n, std::size_t m);

struct Decomposition {
  bool decomposable = false;
  /// m vectors whose wedge equals the input exactly (empty when not decomposable).
  std::vector<Vector> witness;
};

Decomposition is_decomposable(const WedgeVector& v);

enum class Realizability { Realizable, NotRealizable, Unknown };
std::string to_string(Realizability r);

struct RealizabilityBudget {
  std::uint64_t max_points = 1'000'000;
  std::uint64_t seed = 0;
  /// Over Q: coefficient range for small combinations and random draws.
  long long coeff_bound = 2;
  std::uint64_t random_trials = 2000;
};

struct RealizabilityResult {
  Realizability status = Realizability::Unknown;
  WedgeVector witness;                // decomposable vector found in the subspace
  std::vector<Vector> witness_vectors;  // its factors
  std::uint64_t points_examined = 0;
  bool exhaustive = false;
};

/// Does w (inside the m-th power of k^n) contain a nonzero decomposable vector?
/// Exact over finite fields within budget; over Q a search that returns
/// NotRealizable only when w has dimension at most 1.
RealizabilityResult realizable_search(const Subspace& w, std::size_t n, std::size_t m,
                                      const RealizabilityBudget& budget = {});

/// Number of projective points of a d-dimensional space over F_q, saturating.
std::uint64_t projective_point_count(std::uint64_t q, std::size_t d);

}  // namespace thickrep
