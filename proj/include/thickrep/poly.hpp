#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "thickrep/field.hpp"

namespace thickrep {

/// Univariate polynomial over a FieldSpec, coefficients low degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  explicit Poly(FieldSpec f) : field_(f) {}
  Poly(FieldSpec f, std::vector<Scalar> coeffs);
  Poly(FieldSpec f, std::initializer_list<long long> coeffs);

  static Poly monomial(const Scalar& c, std::size_t degree);
  static Poly x_minus(const Scalar& root);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar leading() const;
  Scalar coeff(std::size_t i) const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& c) const;

  /// Quotient and remainder; throws DivisionByZero for b = 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  bool operator==(const Poly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

/// Factorization over a prime field into monic irreducibles with multiplicity,
/// sorted by (degree, coefficient list low-first in canonical order).
std::vector<std::pair<Poly, int>> poly_factor_fp(const Poly& f);

/// Distinct roots in the base field with multiplicities, canonical order.
/// Over Q only rational roots are found.
std::vector<std::pair<Scalar, int>> poly_roots(const Poly& f);

}  // namespace thickrep
