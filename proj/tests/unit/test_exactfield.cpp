#include <numeric>

#include "doctest.h"
#include "thickrep/poly.hpp"
#include "thickrep/random.hpp"

using namespace thickrep;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(const char* s) { return Scalar::parse(Q, s); }

Poly product_of(const std::vector<std::pair<Poly, int>>& factors, const FieldSpec& f) {
  Poly acc(f, {1});
  for (const auto& [g, e] : factors)
    for (int i = 0; i < e; ++i) acc = acc * g;
  return acc;
}

// Oracle: a monic polynomial of degree d is irreducible iff no monic
// polynomial of degree 1..d/2 divides it (enumerated exhaustively).
bool irreducible_by_trial_division(const Poly& f) {
  const FieldSpec& fs = f.field();
  const std::uint64_t p = fs.characteristic();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<Scalar> cs;
      std::uint64_t x = c;
      for (int i = 0; i < d; ++i) {
        cs.push_back(Scalar::from_code(fs, x % p));
        x /= p;
      }
      cs.push_back(Scalar::one(fs));
      if ((f % Poly(fs, cs)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
  CHECK((q("2/3") + q("1/6")) == q("5/6"));
  const FieldSpec f5 = FieldSpec::prime(5), f7 = FieldSpec::prime(7);
  CHECK((Scalar(f5, 3) * Scalar(f5, 4)) == Scalar(f5, 2));
  CHECK((Scalar(f7, 1) / Scalar(f7, 3)) == Scalar(f7, 5));
  CHECK(q("-4/6").to_string() == "-2/3");
  CHECK(Scalar(f7, -1).to_string() == "6");
}

TEST_CASE("scalar errors") {
  const FieldSpec f5 = FieldSpec::prime(5);
  try {
    (void)(Scalar(f5, 1) + q("1"));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  try {
    (void)(Scalar(f5, 1) / Scalar(f5, 5));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
  CHECK_THROWS_AS(FieldSpec::prime(6), Error);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/x"), Error);
}

TEST_CASE("division round trip") {
  Rng rng(7);
  for (const FieldSpec& f : {Q, FieldSpec::prime(2), FieldSpec::prime(13), FieldSpec::extension(3, 2)}) {
    for (int i = 0; i < 200; ++i) {
      Scalar a = f.is_finite() ? Scalar::from_code(f, draw_below(rng, f.order())) : Scalar(f, draw_between(rng, -20, 20));
      Scalar b = f.is_finite() ? Scalar::from_code(f, draw_below(rng, f.order())) : Scalar(f, draw_between(rng, -20, 20));
      if (f.kind() == FieldKind::Rationals) a = a / Scalar(f, draw_between(rng, 1, 9));
      if (b.is_zero()) continue;
      CHECK(((a / b) * b) == a);
    }
  }
}

TEST_CASE("extension field embeds the prime field") {
  const FieldSpec f9 = FieldSpec::extension(3, 2);
  CHECK(f9.order() == 9);
  for (long long a = 0; a < 3; ++a)
    for (long long b = 0; b < 3; ++b) {
      CHECK((Scalar(f9, a) + Scalar(f9, b)).code() == static_cast<std::uint64_t>((a + b) % 3));
      CHECK((Scalar(f9, a) * Scalar(f9, b)).code() == static_cast<std::uint64_t>((a * b) % 3));
    }
  // The multiplicative group is cyclic of order 8.
  int generators = 0;
  for (const Scalar& x : field_elements(f9)) {
    if (x.is_zero()) continue;
    bool gen = true;
    for (int e : {1, 2, 4})
      if (x.pow(e).is_one()) gen = false;
    generators += gen;
  }
  CHECK(generators == 4);
}

TEST_CASE("poly_factor_fp examples") {
  const FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3), f5 = FieldSpec::prime(5);
  auto a = poly_factor_fp(Poly(f2, {1, 1, 1}));
  REQUIRE(a.size() == 1);
  CHECK(a[0].first == Poly(f2, {1, 1, 1}));
  CHECK(a[0].second == 1);

  auto b = poly_factor_fp(Poly(f5, {-1, 0, 1}));
  REQUIRE(b.size() == 2);
  CHECK(b[0].first == Poly(f5, {1, 1}));
  CHECK(b[1].first == Poly(f5, {4, 1}));
  CHECK(product_of(b, f5) == Poly(f5, {-1, 0, 1}));

  auto c = poly_factor_fp(Poly(f3, {0, 0, 0, 1}));
  REQUIRE(c.size() == 1);
  CHECK(c[0].first == Poly(f3, {0, 1}));
  CHECK(c[0].second == 3);

  CHECK_THROWS_AS(poly_factor_fp(Poly(f5, {1, 2})), Error);
  CHECK_THROWS_AS(poly_factor_fp(Poly(Q, {1, 1})), Error);
}

TEST_CASE("poly_factor_fp against trial division on random inputs") {
  Rng rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (int trial = 0; trial < 25; ++trial) {
      const int deg = static_cast<int>(draw_between(rng, 1, p == 31 ? 8 : 12));
      std::vector<Scalar> cs;
      for (int i = 0; i < deg; ++i) cs.push_back(Scalar::from_code(f, draw_below(rng, p)));
      cs.push_back(Scalar::one(f));
      // Occasionally square part of it to exercise repeated factors.
      Poly g(f, cs);
      if (trial % 4 == 0 && deg <= 6) g = g * g;
      const auto factors = poly_factor_fp(g);
      CHECK(product_of(factors, f) == g);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        CHECK(factors[i].first.is_monic());
        if (factors[i].first.degree() <= 8) CHECK(irreducible_by_trial_division(factors[i].first));
        if (i > 0) CHECK(factors[i - 1].first.degree() <= factors[i].first.degree());
      }
    }
  }
}

TEST_CASE("characteristic p squarefree decomposition") {
  const FieldSpec f2 = FieldSpec::prime(2);
  // (x^2+x+1)^2 (x+1)^4 x over F_2 has vanishing-derivative parts.
  const Poly a(f2, {1, 1, 1}), b(f2, {1, 1}), x(f2, {0, 1});
  const Poly g = a * a * b * b * b * b * x;
  const auto factors = poly_factor_fp(g);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0].first == x);
  CHECK(factors[0].second == 1);
  CHECK(factors[1].first == b);
  CHECK(factors[1].second == 4);
  CHECK(factors[2].first == a);
  CHECK(factors[2].second == 2);
}

TEST_CASE("nth_roots examples and counts") {
  const FieldSpec f5 = FieldSpec::prime(5);
  auto r = nth_roots(Scalar(f5, 4), 2);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Scalar(f5, 2));
  CHECK(r[1] == Scalar(f5, 3));
  CHECK(nth_roots(Scalar(f5, 2), 2).empty());
  auto s = nth_roots(q("8"), 3);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == q("2"));
  auto t = nth_roots(q("4/9"), 2);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == q("-2/3"));
  CHECK(nth_roots(q("-8"), 3).at(0) == q("-2"));
  CHECK_THROWS_AS(nth_roots(Scalar(f5, 0), 2), Error);

  for (std::uint32_t p : {5u, 7u, 13u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (std::uint64_t n = 1; n <= 6; ++n)
      for (std::uint32_t a = 1; a < p; ++a) {
        const auto roots = nth_roots(Scalar(f, a), n);
        for (const Scalar& x : roots) CHECK(x.pow(n) == Scalar(f, a));
        if (!roots.empty()) CHECK(roots.size() == std::gcd<std::uint64_t>(n, p - 1));
      }
  }
}

TEST_CASE("poly_roots") {
  const FieldSpec f13 = FieldSpec::prime(13);
  auto r = poly_roots(Poly(f13, {-4, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].first == Scalar(f13, 2));
  CHECK(r[1].first == Scalar(f13, 11));
  // (x - 1/2)^2 (x + 3) over Q
  const Poly g = Poly::x_minus(q("1/2")) * Poly::x_minus(q("1/2")) * Poly::x_minus(q("-3")) * Poly(Q, {1, 0, 1});
  auto s = poly_roots(g);
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == q("-3"));
  CHECK(s[0].second == 1);
  CHECK(s[1].first == q("1/2"));
  CHECK(s[1].second == 2);
  auto z = poly_roots(Poly(Q, {0, 0, -2, 1}));
  REQUIRE(z.size() == 2);
  CHECK(z[0].first == q("0"));
  CHECK(z[0].second == 2);
}
