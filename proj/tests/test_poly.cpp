#include <doctest.h>

#include <random>

#include "frobrr/poly.hpp"
#include "random_poly.hpp"

using frobrr::CyclicBindingError;
using frobrr::Monomial;
using frobrr::Poly;
using frobrr::Rational;

namespace {
const Poly x = Poly::symbol("x");
const Poly y = Poly::symbol("y");
const Poly w = Poly::symbol("w");
}  // namespace

TEST_CASE("rational is kept in lowest terms") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(1, 12) * Rational(16) == Rational(4, 3));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS((void)Rational(0).inverse(), std::domain_error);
}

TEST_CASE("add") {
  CHECK((x + 1) + (x - 1) == 2 * x);
  const Poly p = x * x + 3 * y;
  CHECK(p + Poly() == p);
  CHECK(Rational(1, 2) * x + Rational(1, 2) * x == x);
  CHECK(frobrr::add(x, -x).is_zero());
}

TEST_CASE("mul") {
  CHECK((x + y) * (x - y) == x * x - y * y);
  const Poly q = 3 * x * y - 7;
  CHECK(q * Poly(1) == q);
  // Direct convolution of (1, 1, 1) with itself: (1, 2, 3, 2, 1).
  const Poly t = Poly(1) + w + w * w;
  const Poly expected = Poly(1) + 2 * w + 3 * w.pow(2) + 2 * w.pow(3) + w.pow(4);
  CHECK(frobrr::mul(t, t) == expected);
}

TEST_CASE("substitute") {
  const Poly lam = Poly::symbol("lam");
  const Poly c = Poly::symbol("c");
  CHECK((16 * lam).substitute({{"lam", Rational(1, 12) * c}}) == Rational(4, 3) * c);

  const Poly p = x * x + y;
  CHECK(p.substitute({}) == p);

  const Poly sym_p = Poly::symbol("p");
  CHECK((3 * sym_p * sym_p - 3 * sym_p + 1).substitute({{"p", Poly(2)}}) == Poly(7));

  SUBCASE("simultaneous") {
    CHECK((x - y).substitute({{"x", Poly::symbol("u")}, {"y", Poly::symbol("v")}}).to_string() ==
          "u - v");
  }
  SUBCASE("cyclic bindings rejected") {
    CHECK_THROWS_AS((void)x.substitute({{"x", x + 1}}), CyclicBindingError);
    CHECK_THROWS_AS((void)x.substitute({{"x", y}, {"y", x}}), CyclicBindingError);
  }
}

TEST_CASE("is_zero") {
  CHECK(frobrr::is_zero(x - x));
  CHECK(frobrr::is_zero(x * y - y * x));
  CHECK_FALSE(frobrr::is_zero(x * x - x));
}

TEST_CASE("canonical rendering") {
  const Poly LL = Poly::symbol("LL");
  const Poly Lw = Poly::symbol("Lw");
  const Poly lam = Poly::symbol("lam");
  CHECK((16 * lam - 8 * Lw + 8 * LL).to_string() == "8*LL - 8*Lw + 16*lam");
  CHECK(Poly().to_string() == "0");
  CHECK((-x).to_string() == "-x");
  CHECK((Rational(-4, 3) * x * x * y + 1).to_string() == "-4/3*x^2*y + 1");
  // Higher total degree first; ties lexicographic with earlier names first.
  CHECK((y + x * y + x * x + x + y * y).to_string() == "x^2 + x*y + y^2 + x + y");
}

TEST_CASE("monomial ordering is a strict weak order") {
  frobrr::GradedLexGreater gt;
  const Monomial a{{"x", 2}};
  const Monomial b{{"x", 1}, {"y", 1}};
  const Monomial c{{"y", 2}};
  CHECK(gt(a, b));
  CHECK(gt(b, c));
  CHECK(gt(a, c));
  CHECK_FALSE(gt(a, a));
  CHECK(gt(Monomial("x"), Monomial{}));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = frobrr::testing::random_poly(rng);
    const Poly b = frobrr::testing::random_poly(rng);
    const Poly c = frobrr::testing::random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(frobrr::testing::has_no_zero_coefficient(a * b - b * c + a));
    CHECK((a * b).to_string() == (b * a).to_string());
  }
}

TEST_CASE("substitute distributes over products") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = frobrr::testing::random_poly(rng);
    const Poly b = frobrr::testing::random_poly(rng);
    const Poly::Bindings m{{"x", frobrr::testing::random_poly(rng, 3, 2).substitute(
                                     {{"x", Poly(2)}, {"a", Poly(-1)}, {"y", Poly::symbol("z")}})},
                           {"a", Poly(Rational(-1, 3))}};
    CHECK((a * b).substitute(m) == a.substitute(m) * b.substitute(m));
    CHECK((a + b).substitute(m) == a.substitute(m) + b.substitute(m));
  }
}

TEST_CASE("pow agrees with repeated multiplication") {
  const Poly p = x - 2 * y + Rational(1, 2);
  Poly acc(1);
  for (std::uint32_t e = 0; e <= 6; ++e) {
    CHECK(p.pow(e) == acc);
    acc *= p;
  }
}
