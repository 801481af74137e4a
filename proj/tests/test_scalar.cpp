#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/linalg.hpp"
#include "orbitlab/scalar.hpp"

using orbitlab::DomainError;
using orbitlab::ParseError;
using orbitlab::Rational;
using orbitlab::Scalar;

TEST_CASE("defining relations") {
  const Scalar s2 = Scalar::sqrt2();
  const Scalar s5 = Scalar::sqrt5();
  const Scalar s10 = Scalar::sqrt10();
  const Scalar i = Scalar::i();
  CHECK(s2 * s2 == Scalar(2));
  CHECK(i * i == Scalar(-1));
  CHECK(s2 * s5 == s10);
  CHECK(s2 * s10 == Scalar(2) * s5);
  CHECK(s5 * s10 == Scalar(5) * s2);
  CHECK(s10 * s10 == Scalar(10));
}

TEST_CASE("inverse") {
  CHECK(Scalar::sqrt2().inverse() == Scalar::radical(Scalar::kSqrt2, Rational(1, 2)));
  CHECK(Scalar::i().inverse() == -Scalar::i());
  CHECK((Scalar(1) + Scalar::sqrt2()).inverse() == Scalar(-1) + Scalar::sqrt2());
  CHECK_THROWS_AS(Scalar().inverse(), DomainError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(), DomainError);
}

TEST_CASE("conjugation and predicates") {
  const Scalar a = Scalar(1) + Scalar::i() * Scalar::sqrt2();
  CHECK(a.conj() == Scalar(1) - Scalar::i() * Scalar::sqrt2());
  const Scalar r = Scalar::radical(Scalar::kSqrt10, Rational(1, 4));
  CHECK(r.is_real());
  CHECK_FALSE(r.is_rational());
  CHECK(Scalar(Rational(3, 7)).is_rational());
  CHECK(Scalar::i().is_imaginary());
  CHECK(a == a.real_part() + Scalar::i() * a.imag_part());
  CHECK(r.as_float().real() == doctest::Approx(0.790569415));
}

TEST_CASE("literal grammar") {
  CHECK(Scalar::parse("1/2*sqrt10") == Scalar::radical(Scalar::kSqrt10, Rational(1, 2)));
  CHECK(Scalar::parse("-3 + i*2/4*sqrt5 - 1*sqrt2") ==
        Scalar(-3) + Scalar::i() * Scalar::radical(Scalar::kSqrt5, Rational(1, 2)) - Scalar::sqrt2());
  CHECK(Scalar::parse(" 0 ") == Scalar());
  CHECK(Scalar::parse("2/4").to_string() == "1/2");
  CHECK(Scalar().to_string() == "0");
  CHECK(Scalar::i().to_string() == "i*1");
  CHECK((-Scalar::i()).to_string() == "i*-1");
  CHECK(Scalar::parse("i*-3/4") == Scalar::parse("-i*3/4"));
  CHECK(Scalar::parse("- i*2 + 1") == Scalar(1) - Scalar(2) * Scalar::i());

  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar::parse("sqrt2"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1*sqrt3"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1 +"), ParseError);
  try {
    Scalar::parse("1 + 2x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
}

TEST_CASE("sqrt_in_field") {
  CHECK(*orbitlab::sqrt_in_field(Rational(5, 8)) == Scalar::radical(Scalar::kSqrt10, Rational(1, 4)));
  CHECK(*orbitlab::sqrt_in_field(Rational(1, 8)) == Scalar::radical(Scalar::kSqrt2, Rational(1, 4)));
  CHECK(*orbitlab::sqrt_in_field(Rational(1, 4)) == Scalar(Rational(1, 2)));
  CHECK(*orbitlab::sqrt_in_field(Rational(-2)) == Scalar::i() * Scalar::sqrt2());
  CHECK_FALSE(orbitlab::sqrt_in_field(Rational(3)).has_value());
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = oracle::random_scalar(rng);
    const Scalar b = oracle::random_scalar(rng);
    const Scalar c = oracle::random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
    if (!b.is_zero()) CHECK((a * b) * b.inverse() == a);
    if (!a.is_zero()) {
      const Scalar norm = a * a.conj();
      CHECK(norm.is_real());
      CHECK(norm.as_float().real() > -1e-12);
      CHECK(norm.as_float().real() > 0.0);
    }
  }
}

TEST_CASE("literal round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar a = oracle::random_scalar(rng);
    CHECK(Scalar::parse(a.to_string()) == a);
  }
}

TEST_CASE("nullspace and rank") {
  orbitlab::ScalarMatrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = Scalar::sqrt2();
  m(1, 2) = Scalar::i();
  const auto kernel = orbitlab::nullspace(m);
  REQUIRE(kernel.size() == 1);
  CHECK(orbitlab::rank(m) == 2);
  const auto image = m * kernel[0];
  for (const auto& s : image) CHECK(s.is_zero());
  CHECK(kernel[0][1] == Scalar(1));
  CHECK(kernel[0][0] == -Scalar::sqrt2());
}
