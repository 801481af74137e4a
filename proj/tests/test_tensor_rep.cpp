#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/named.hpp"
#include "orbitlab/tensor_rep.hpp"

using namespace orbitlab;

namespace {

RepVector mono(const RepSpace& s, std::vector<int> e1, const Scalar& c = 1) {
  return RepVector::monomial(s, Monomial{std::move(e1)}, c);
}

// e1^a e2^b (x) e1^c e2^d in S^2 (x) C^2 by e1-exponents (a, c).
RepVector ex(int a, int c, const Scalar& coef = 1) { return mono(named::example_space(), {a, c}, coef); }

LieAlgebraElement el(const char* name) { return *named::lie_element(name); }

std::vector<RepSpace> small_spaces() {
  std::vector<RepSpace> out;
  for (int k1 = 0; k1 <= 4; ++k1) {
    for (int k2 = 0; k2 <= 4; ++k2) out.emplace_back(std::vector<int>{k1, k2});
  }
  return out;
}

}  // namespace

TEST_CASE("space bookkeeping") {
  const RepSpace s({2, 1});
  CHECK(s.dimension() == 6);
  const auto ms = s.monomials();
  REQUIRE(ms.size() == 6);
  CHECK(ms.front() == Monomial{{0, 0}});
  CHECK(ms.back() == Monomial{{2, 1}});
  for (std::size_t k = 0; k < ms.size(); ++k) CHECK(s.index_of(ms[k]) == k);
  CHECK(s.monomial_norm_squared(Monomial{{1, 0}}) == Rational(1, 2));
  CHECK_THROWS_AS(RepSpace(std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(RepSpace({-1}), DomainError);
  CHECK_THROWS_AS(mono(s, {3, 0}), DomainError);
}

TEST_CASE("Killing fields at the example point") {
  const RepVector p = named::paper_point();
  const Scalar half = Scalar(Rational(1, 2));
  const Scalar quarter = Scalar(Rational(1, 4));
  const Scalar i = Scalar::i();

  CHECK(lie_action(named::H(), p).is_zero());
  // (1/(2 sqrt2)) (-sqrt2 e1e2 (x) e1 + sqrt2 e1e2 (x) e2)
  CHECK(lie_action(el("X1"), p) == ex(1, 1, -half) + ex(1, 0, half));
  CHECK(lie_action(el("Y1"), p) == ex(1, 1, i * half) + ex(1, 0, i * half));
  // The second block mixes e1 and e2 on the C^2 factor.
  CHECK(lie_action(el("X2"), p) == ex(2, 0, -quarter) + ex(0, 1, quarter));
  CHECK(lie_action(el("Y2"), p) == ex(2, 0, i * quarter) + ex(0, 1, i * quarter));
  const Scalar v_coef = i * Scalar::radical(Scalar::kSqrt5, Rational(1, 4));
  CHECK(lie_action(el("V"), p) == ex(2, 1, v_coef) - ex(0, 0, v_coef));
  CHECK(lie_action(LieAlgebraElement::zero(2), p).is_zero());
}

TEST_CASE("group action on the example point") {
  const RepVector p = named::paper_point();
  CHECK(group_action(named::sigma(), p) == Scalar::i() * p);
  CHECK(oracle::group_action(named::sigma(), p) == Scalar::i() * p);
  CHECK(group_action(GroupElement::identity(2), p) == p);
  // tau = (id, -id) acts on S^k (x) S^m by (-1)^m.
  for (const auto& space : small_spaces()) {
    std::mt19937 rng(space.degrees()[0] * 10 + space.degrees()[1]);
    const RepVector w = oracle::random_vector(rng, space);
    const int sign = space.degrees()[1] % 2 == 0 ? 1 : -1;
    CHECK(group_action(named::tau(), w) == Scalar(sign) * w);
  }
  CHECK(power(named::sigma(), 2) == GroupElement({Mat2{-1, 0, 0, -1}, Mat2{-1, 0, 0, -1}}));
  CHECK(power(named::sigma(), 4) == GroupElement::identity(2));
}

TEST_CASE("inner product") {
  const RepVector p = named::paper_point();
  CHECK(inner_product(p, p) == Scalar(1));
  const RepSpace s2({2});
  CHECK(inner_product(mono(s2, {1}), mono(s2, {1})) == Scalar(Rational(1, 2)));
  // sqrt2 e1 e2 is a unit vector
  CHECK(inner_product(mono(s2, {1}, Scalar::sqrt2()), mono(s2, {1}, Scalar::sqrt2())) == Scalar(1));
  CHECK(inner_product(lie_action(el("X1"), p), p).is_zero());
  // conjugate-linear in the second slot
  CHECK(inner_product(p, Scalar::i() * p) == -Scalar::i());
  CHECK_THROWS_AS(inner_product(p, mono(s2, {0})), DomainError);
}

TEST_CASE("Killing form") {
  CHECK(killing_form(el("X1"), el("X1")) == Scalar(-1));
  CHECK(killing_inner(el("X1"), el("X1")) == Scalar(1));
  CHECK(killing_inner(el("V"), el("V")) == Scalar(1));
  CHECK(killing_form(el("X1"), el("Y2")).is_zero());
  CHECK(killing_inner(named::H(), named::H()) == Scalar(40));

  const LieAlgebraElement h_unit = Scalar::radical(Scalar::kSqrt10, Rational(1, 20)) * named::H();
  const std::vector<LieAlgebraElement> basis = {el("X1"), el("X2"), el("Y1"), el("Y2"), el("V"), h_unit};
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      CHECK(killing_inner(basis[a], basis[b]) == Scalar(a == b ? 1 : 0));
    }
  }
}

TEST_CASE("validation of group and algebra elements") {
  CHECK_THROWS_AS(LieAlgebraElement({Mat2{1, 0, 0, -1}}), DomainError);               // Hermitian
  CHECK_THROWS_AS(LieAlgebraElement({Mat2{Scalar::i(), 0, 0, Scalar::i()}}), DomainError);  // not traceless
  CHECK_THROWS_AS(GroupElement({Mat2{2, 0, 0, Scalar(Rational(1, 2))}}), DomainError);  // not unitary
  CHECK_THROWS_AS(GroupElement({Mat2{-1, 0, 0, 1}}), DomainError);                       // det -1
  CHECK_THROWS_AS(Scalar::i() * named::H(), DomainError);
  const RepVector v = mono(RepSpace({2}), {1});
  CHECK_THROWS_AS(lie_action(named::H(), v), DomainError);
  CHECK_THROWS_AS(group_action(named::sigma(), v), DomainError);
  CHECK_THROWS_AS(killing_form(named::H(), su2_basis(1)[0]), DomainError);
}

TEST_CASE("actions agree with the full tensor power model") {
  std::mt19937 rng(11);
  const std::vector<RepSpace> spaces = {RepSpace({2, 1}), RepSpace({3, 2}), RepSpace({1, 4}), RepSpace({4})};
  for (const auto& space : spaces) {
    const std::size_t r = space.factors();
    for (int trial = 0; trial < 4; ++trial) {
      const RepVector u = oracle::random_vector(rng, space);
      const RepVector w = oracle::random_vector(rng, space);
      const LieAlgebraElement x = oracle::random_element(rng, r);
      CHECK(lie_action(x, u) == oracle::lie_action(x, u));
      CHECK(inner_product(u, w) == oracle::inner_product(u, w));
      if (r == 2) {
        CHECK(group_action(named::sigma(), u) == oracle::group_action(named::sigma(), u));
      }
    }
  }
  // A non-monomial unitary: (1/sqrt2) [[1, -1], [1, 1]] on each factor.
  const Scalar s = Scalar::radical(Scalar::kSqrt2, Rational(1, 2));
  const GroupElement rot({Mat2{s, -s, s, s}, Mat2{s * Scalar::i(), s, -s, -s * Scalar::i()}});
  const RepVector u = oracle::random_vector(rng, RepSpace({3, 2}));
  CHECK(group_action(rot, u) == oracle::group_action(rot, u));
}

TEST_CASE("Lie homomorphism and anti-Hermiticity sweep") {
  const auto gens = su2_basis(2);
  for (const auto& space : small_spaces()) {
    const auto ms = space.monomials();
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        const LieAlgebraElement br = bracket(gens[a], gens[b]);
        for (const auto& m : ms) {
          const RepVector v = RepVector::monomial(space, m);
          const RepVector lhs = lie_action(br, v);
          const RepVector rhs =
              lie_action(gens[a], lie_action(gens[b], v)) - lie_action(gens[b], lie_action(gens[a], v));
          REQUIRE(lhs == rhs);
        }
      }
      for (const auto& mu : ms) {
        const RepVector u = RepVector::monomial(space, mu);
        const RepVector xu = lie_action(gens[a], u);
        for (const auto& mv : ms) {
          const RepVector v = RepVector::monomial(space, mv);
          REQUIRE((inner_product(xu, v) + inner_product(u, lie_action(gens[a], v))).is_zero());
        }
      }
    }
  }
}

TEST_CASE("unitarity and homomorphism of the group action") {
  std::mt19937 rng(5);
  const GroupElement sigma = named::sigma();
  const GroupElement tau = named::tau();
  const std::vector<GroupElement> elements = {sigma, tau, sigma * sigma};
  for (const auto& space : {RepSpace({2, 1}), RepSpace({4, 2}), RepSpace({3, 3})}) {
    const RepVector u = oracle::random_vector(rng, space);
    const RepVector v = oracle::random_vector(rng, space);
    for (const auto& g : elements) {
      CHECK(inner_product(group_action(g, u), group_action(g, v)) == inner_product(u, v));
    }
    for (const auto& g : {sigma, tau}) {
      for (const auto& h : {sigma, tau}) {
        CHECK(group_action(g * h, v) == group_action(g, group_action(h, v)));
      }
    }
  }
}

TEST_CASE("adjoint action is compatible with the representation") {
  std::mt19937 rng(9);
  const RepSpace space({2, 2});
  const RepVector v = oracle::random_vector(rng, space);
  const GroupElement g = named::sigma();
  for (const auto& x : su2_basis(2)) {
    // rho(g) d rho(X) rho(g)^-1 = d rho(Ad(g) X)
    CHECK(group_action(g, lie_action(x, group_action(g.inverse(), v))) == lie_action(adjoint(g, x), v));
  }
}

TEST_CASE("operators") {
  const RepSpace space({2, 2});
  const RepOperator h = lie_operator(named::H(), space);
  const RepOperator s = group_operator(named::sigma(), space);
  const RepVector v = mono(space, {1, 1});
  CHECK(h.apply(v).is_zero());
  CHECK((s * s).apply(v) == group_action(power(named::sigma(), 2), v));
  CHECK((h + h).apply(mono(space, {2, 0})) == Scalar(2) * h.apply(mono(space, {2, 0})));
  const ScalarMatrix m = s.matrix();
  CHECK(m.rows() == 9);
  CHECK(RepVector::from_dense(space, m * v.dense()) == s.apply(v));
}
