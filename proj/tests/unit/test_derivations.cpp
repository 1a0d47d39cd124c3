#include "doctest.h"

#include "hnc/derivations.hpp"
#include "oracles.hpp"

using namespace hnc;

TEST_CASE("inner derivations match the index-shift formula") {
  oracle::Generator gen(11);
  for (int i = 0; i < 30; ++i) {
    const auto x = gen.element(6, 4);
    CHECK(inner_derivation(x) == oracle::inner_by_shift_formula(x));
  }
}

TEST_CASE("Leibniz rule on products") {
  oracle::Generator gen(12);
  for (int i = 0; i < 15; ++i) {
    const auto d = compose_from_parts(gen.central(2, 3), gen.central(2, 3), gen.off_axis(4, 3));
    const auto x = gen.element(3, 2), y = gen.element(3, 2);
    CHECK(apply(d, x * y) == apply(d, x) * y + x * apply(d, y));
    CHECK(apply(d, AlgebraElement::U()) == d.dU);
    CHECK(apply(d, AlgebraElement::V(-1)) == -(AlgebraElement::V(-1) * d.dV * AlgebraElement::V(-1)));
  }
}

TEST_CASE("relation residual is the coefficient of the formal d(W)") {
  oracle::Generator gen(13);
  for (int i = 0; i < 20; ++i) {
    Derivation d{gen.element(4, 3), gen.element(4, 3)};
    const auto dw = formal_dW(d);
    for (std::int64_t p = -4; p <= 4; ++p)
      for (std::int64_t q = -4; q <= 4; ++q)
        for (std::int64_t r = -6; r <= 6; ++r) CHECK(relation_residual(d, {p, q, r}) == dw.coeff({p, q, r}));
  }
}

TEST_CASE("decomposition of simple derivations") {
  const auto U = AlgebraElement::U();
  auto r = decompose(inner_derivation(U));
  CHECK(r.x == U);
  CHECK(r.z1.is_zero());
  CHECK(r.z2.is_zero());

  r = decompose(canonical_derivation(1));
  CHECK(r.x.is_zero());
  CHECK(r.z1 == AlgebraElement::scalar(1));
  CHECK(r.z2.is_zero());

  const auto z = AlgebraElement::W(2) + AlgebraElement::scalar(Gaussian::i());
  r = decompose(compose_from_parts(AlgebraElement(), z, AlgebraElement::V(3)));
  CHECK(r.z2 == z);
  CHECK(r.x == AlgebraElement::V(3));
}

TEST_CASE("consistent derivations without finite decomposition") {
  Derivation d{AlgebraElement::monomial({1, 1, 0}), AlgebraElement()};
  CHECK(check_consistency(d).pass);
  CHECK(formal_dW(d).is_zero());
  CHECK_THROWS_AS(decompose(d), NotDecomposable);
  try {
    decompose(d);
  } catch (const NotDecomposable& e) {
    CHECK_FALSE(e.obstructed_lines().empty());
  }
}

TEST_CASE("inconsistent input is rejected") {
  Derivation d{AlgebraElement::monomial({2, 0, 0}), AlgebraElement()};
  const auto rep = check_consistency(d);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.violations.empty());
  CHECK_THROWS_AS(apply(d, AlgebraElement::U()), std::invalid_argument);
  CHECK_THROWS_AS(decompose(d), std::invalid_argument);
  CHECK_THROWS_AS(compose_from_parts(AlgebraElement::U(), AlgebraElement(), AlgebraElement()), std::invalid_argument);
}

TEST_CASE("sign regions") {
  CHECK(sign_case({1, 1, 0}) == 1);
  CHECK(sign_case({1, 1, -1}) == 2);
  CHECK(sign_case({1, -1, 3}) == 3);
  CHECK(sign_case({-1, 1, 3}) == 5);
  CHECK(sign_case({-2, -2, -1}) == 8);
  CHECK_THROWS_AS(sign_case({0, 1, 0}), std::invalid_argument);
}
