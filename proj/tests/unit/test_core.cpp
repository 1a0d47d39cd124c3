#include "doctest.h"

#include "hnc/heisenberg.hpp"
#include "hnc/json_io.hpp"
#include "oracles.hpp"

using namespace hnc;

namespace {

double defect(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("group law agrees with unitriangular matrices") {
  oracle::Generator gen(1);
  for (int i = 0; i < 300; ++i) {
    const auto a = gen.group_element(20), b = gen.group_element(20);
    CHECK(group_mul(a, b) == oracle::model_mul(a, b));
    CHECK(group_mul(a, group_inv(a)).is_identity());
    const auto n = gen.uniform(-7, 7);
    GroupElement acc;
    for (int k = 0; k < std::abs(n); ++k) acc = group_mul(acc, n > 0 ? a : group_inv(a));
    CHECK(group_pow(a, n) == acc);
  }
}

TEST_CASE("commutation relation and centre") {
  const auto U = AlgebraElement::U(), V = AlgebraElement::V(), W = AlgebraElement::W();
  CHECK(V * U == W * U * V);
  CHECK(is_central(W));
  CHECK(is_central(AlgebraElement::W(-4) + AlgebraElement::scalar(3)));
  CHECK_FALSE(is_central(U));
  CHECK_FALSE(is_central(U + W));
  CHECK(apply_automorphism(U, 1) == AlgebraElement::monomial({1, 0, 1}));
  CHECK(apply_automorphism(V, 5) == V);
  CHECK(apply_automorphism(U, -2) == AlgebraElement::monomial({1, 0, -2}));
}

TEST_CASE("ring axioms on random elements") {
  oracle::Generator gen(2);
  for (int i = 0; i < 40; ++i) {
    const auto x = gen.element(5, 3), y = gen.element(5, 3), z = gen.element(5, 3);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(alg_star(x * y) == alg_star(y) * alg_star(x));
    CHECK(alg_star(alg_star(x)) == x);
    CHECK((x - x).is_zero());
    CHECK(alg_mul(x, AlgebraElement::scalar(1)) == x);
    CHECK(apply_automorphism(x * y, 3) == apply_automorphism(x, 3) * apply_automorphism(y, 3));
  }
}

TEST_CASE("exact Gaussian rationals") {
  const Gaussian a(mpq_class(1, 3), mpq_class(-2, 5));
  CHECK(a * a.conj() == Gaussian(mpq_class(1, 9) + mpq_class(4, 25)));
  CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
  CHECK((a - a).is_zero());
}

TEST_CASE("clock and shift representation") {
  const RationalAngle th(2, 5);
  CHECK(th.t == 5);
  const auto U = eval_at_angle(AlgebraElement::U(), th), V = eval_at_angle(AlgebraElement::V(), th);
  const auto W = eval_at_angle(AlgebraElement::W(), th);
  CHECK(defect(V * U, W * U * V) < 1e-13);
  CHECK(defect(W, th.lambda() * Eigen::MatrixXcd::Identity(5, 5)) < 1e-13);
  CHECK(RationalAngle(4, 10).s == 2);
  CHECK_THROWS_AS(RationalAngle(1, 0), std::invalid_argument);
}

TEST_CASE("matrices over the group ring") {
  const auto V = AlgebraElement::V();
  const auto va = AlgebraMatrix::diag({V, AlgebraElement::scalar(1)});
  CHECK(va.is_unitary());
  CHECK_FALSE(va.is_projection());
  const auto p = AlgebraMatrix::diag({AlgebraElement::scalar(1), AlgebraElement()});
  CHECK(p.is_projection());
  CHECK(va * va.star() == AlgebraMatrix::identity(2));
}

TEST_CASE("JSON round trip") {
  oracle::Generator gen(3);
  for (int i = 0; i < 20; ++i) {
    const auto x = gen.element(6, 4);
    CHECK(element_from_json(to_json(x)) == x);
  }
  const auto j = json::parse(R"({"terms":[{"p":1,"q":0,"r":0,"re":"1/2","im":"-3"},{"p":1,"q":0,"r":0,"re":"1/2","im":"3"}]})");
  CHECK(element_from_json(j) == AlgebraElement::U());
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"terms":[{"p":1,"q":0,"re":"1","im":"0"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"terms":[{"p":1,"q":0,"r":0,"re":"1/0","im":"0"}]})")),
                  std::invalid_argument);
  const auto m = algebra_matrix_from_json(json::parse(R"({"matrix":[[{"terms":[]},{"terms":[]}],[{"terms":[]},{"terms":[]}]]})"));
  CHECK(m.dim() == 2);
}
