#include "oracles.hpp"

#include <cstdlib>

namespace hnc::oracle {

Mat3 to_matrix(const GroupElement& g) { return {{{1, g.q, g.r}, {0, 1, g.p}, {0, 0, 1}}}; }

GroupElement from_matrix(const Mat3& m) { return {m[1][2], m[0][1], m[0][2]}; }

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

GroupElement model_mul(const GroupElement& a, const GroupElement& b) {
  return from_matrix(mat_mul(to_matrix(a), to_matrix(b)));
}

Derivation inner_by_shift_formula(const AlgebraElement& x) {
  Derivation d;
  for (const auto& [g, c] : x.terms()) {
    // x_{p,q,r} contributes at (p+1,q,r) and (p+1,q,r+q) in dU,
    // and at (p,q+1,r+p), (p,q+1,r) in dV
    d.dU.add_term({g.p + 1, g.q, g.r}, c);
    d.dU.add_term({g.p + 1, g.q, g.r + g.q}, -c);
    d.dV.add_term({g.p, g.q + 1, g.r + g.p}, c);
    d.dV.add_term({g.p, g.q + 1, g.r}, -c);
  }
  return d;
}

int order_modulo(const GroupElement& g, const GroupElement& h, int max_t) {
  for (int t = 1; t <= max_t; ++t) {
    const GroupElement ht = group_pow(h, t);
    // h^t = g^n forces n from the first nonzero coordinate of g
    std::int64_t n = 0;
    if (g.p != 0) {
      if (ht.p % g.p != 0) continue;
      n = ht.p / g.p;
    } else if (g.q != 0) {
      if (ht.q % g.q != 0) continue;
      n = ht.q / g.q;
    } else {
      if (ht.r % g.r != 0) continue;
      n = ht.r / g.r;
    }
    if (group_pow(g, n) == ht) return t;
  }
  return 0;
}

std::int64_t Generator::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

GroupElement Generator::group_element(std::int64_t box) {
  return {uniform(-box, box), uniform(-box, box), uniform(-box, box)};
}

Gaussian Generator::coefficient() {
  for (;;) {
    mpq_class re(uniform(-4, 4), uniform(1, 3));
    mpq_class im(uniform(-1, 1) * uniform(0, 3), uniform(1, 2));
    Gaussian c(re, im);
    if (!c.is_zero()) return c;
  }
}

AlgebraElement Generator::element(int max_terms, std::int64_t box) {
  AlgebraElement x;
  const auto n = uniform(1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) x.add_term(group_element(box), coefficient());
  return x;
}

AlgebraElement Generator::central(int max_terms, std::int64_t box) {
  AlgebraElement x;
  const auto n = uniform(0, max_terms);
  for (std::int64_t i = 0; i < n; ++i) x.add_term({0, 0, uniform(-box, box)}, coefficient());
  return x;
}

AlgebraElement Generator::off_axis(int max_terms, std::int64_t box) {
  AlgebraElement x;
  const auto n = uniform(1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) {
    GroupElement g = group_element(box);
    if (g.p == 0 && g.q == 0) g.p = uniform(0, 1) ? 1 : -1;
    x.add_term(g, coefficient());
  }
  return x;
}

AlgebraElement Generator::all_regions(std::int64_t box) {
  AlgebraElement x = off_axis(4, box);
  for (int sp : {1, -1})
    for (int sq : {1, -1})
      for (int sr : {1, -1})
        x.add_term({sp * uniform(1, box), sq * uniform(1, box), sr * uniform(1, box)}, coefficient());
  return x;
}

}  // namespace hnc::oracle
