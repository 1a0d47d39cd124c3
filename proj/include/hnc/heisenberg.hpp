#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Dense>

namespace hnc {

// Normal-form word U^p V^q W^r in the discrete Heisenberg group.
struct GroupElement {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;

  auto operator<=>(const GroupElement&) const = default;
  bool is_identity() const { return p == 0 && q == 0 && r == 0; }
  bool is_central() const { return p == 0 && q == 0; }
};

GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& g);
GroupElement group_pow(const GroupElement& g, std::int64_t n);
std::string to_string(const GroupElement& g);

// Exact complex number with rational real and imaginary parts.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gaussian(mpq_class re, mpq_class im = 0);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  Gaussian conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re_, -a.im_}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b);
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  static Gaussian i() { return {0, 1}; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::string to_string(const Gaussian& z);

// Finitely supported twisted Laurent polynomial sum a_{p,q,r} U^p V^q W^r.
// Terms are kept in lexicographic (p,q,r) order and zero coefficients are
// never stored.
class AlgebraElement {
 public:
  using Terms = std::map<GroupElement, Gaussian>;

  AlgebraElement() = default;
  static AlgebraElement monomial(const GroupElement& g, const Gaussian& c = 1);
  static AlgebraElement scalar(const Gaussian& c);
  static AlgebraElement U(std::int64_t n = 1) { return monomial({n, 0, 0}); }
  static AlgebraElement V(std::int64_t n = 1) { return monomial({0, n, 0}); }
  static AlgebraElement W(std::int64_t n = 1) { return monomial({0, 0, n}); }

  const Terms& terms() const { return terms_; }
  Gaussian coeff(const GroupElement& g) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const GroupElement& g, const Gaussian& c);

  // Largest |p|, |q|, |r| over the support.
  std::int64_t support_radius() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Gaussian& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_star(const AlgebraElement& x);
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);
bool is_central(const AlgebraElement& x);
// alpha^n(x) = V^n x V^{-n}
AlgebraElement apply_automorphism(const AlgebraElement& x, std::int64_t n);
// Image in C(T^2): W -> 1, coefficients summed along r.
AlgebraElement quotient_to_torus(const AlgebraElement& x);
std::string to_string(const AlgebraElement& x);

struct RationalAngle {
  std::int64_t s = 0;
  std::int64_t t = 1;

  RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den);
  std::complex<double> lambda() const;
};

// Clock-and-shift image in M_t(C): U cyclic shift, V = diag(lambda^j),
// W = lambda. Satisfies VU = lambda UV.
Eigen::MatrixXcd eval_at_angle(const AlgebraElement& x, const RationalAngle& theta);

// Square matrix with entries in the group ring.
class AlgebraMatrix {
 public:
  AlgebraMatrix() = default;
  explicit AlgebraMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}
  static AlgebraMatrix identity(int n);
  static AlgebraMatrix diag(const std::vector<AlgebraElement>& d);
  static AlgebraMatrix scalar(const AlgebraElement& x);

  int dim() const { return n_; }
  AlgebraElement& operator()(int i, int j) { return entries_[idx(i, j)]; }
  const AlgebraElement& operator()(int i, int j) const { return entries_[idx(i, j)]; }
  std::int64_t support_radius() const;

  friend AlgebraMatrix operator*(const AlgebraMatrix& a, const AlgebraMatrix& b);
  friend bool operator==(const AlgebraMatrix& a, const AlgebraMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  AlgebraMatrix star() const;
  bool is_unitary() const;
  bool is_projection() const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<AlgebraElement> entries_;
};

}  // namespace hnc
