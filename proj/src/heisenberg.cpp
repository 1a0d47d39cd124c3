#include "hnc/heisenberg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hnc {

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  return {a.p + b.p, a.q + b.q, a.r + b.r + a.q * b.p};
}

GroupElement group_inv(const GroupElement& g) { return {-g.p, -g.q, g.p * g.q - g.r}; }

GroupElement group_pow(const GroupElement& g, std::int64_t n) {
  // (U^p V^q W^r)^n = U^{np} V^{nq} W^{nr + qp n(n-1)/2}
  return {n * g.p, n * g.q, n * g.r + g.p * g.q * (n * (n - 1) / 2)};
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << '(' << g.p << ',' << g.q << ',' << g.r << ')';
  return os.str();
}

Gaussian::Gaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian operator*(const Gaussian& a, const Gaussian& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

std::string to_string(const Gaussian& z) {
  if (sgn(z.im()) == 0) return z.re().get_str();
  std::string out = sgn(z.re()) == 0 ? "" : z.re().get_str() + (sgn(z.im()) > 0 ? "+" : "");
  return out + z.im().get_str() + "i";
}

AlgebraElement AlgebraElement::monomial(const GroupElement& g, const Gaussian& c) {
  AlgebraElement x;
  x.add_term(g, c);
  return x;
}

AlgebraElement AlgebraElement::scalar(const Gaussian& c) { return monomial({0, 0, 0}, c); }

Gaussian AlgebraElement::coeff(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Gaussian{} : it->second;
}

void AlgebraElement::add_term(const GroupElement& g, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::int64_t AlgebraElement::support_radius() const {
  std::int64_t m = 0;
  for (const auto& [g, c] : terms_)
    m = std::max({m, std::abs(g.p), std::abs(g.q), std::abs(g.r)});
  return m;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [g, c] : a.terms_) out.terms_.emplace(g, -c);
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [g1, c1] : a.terms_)
    for (const auto& [g2, c2] : b.terms_) out.add_term(group_mul(g1, g2), c1 * c2);
  return out;
}

AlgebraElement operator*(const Gaussian& c, const AlgebraElement& a) {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [g, v] : a.terms_) out.terms_.emplace(g, c * v);
  return out;
}

AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

AlgebraElement alg_star(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [g, c] : x.terms()) out.add_term(group_inv(g), c.conj());
  return out;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  return x * y - y * x;
}

bool is_central(const AlgebraElement& x) {
  return commutator(x, AlgebraElement::U()).is_zero() &&
         commutator(x, AlgebraElement::V()).is_zero();
}

AlgebraElement apply_automorphism(const AlgebraElement& x, std::int64_t n) {
  return AlgebraElement::V(n) * x * AlgebraElement::V(-n);
}

AlgebraElement quotient_to_torus(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [g, c] : x.terms()) out.add_term({g.p, g.q, 0}, c);
  return out;
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(c) << ')' << "U^" << g.p << "V^" << g.q << "W^" << g.r;
  }
  return os.str();
}

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational angle with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  s = num / g;
  t = den / g;
}

std::complex<double> RationalAngle::lambda() const {
  // reduce s mod t first so large numerators keep full precision
  std::int64_t k = ((s % t) + t) % t;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(t));
}

namespace {

std::complex<double> lambda_power(const RationalAngle& theta, std::int64_t e) {
  std::int64_t k = ((theta.s * (e % theta.t)) % theta.t + theta.t) % theta.t;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(theta.t));
}

}  // namespace

Eigen::MatrixXcd eval_at_angle(const AlgebraElement& x, const RationalAngle& theta) {
  const std::int64_t t = theta.t;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(t, t);
  for (const auto& [g, c] : x.terms()) {
    // U^p V^q W^r e_j = lambda^{qj + r} e_{j+p}
    const std::complex<double> cz = c.to_complex();
    for (std::int64_t j = 0; j < t; ++j) {
      std::int64_t row = ((j + g.p) % t + t) % t;
      out(row, j) += cz * lambda_power(theta, g.q * j + g.r);
    }
  }
  return out;
}

AlgebraMatrix AlgebraMatrix::identity(int n) {
  AlgebraMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = AlgebraElement::scalar(1);
  return m;
}

AlgebraMatrix AlgebraMatrix::diag(const std::vector<AlgebraElement>& d) {
  AlgebraMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

AlgebraMatrix AlgebraMatrix::scalar(const AlgebraElement& x) { return diag({x}); }

std::int64_t AlgebraMatrix::support_radius() const {
  std::int64_t m = 0;
  for (const auto& e : entries_) m = std::max(m, e.support_radius());
  return m;
}

AlgebraMatrix operator*(const AlgebraMatrix& a, const AlgebraMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  AlgebraMatrix out(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j)
      for (int k = 0; k < a.n_; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

AlgebraMatrix AlgebraMatrix::star() const {
  AlgebraMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = alg_star((*this)(j, i));
  return out;
}

bool AlgebraMatrix::is_unitary() const {
  const auto id = identity(n_);
  return (*this) * star() == id && star() * (*this) == id;
}

bool AlgebraMatrix::is_projection() const { return star() == *this && (*this) * (*this) == *this; }

}  // namespace hnc
