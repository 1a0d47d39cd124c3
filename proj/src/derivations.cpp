#include "hnc/derivations.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "hnc/errors.hpp"

namespace hnc {

namespace {

using Line = std::array<std::int64_t, 2>;

// sign * sum_{k >= k0} c_{r + dir*k*step}
struct Telescope {
  int sign;
  int k0;
  int dir;
};

struct RegionFormula {
  Telescope a;
  Telescope b;
};

// Regions 1..8: (p>0,q>0), (p>0,q<0), (p<0,q>0), (p<0,q<0), each split into
// r >= 0 (odd) and r < 0 (even).
constexpr std::array<RegionFormula, 8> kRegions{{
    {{-1, 1, +1}, {+1, 1, +1}},
    {{+1, 0, -1}, {-1, 0, -1}},
    {{+1, 0, -1}, {+1, 1, +1}},
    {{-1, 1, +1}, {-1, 0, -1}},
    {{-1, 1, +1}, {-1, 0, -1}},
    {{+1, 0, -1}, {+1, 1, +1}},
    {{+1, 0, -1}, {-1, 0, -1}},
    {{-1, 1, +1}, {+1, 1, +1}},
}};

int region_of(std::int64_t p, std::int64_t q, std::int64_t r) {
  int base = p > 0 ? (q > 0 ? 0 : 2) : (q > 0 ? 4 : 6);
  return base + (r >= 0 ? 1 : 2);
}

// Coefficients of one line {(p0, q0, r)} keyed by r.
std::map<std::int64_t, Gaussian> line_of(const AlgebraElement& x, std::int64_t p0, std::int64_t q0) {
  std::map<std::int64_t, Gaussian> out;
  auto it = x.terms().lower_bound({p0, q0, std::numeric_limits<std::int64_t>::min()});
  for (; it != x.terms().end() && it->first.p == p0 && it->first.q == q0; ++it)
    out.emplace(it->first.r, it->second);
  return out;
}

Gaussian telescope(const std::map<std::int64_t, Gaussian>& line, std::int64_t r, std::int64_t step,
                   const Telescope& t) {
  Gaussian sum;
  for (const auto& [r2, c] : line) {
    std::int64_t diff = r2 - r;
    std::int64_t stride = t.dir * step;
    if (diff % stride != 0) continue;
    if (diff / stride >= t.k0) sum += c;
  }
  return t.sign > 0 ? sum : -sum;
}

// The power x^n of a monomial generator together with its derivative
// d(x^n) by the Leibniz rule; n may be negative.
AlgebraElement leibniz_power(const GroupElement& gen, const AlgebraElement& dgen, std::int64_t n) {
  AlgebraElement out;
  if (n == 0) return out;
  GroupElement g = gen;
  AlgebraElement dg = dgen;
  if (n < 0) {
    g = group_inv(gen);
    auto gi = AlgebraElement::monomial(g);
    dg = -(gi * dgen * gi);
    n = -n;
  }
  for (std::int64_t i = 0; i < n; ++i)
    out += AlgebraElement::monomial(group_pow(g, i)) * dg * AlgebraElement::monomial(group_pow(g, n - 1 - i));
  return out;
}

AlgebraElement apply_unchecked(const Derivation& d, const AlgebraElement& dW, const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [g, c] : x.terms()) {
    auto Up = AlgebraElement::U(g.p);
    auto Vq = AlgebraElement::V(g.q);
    auto Wr = AlgebraElement::W(g.r);
    AlgebraElement term = leibniz_power({1, 0, 0}, d.dU, g.p) * Vq * Wr;
    term += Up * leibniz_power({0, 1, 0}, d.dV, g.q) * Wr;
    if (!dW.is_zero()) term += Up * Vq * leibniz_power({0, 0, 1}, dW, g.r);
    out += c * term;
  }
  return out;
}

}  // namespace

std::string to_string(ConsistencyViolation::Kind k) {
  switch (k) {
    case ConsistencyViolation::Kind::Relation: return "relation";
    case ConsistencyViolation::Kind::UAxis: return "u-axis";
    case ConsistencyViolation::Kind::VAxis: return "v-axis";
  }
  return "?";
}

Derivation canonical_derivation(int which) {
  if (which == 1) return {AlgebraElement::U(), {}};
  if (which == 2) return {{}, AlgebraElement::V()};
  throw std::invalid_argument("canonical derivation index must be 1 or 2");
}

Derivation inner_derivation(const AlgebraElement& x) {
  return {commutator(AlgebraElement::U(), x), commutator(AlgebraElement::V(), x)};
}

Derivation compose_from_parts(const AlgebraElement& z1, const AlgebraElement& z2,
                              const AlgebraElement& x) {
  if (!is_central(z1) || !is_central(z2))
    throw std::invalid_argument("z1 and z2 must be central");
  Derivation d = inner_derivation(x);
  d.dU += z1 * AlgebraElement::U();
  d.dV += z2 * AlgebraElement::V();
  return d;
}

AlgebraElement formal_dW(const Derivation& d) {
  const auto U = AlgebraElement::U();
  const auto V = AlgebraElement::V();
  const auto Us = AlgebraElement::U(-1);
  const auto Vs = AlgebraElement::V(-1);
  const AlgebraElement dUs = -(Us * d.dU * Us);
  const AlgebraElement dVs = -(Vs * d.dV * Vs);
  return d.dV * U * Vs * Us + V * d.dU * Vs * Us + V * U * dVs * Us + V * U * Vs * dUs;
}

Gaussian relation_residual(const Derivation& d, const GroupElement& c) {
  const auto a = [&](std::int64_t p, std::int64_t q, std::int64_t r) { return d.dU.coeff({p, q, r}); };
  const auto b = [&](std::int64_t p, std::int64_t q, std::int64_t r) { return d.dV.coeff({p, q, r}); };
  return (b(c.p, c.q + 1, c.r - 1) - b(c.p, c.q + 1, c.r + c.q - 1)) +
         (a(c.p + 1, c.q, c.r - c.p + c.q - 1) - a(c.p + 1, c.q, c.r + c.q - 1));
}

ConsistencyReport check_consistency(const Derivation& d) {
  // Only cells whose relation touches the support can fail.
  std::set<GroupElement> cells;
  for (const auto& [g, c] : d.dU.terms()) {
    std::int64_t p = g.p - 1, q = g.q;
    cells.insert({p, q, g.r + p - q + 1});
    cells.insert({p, q, g.r - q + 1});
  }
  for (const auto& [g, c] : d.dV.terms()) {
    std::int64_t p = g.p, q = g.q - 1;
    cells.insert({p, q, g.r + 1});
    cells.insert({p, q, g.r - q + 1});
  }
  ConsistencyReport rep;
  for (const auto& [g, c] : d.dU.terms())
    if (g.q == 0 && g.p != 1) rep.violations.push_back({ConsistencyViolation::Kind::UAxis, g, c});
  for (const auto& [g, c] : d.dV.terms())
    if (g.p == 0 && g.q != 1) rep.violations.push_back({ConsistencyViolation::Kind::VAxis, g, c});
  for (const auto& cell : cells) {
    Gaussian res = relation_residual(d, cell);
    if (!res.is_zero()) rep.violations.push_back({ConsistencyViolation::Kind::Relation, cell, res});
  }
  rep.pass = rep.violations.empty();
  return rep;
}

AlgebraElement apply(const Derivation& d, const AlgebraElement& x) {
  if (!check_consistency(d).pass)
    throw std::invalid_argument("derivation fails the consistency relation");
  return apply_unchecked(d, formal_dW(d), x);
}

int sign_case(const GroupElement& cell) {
  if (cell.p == 0 || cell.q == 0) throw std::invalid_argument("sign regions need p, q != 0");
  return region_of(cell.p, cell.q, cell.r);
}

CaseSums case_sums(const Derivation& d, const GroupElement& cell) {
  int region = sign_case(cell);
  const auto& f = kRegions[static_cast<std::size_t>(region - 1)];
  auto aline = line_of(d.dU, cell.p + 1, cell.q);
  auto bline = line_of(d.dV, cell.p, cell.q + 1);
  return {region, telescope(aline, cell.r, cell.q, f.a), telescope(bline, cell.r, cell.p, f.b)};
}

DecompositionResult decompose(const Derivation& d) {
  if (!check_consistency(d).pass)
    throw std::invalid_argument("derivation fails the consistency relation");

  DecompositionResult res;
  for (const auto& [r, c] : line_of(d.dU, 1, 0)) res.z1.add_term({0, 0, r}, c);
  for (const auto& [r, c] : line_of(d.dV, 0, 1)) res.z2.add_term({0, 0, r}, c);

  std::set<Line> lines;
  for (const auto& [g, c] : d.dU.terms())
    if (!(g.p == 1 && g.q == 0)) lines.insert({g.p - 1, g.q});
  for (const auto& [g, c] : d.dV.terms())
    if (!(g.p == 0 && g.q == 1)) lines.insert({g.p, g.q - 1});

  for (const auto& [p, q] : lines) {
    // q != 0: telescope the a-line with step q; q = 0: the b-line with step p.
    const bool use_a = q != 0;
    auto src = use_a ? line_of(d.dU, p + 1, q) : line_of(d.dV, p, 1);
    if (src.empty()) continue;
    const std::int64_t step = use_a ? q : p;
    const std::int64_t lo = std::min<std::int64_t>(src.begin()->first, 0) - std::abs(step) - 1;
    const std::int64_t hi = std::max<std::int64_t>(src.rbegin()->first, 0) + std::abs(step) + 1;
    for (std::int64_t r = lo; r <= hi; ++r) {
      // axis lines borrow the formula of an adjacent region
      int region = region_of(p == 0 ? 1 : p, q == 0 ? 1 : q, r);
      const auto& f = kRegions[static_cast<std::size_t>(region - 1)];
      res.x.add_term({p, q, r}, telescope(src, r, step, use_a ? f.a : f.b));
    }
  }

  if (compose_from_parts(res.z1, res.z2, res.x) == d) return res;

  // A nonzero residue-class sum along a line means the inner part would need
  // infinite support on that line.
  std::vector<Line> obstructed;
  for (const auto& [p, q] : lines) {
    const bool use_a = q != 0;
    auto src = use_a ? line_of(d.dU, p + 1, q) : line_of(d.dV, p, 1);
    const std::int64_t m = std::abs(use_a ? q : p);
    std::map<std::int64_t, Gaussian> classes;
    for (const auto& [r, c] : src) classes[((r % m) + m) % m] += c;
    if (std::any_of(classes.begin(), classes.end(), [](const auto& kv) { return !kv.second.is_zero(); }))
      obstructed.push_back({p, q});
  }
  if (!obstructed.empty()) {
    std::ostringstream os;
    os << "no finitely supported inner part: nonzero line sums on";
    for (const auto& [p, q] : obstructed) os << " (" << p << ',' << q << ')';
    throw NotDecomposable(os.str(), obstructed);
  }
  throw VerificationError("decomposition reconstruction mismatch");
}

}  // namespace hnc
