#include "hnc/group_structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hnc {

std::int64_t hcf(std::int64_t a, std::int64_t b) { return std::gcd(std::abs(a), std::abs(b)); }

namespace {

NgType quotient_type(std::int64_t l) {
  if (l == 1) return {NgType::Kind::Z, 0};
  return {NgType::Kind::ZxZl, l};
}

}  // namespace

CentralizerReport classify_element(const GroupElement& g) {
  CentralizerReport rep;
  if (g.is_identity()) {
    rep.ng = {NgType::Kind::H3, 0};
    return rep;
  }
  if (g.is_central()) {
    // C_g is everything; N_g = H3 / <W^r>
    const std::int64_t ar = std::abs(g.r);
    rep.kase = ar == 1 ? CentralizerCase::Case4a : CentralizerCase::Case4b;
    rep.ng = ar == 1 ? NgType{NgType::Kind::Z2, 0} : NgType{NgType::Kind::CentralExtension, ar};
    return rep;
  }
  if (g.q == 0) {
    // C_g = {U^a W^c} = Z^2, g = (p, r) in these coordinates
    rep.kase = CentralizerCase::Case2;
    rep.l = hcf(g.p, g.r);
  } else if (g.p == 0) {
    rep.kase = CentralizerCase::Case3;
    rep.l = hcf(g.q, g.r);
  } else {
    // C_g = {x^n W^c} with x = U^{p'} V^{q'}, x^n = U^{np'} V^{nq'} W^{S_n}
    rep.kase = CentralizerCase::Case1;
    rep.k = hcf(g.p, g.q);
    rep.p_prime = g.p / rep.k;
    rep.q_prime = g.q / rep.k;
    rep.S_k = rep.p_prime * rep.q_prime * rep.k * (rep.k - 1) / 2;
    rep.l = hcf(rep.k, g.r - rep.S_k);
  }
  rep.ng = quotient_type(rep.l);
  return rep;
}

bool centralizer_contains(const GroupElement& g, const GroupElement& h) {
  const auto rep = classify_element(g);
  switch (rep.kase) {
    case CentralizerCase::Identity:
    case CentralizerCase::Case4a:
    case CentralizerCase::Case4b:
      return true;
    case CentralizerCase::Case2:
      return h.q == 0;
    case CentralizerCase::Case3:
      return h.p == 0;
    case CentralizerCase::Case1:
      return h.p % rep.p_prime == 0 && h.q == (h.p / rep.p_prime) * rep.q_prime;
  }
  return false;
}

GroupElement conjugacy_representative(const GroupElement& g) {
  if (g.is_central()) return g;
  const std::int64_t k = hcf(g.p, g.q);
  return {g.p, g.q, ((g.r % k) + k) % k};
}

std::vector<GroupElement> brute_force_centralizer(const GroupElement& g, int box) {
  if (box < 0 || box > 12) throw std::invalid_argument("centralizer box must lie in [0, 12]");
  std::vector<GroupElement> out;
  for (std::int64_t a = -box; a <= box; ++a)
    for (std::int64_t b = -box; b <= box; ++b)
      for (std::int64_t c = -box; c <= box; ++c) {
        GroupElement h{a, b, c};
        if (group_mul(g, h) == group_mul(h, g)) out.push_back(h);
      }
  return out;
}

CohomologyProfile cohomology_Z() { return {{1, 1}}; }

CohomologyProfile cohomology_finite_cyclic(std::int64_t l) {
  if (l < 1) throw std::invalid_argument("cyclic group order must be positive");
  return {{1}};
}

CohomologyProfile kunneth(const CohomologyProfile& a, const CohomologyProfile& b) {
  CohomologyProfile out;
  out.dims.assign(a.dims.size() + b.dims.size() - 1, 0);
  for (std::size_t i = 0; i < a.dims.size(); ++i)
    for (std::size_t j = 0; j < b.dims.size(); ++j) out.dims[i + j] += a.dims[i] * b.dims[j];
  return out;
}

CohomologyProfile two_row_extension(const CohomologyProfile& base, const std::vector<int>& d2) {
  const auto rank = [&](int p) {
    return p >= 0 && static_cast<std::size_t>(p) < d2.size() ? d2[static_cast<std::size_t>(p)] : 0;
  };
  const int top = static_cast<int>(base.dims.size());
  CohomologyProfile out;
  for (int n = 0; n <= top; ++n) {
    int e_n0 = base[static_cast<std::size_t>(n)] - rank(n - 2);
    int e_n1 = n >= 1 ? base[static_cast<std::size_t>(n - 1)] - rank(n - 1) : 0;
    if (e_n0 < 0 || e_n1 < 0) throw std::invalid_argument("d2 rank exceeds the E2 term");
    out.dims.push_back(e_n0 + e_n1);
  }
  while (out.dims.size() > 1 && out.dims.back() == 0) out.dims.pop_back();
  return out;
}

int first_betti_number(int generators, const std::vector<std::vector<int>>& relators) {
  // rank over Q of the relator exponent-sum matrix, by fraction-free elimination
  std::vector<std::vector<long long>> m;
  for (const auto& rel : relators) {
    std::vector<long long> row(static_cast<std::size_t>(generators), 0);
    for (int s : rel) {
      if (s == 0 || std::abs(s) > generators) throw std::invalid_argument("bad relator letter");
      row[static_cast<std::size_t>(std::abs(s) - 1)] += s > 0 ? 1 : -1;
    }
    m.push_back(row);
  }
  int rank = 0;
  for (int col = 0; col < generators && rank < static_cast<int>(m.size()); ++col) {
    auto piv = std::find_if(m.begin() + rank, m.end(), [&](const auto& r) { return r[static_cast<std::size_t>(col)] != 0; });
    if (piv == m.end()) continue;
    std::iter_swap(m.begin() + rank, piv);
    const auto& pr = m[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < m.size(); ++i) {
      long long f = m[i][static_cast<std::size_t>(col)], g = pr[static_cast<std::size_t>(col)];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] = m[i][j] * g - pr[j] * f;
    }
    ++rank;
  }
  return generators - rank;
}

CohomologyProfile heisenberg_cohomology() {
  // 1 -> <W> -> H3 -> Z^2 -> 1. Generators U=1, V=2, W=3; relators
  // W^-1 V U V^-1 U^-1, [U,W], [V,W].
  const int b1 = first_betti_number(3, {{-3, 2, 1, -2, -1}, {1, 3, -1, -3}, {2, 3, -2, -3}});
  const CohomologyProfile base = kunneth(cohomology_Z(), cohomology_Z());
  // H^1 = E_infty^{1,0} + E_infty^{0,1}; only d2 out of E2^{0,1} can reduce it.
  const int d2_0 = base[1] + base[0] - b1;
  return two_row_extension(base, {d2_0});
}

CohomologyProfile group_cohomology(const NgType& t) {
  switch (t.kind) {
    case NgType::Kind::Z:
      return cohomology_Z();
    case NgType::Kind::ZxZl:
      if (t.param < 2) throw std::invalid_argument("Z x Z_l needs l >= 2");
      return kunneth(cohomology_Z(), cohomology_finite_cyclic(t.param));
    case NgType::Kind::Z2:
      return kunneth(cohomology_Z(), cohomology_Z());
    case NgType::Kind::CentralExtension:
      // finite fiber Z_|r| over Z^2: the spectral sequence has a single row
      if (t.param < 2) throw std::invalid_argument("central extension needs |r| >= 2");
      return kunneth(kunneth(cohomology_Z(), cohomology_Z()), cohomology_finite_cyclic(t.param));
    case NgType::Kind::H3:
      return heisenberg_cohomology();
  }
  throw std::invalid_argument("unsupported group descriptor");
}

CyclicDimReport cyclic_cohomology_dim(int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  CyclicDimReport rep;
  rep.degree = n;
  const auto h = heisenberg_cohomology();
  for (int j = n; j >= 0; j -= 2) rep.finite_rank += h[static_cast<std::size_t>(j)];

  // Non-identity classes all have infinite order; count those with
  // H^n(N_g) != 0 in two boxes. Growth witnesses an infinite family.
  const auto contributing = [n](int box) {
    std::set<GroupElement> reps;
    for (std::int64_t p = -box; p <= box; ++p)
      for (std::int64_t q = -box; q <= box; ++q)
        for (std::int64_t r = -box; r <= box; ++r) {
          GroupElement g{p, q, r};
          if (g.is_identity()) continue;
          if (group_cohomology(classify_element(g).ng)[static_cast<std::size_t>(n)] > 0)
            reps.insert(conjugacy_representative(g));
        }
    return reps.size();
  };
  const auto small = contributing(2);
  rep.countable_factor = small > 0 && contributing(4) > small;
  return rep;
}

std::pair<int, int> periodic_cyclic_dims() {
  return {cyclic_cohomology_dim(10).finite_rank, cyclic_cohomology_dim(11).finite_rank};
}

std::string to_string(CentralizerCase c) {
  switch (c) {
    case CentralizerCase::Identity: return "Identity";
    case CentralizerCase::Case1: return "Case1";
    case CentralizerCase::Case2: return "Case2";
    case CentralizerCase::Case3: return "Case3";
    case CentralizerCase::Case4a: return "Case4a";
    case CentralizerCase::Case4b: return "Case4b";
  }
  return "?";
}

std::string to_string(const NgType& t) {
  switch (t.kind) {
    case NgType::Kind::Z: return "Z";
    case NgType::Kind::ZxZl: return "ZxZl:" + std::to_string(t.param);
    case NgType::Kind::Z2: return "Z2";
    case NgType::Kind::CentralExtension: return "ext:" + std::to_string(t.param);
    case NgType::Kind::H3: return "H3";
  }
  return "?";
}

NgType parse_ng_type(const std::string& s) {
  if (s == "Z") return {NgType::Kind::Z, 0};
  if (s == "Z2") return {NgType::Kind::Z2, 0};
  if (s == "H3") return {NgType::Kind::H3, 0};
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    std::string head = s.substr(0, colon);
    std::int64_t v = 0;
    try {
      v = std::stoll(s.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad group parameter in '" + s + "'");
    }
    if (head == "ZxZl") return {NgType::Kind::ZxZl, v};
    if (head == "ext") return {NgType::Kind::CentralExtension, v};
  }
  throw std::invalid_argument("unsupported group descriptor '" + s + "'");
}

}  // namespace hnc
