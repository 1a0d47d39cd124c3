#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hnc/heisenberg.hpp"

namespace hnc {

std::int64_t hcf(std::int64_t a, std::int64_t b);

enum class CentralizerCase { Identity, Case1, Case2, Case3, Case4a, Case4b };

// Isomorphism type of N_g = C_g / <g>.
struct NgType {
  enum class Kind { Z, ZxZl, Z2, CentralExtension, H3 };
  Kind kind = Kind::Z;
  std::int64_t param = 0;  // l for ZxZl, |r| for CentralExtension

  friend bool operator==(const NgType&, const NgType&) = default;
};

struct CentralizerReport {
  CentralizerCase kase = CentralizerCase::Identity;
  std::int64_t k = 0;
  std::int64_t p_prime = 0;
  std::int64_t q_prime = 0;
  std::int64_t S_k = 0;
  std::int64_t l = 0;
  NgType ng;
};

struct CohomologyProfile {
  std::vector<int> dims;
  int operator[](std::size_t n) const { return n < dims.size() ? dims[n] : 0; }
  friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

struct CyclicDimReport {
  int degree = 0;
  int finite_rank = 0;
  bool countable_factor = false;
};

CentralizerReport classify_element(const GroupElement& g);
// Closed-form centralizer membership of h in C_g.
bool centralizer_contains(const GroupElement& g, const GroupElement& h);
GroupElement conjugacy_representative(const GroupElement& g);
std::vector<GroupElement> brute_force_centralizer(const GroupElement& g, int box);

// Cohomology with trivial complex coefficients.
CohomologyProfile cohomology_Z();
CohomologyProfile cohomology_finite_cyclic(std::int64_t l);
CohomologyProfile kunneth(const CohomologyProfile& a, const CohomologyProfile& b);
// Central extension 1 -> K -> G -> B -> 1 with dim H^*(K) = (1,1): two-row
// spectral sequence whose only differentials are d2: E2^{p,1} -> E2^{p+2,0}
// with ranks d2_ranks[p].
CohomologyProfile two_row_extension(const CohomologyProfile& base, const std::vector<int>& d2_ranks);
// Rank of H^1(G;C) for a finitely presented group, from the relator exponent sums.
int first_betti_number(int generators, const std::vector<std::vector<int>>& relators);
CohomologyProfile heisenberg_cohomology();
CohomologyProfile group_cohomology(const NgType& t);

CyclicDimReport cyclic_cohomology_dim(int n);
std::pair<int, int> periodic_cyclic_dims();

std::string to_string(CentralizerCase c);
std::string to_string(const NgType& t);
// Parses "Z", "ZxZl:<l>", "Z2", "ext:<r>", "H3".
NgType parse_ng_type(const std::string& s);

}  // namespace hnc
