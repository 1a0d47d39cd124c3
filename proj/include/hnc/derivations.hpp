#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnc/heisenberg.hpp"

namespace hnc {

// A derivation of the group ring, stored through its values on U and V.
// dU holds the coefficients a_{p,q,r}, dV the coefficients b_{p,q,r}.
struct Derivation {
  AlgebraElement dU;
  AlgebraElement dV;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct ConsistencyViolation {
  enum class Kind { Relation, UAxis, VAxis };
  Kind kind;
  GroupElement cell;
  Gaussian residual;
};

struct ConsistencyReport {
  bool pass = true;
  std::vector<ConsistencyViolation> violations;
};

struct DecompositionResult {
  AlgebraElement z1;
  AlgebraElement z2;
  AlgebraElement x;
};

// Raised by decompose when some line of the inner part would need infinite
// support: the finite telescoping sums do not close up.
class NotDecomposable : public std::domain_error {
 public:
  NotDecomposable(const std::string& what, std::vector<std::array<std::int64_t, 2>> lines)
      : std::domain_error(what), lines_(std::move(lines)) {}
  const std::vector<std::array<std::int64_t, 2>>& obstructed_lines() const { return lines_; }

 private:
  std::vector<std::array<std::int64_t, 2>> lines_;
};

Derivation canonical_derivation(int which);
Derivation inner_derivation(const AlgebraElement& x);
Derivation compose_from_parts(const AlgebraElement& z1, const AlgebraElement& z2,
                              const AlgebraElement& x);

// Value of the derivation on W obtained formally from W = V U V* U* by the
// Leibniz rule. Vanishes exactly when the derivation is consistent.
AlgebraElement formal_dW(const Derivation& d);
// Left-hand side of the consistency relation at cell (p,q,r).
Gaussian relation_residual(const Derivation& d, const GroupElement& cell);

ConsistencyReport check_consistency(const Derivation& d);
AlgebraElement apply(const Derivation& d, const AlgebraElement& x);
DecompositionResult decompose(const Derivation& d);

// Sign region of a cell with p,q != 0 (1..8); r = 0 is assigned to the r >= 0 case.
int sign_case(const GroupElement& cell);
// The two telescoping expressions for alpha_{p,q,r} in the cell's sign region,
// one built from the a-coefficients and one from the b-coefficients.
struct CaseSums {
  int region;
  Gaussian from_a;
  Gaussian from_b;
};
CaseSums case_sums(const Derivation& d, const GroupElement& cell);

std::string to_string(ConsistencyViolation::Kind k);

}  // namespace hnc
