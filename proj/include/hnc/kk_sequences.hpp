#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hnc/integer_matrix.hpp"

namespace hnc {

struct AbelianGroupPresentation {
  std::string name;
  std::vector<std::string> labels;
  int rank() const { return static_cast<int>(labels.size()); }
};

struct IntegerMap {
  std::string name;
  AbelianGroupPresentation source;
  AbelianGroupPresentation target;
  IntMatrix matrix;  // columns indexed by source generators
  // entries (row, col) forced by exactness rather than stated directly
  std::vector<std::pair<int, int>> exactness_derived;
};

// Map j goes from node j to node j+1 (mod 6).
using SixTermSequence = std::array<IntegerMap, 6>;

SixTermSequence pv_ktheory_sequence();
SixTermSequence khomology_sequence();

struct NodeExactness {
  int node = 0;
  std::string label;
  bool composition_zero = false;
  int image_rank = 0;
  int kernel_rank = 0;
  bool image_saturated = false;
  bool exact = false;
  IntMatrix image_basis;
  IntMatrix kernel_basis;
};

struct ExactnessReport {
  bool exact = true;
  std::vector<NodeExactness> nodes;
  std::vector<int> failing_nodes() const;
};

ExactnessReport check_exactness(const SixTermSequence& seq);

struct Mutation {
  std::string sequence;  // "ktheory" or "khomology"
  int map = 0;
  int row = 0;
  int col = 0;
  std::int64_t value = 0;
  std::vector<int> predicted_failures;
  std::string description;
};

std::vector<Mutation> mutation_suite();
SixTermSequence apply_mutation(const Mutation& m);

struct PairingTable {
  std::vector<std::string> rows;  // K-theory
  std::vector<std::string> cols;  // K-homology
  IntMatrix entries;
  std::vector<std::vector<std::string>> provenance;
};

// Tables over C*(H3): even rows [1],[P_a],[P_b] against z0, Dirac', d1(w1');
// odd rows [U],[V],[V_a] against z1, z1', d0(Dirac).
std::pair<PairingTable, PairingTable> pairing_tables();

// Tables over C(T^2) = C*(U,W): even rows [1],[P_a] against w0, Dirac;
// odd rows [U],[W] against w1, w1'.
struct BasePairings {
  IntMatrix even;
  IntMatrix odd;
};
BasePairings stated_base_pairings();

struct IdentityCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

struct DualityReport {
  bool pass = true;
  std::vector<IdentityCheck> checks;
};

DualityReport check_duality(const BasePairings& base);
DualityReport check_duality();

struct FaithfulnessReport {
  std::int64_t even_det = 0;
  std::int64_t odd_det = 0;
  bool pass = false;
};

FaithfulnessReport check_faithfulness();

}  // namespace hnc
