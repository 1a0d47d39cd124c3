#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnc/fredholm.hpp"
#include "hnc/kk_sequences.hpp"

namespace hnc {

struct NumericOptions {
  std::vector<int> index_truncations{32, 64, 128};
  int dirac_truncation = 48;
  int n_commutators = 4;
  int grid = 64;
  double tol = 1e-8;
  TraceOptions trace;
};

struct EntryCheck {
  std::string table;
  std::string row;
  std::string col;
  int stored = 0;
  int computed = 0;
  std::string route;
  bool match() const { return stored == computed; }
};

struct TableVerification {
  bool pass = true;
  std::vector<EntryCheck> entries;
};

// Images of the K-theory generators used by the numeric routes.
AlgebraMatrix odd_generator_image(const std::string& label);   // [U], [V], [V_a]
AlgebraMatrix even_generator_image(const std::string& label);  // [1], [P_a], [P_b]

// Recomputes every table entry with a numeric route, and checks that d1(w1)
// pairs to zero with all three even generators.
TableVerification verify_pairing_tables(const NumericOptions& opt);

// The C(T^2) pairings used by the duality identities, computed from the
// modules w0, Dirac, w1, w1'. A precomputed Dirac/Bott value may be supplied.
BasePairings numeric_base_pairings(const NumericOptions& opt, std::optional<int> dirac_bott = std::nullopt);

}  // namespace hnc
