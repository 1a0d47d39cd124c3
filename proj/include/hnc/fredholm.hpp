#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hnc/heisenberg.hpp"

namespace hnc {

enum class ModuleName { z0, z1, z1prime, w0, w1, w1prime, dirac_T2, del1_w1, del0_w0 };
enum class Parity { Even, Odd };
enum class BaseSpace { C2, L2Z, L2Z2Pair };

struct FredholmModuleSpec {
  ModuleName name = ModuleName::z1;
  Parity parity = Parity::Odd;
  BaseSpace base = BaseSpace::L2Z;
  int truncation = 64;

  static FredholmModuleSpec make(ModuleName name, int truncation = 64);
  // Number of lattice sites in the window (2 for C2).
  int sites() const;
  // Graded copies of the site space (2 for the Dirac-type modules).
  int sheets() const { return base == BaseSpace::L2Z2Pair ? 2 : 1; }
};

std::string to_string(ModuleName n);
ModuleName parse_module_name(const std::string& s);

// Matrix of an operator on a finite window. Basis index =
// (sheet * components + component) * sites + site. boundary_distance[i] is the
// distance of the basis vector's site to the truncation cut.
struct TruncatedOperator {
  FredholmModuleSpec spec;
  int components = 1;
  Eigen::MatrixXcd entries;
  std::vector<int> boundary_distance;

  TruncatedOperator adjoint() const;
};

// pi(x) on the window, block-assembled for matrices over the algebra.
TruncatedOperator build_representation(const FredholmModuleSpec& spec, const AlgebraMatrix& x);
TruncatedOperator build_representation(const FredholmModuleSpec& spec, const AlgebraElement& x);
TruncatedOperator symmetry_operator(const FredholmModuleSpec& spec, int components = 1);
TruncatedOperator grading_operator(const FredholmModuleSpec& spec, int components = 1);

// E T E restricted to the range of E = (1+F)/2, for odd line modules.
TruncatedOperator compress_to_positive(const TruncatedOperator& t);

struct IndexCertificate {
  int index = 0;
  std::vector<int> truncations;
  std::vector<int> kernel_dims;
  std::vector<int> cokernel_dims;
  // per truncation: the smallest singular value above the kernel threshold
  std::vector<double> spectral_gaps;
};

// dim ker T - dim ker T* counted over kernel vectors that live away from the
// truncation cut (within `margin` sites of it they are artefacts of the
// square truncation). Must agree across all truncations.
IndexCertificate fredholm_index(const std::function<TruncatedOperator(int)>& build,
                                const std::vector<int>& truncations, double tol = 1e-8,
                                int margin = 2);

IndexCertificate odd_pairing(const FredholmModuleSpec& spec, const AlgebraMatrix& u,
                             const std::vector<int>& truncations, double tol = 1e-8);

// ---- even pairings ------------------------------------------------------

// A matrix-valued function on the torus, U -> e^{i k1}, V -> e^{i k2}.
using Symbol = std::function<Eigen::MatrixXcd(double, double)>;

struct ProjectorField {
  int grid = 0;
  int dim = 2;
  Symbol symbol;
  std::vector<Eigen::MatrixXcd> samples;  // row-major over the grid
  std::string label;

  static ProjectorField from_symbol(int grid, int dim, Symbol s, std::string label);
  const Eigen::MatrixXcd& at(int i, int j) const {
    return samples[static_cast<std::size_t>(i) * grid + j];
  }
  // Throws unless every sample is a Hermitian idempotent of common rank.
  int check_projector(double tol = 1e-10) const;
};

// Lower-band projector of sin k1 sx + sin k2 sy + (mass + cos k1 + cos k2) sz.
ProjectorField two_band_projector(int grid, double mass);
ProjectorField bott_projector(int grid, double mass = 1.0);
ProjectorField constant_projector(int grid, const Eigen::MatrixXcd& p);
ProjectorField field_from_algebra(int grid, const AlgebraMatrix& p);

// Plaquette-phase (FHS) Chern number, oriented so the Bott field gives +1.
int lattice_chern(const ProjectorField& field);
double lattice_chern_raw(const ProjectorField& field);

// Sum of Frobenius norms of Fourier coefficients with |a|_inf >= radius.
double fourier_tail(const ProjectorField& field, int radius);

struct TraceOptions {
  std::vector<int> truncations;  // empty: {N, N + 16}
  int probe_spacing = 8;
  std::uint64_t seed = 20240601;
  double accept = 0.1;
  double tail_tol = 1e-8;
};

struct TraceSample {
  int truncation;
  int n_commutators;
  double value;
};

struct EvenPairingCertificate {
  int value = 0;
  std::vector<TraceSample> samples;
  int fourier_radius = 0;
  double tail_bound = 0.0;
  std::vector<int> fft_grids;
};

// (-1)^n Tr(gamma pi(p) [F, pi(p)]^{2n}) for the Dirac module on l^2(Z^2)^2,
// evaluated matrix-free with FFTs and probing vectors.
double dirac_trace_raw(const ProjectorField& field, int truncation, int n_commutators,
                       const TraceOptions& opt, int fourier_radius, int* fft_grid = nullptr);
EvenPairingCertificate dirac_even_pairing(const ProjectorField& field, int truncation,
                                          int n_commutators, const TraceOptions& opt = {});
EvenPairingCertificate even_pairing_trace(const FredholmModuleSpec& spec, const AlgebraMatrix& p,
                                          int n_commutators, const TraceOptions& opt = {});

// ---- intertwiner check --------------------------------------------------

struct IntertwinerCheck {
  std::string word;
  long cells = 0;
  long mismatches = 0;
};

// T0 e_{m,n} = e_{m,n-m} conjugates pi0(x) into pi0(alpha(x)) on interior cells.
std::vector<IntertwinerCheck> unitary_equivalence_check(int truncation = 24, int random_words = 8,
                                                        std::uint64_t seed = 7);

}  // namespace hnc
