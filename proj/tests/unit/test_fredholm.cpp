#include "doctest.h"

#include <cmath>

#include "hnc/fredholm.hpp"
#include "hnc/pairing_check.hpp"

using namespace hnc;
using cplx = std::complex<double>;

namespace {

// Window operator of the symbol field by direct convolution with Fourier
// coefficients from a fine DFT.
Eigen::MatrixXcd dense_window(const ProjectorField& f, int N, int fine) {
  const int W = 2 * N + 1, d = f.dim;
  const double two_pi = 2.0 * std::acos(-1.0);
  std::vector<Eigen::MatrixXcd> samples;
  for (int i = 0; i < fine; ++i)
    for (int j = 0; j < fine; ++j) samples.push_back(f.symbol(two_pi * i / fine, two_pi * j / fine));
  const auto coeff = [&](int a, int b) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < fine; ++i)
      for (int j = 0; j < fine; ++j)
        c += samples[static_cast<std::size_t>(i) * fine + j] * std::polar(1.0, -two_pi * (a * i + b * j) / fine);
    return Eigen::MatrixXcd(c / static_cast<double>(fine * fine));
  };
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(d * W * W, d * W * W);
  for (int da = -2 * N; da <= 2 * N; ++da)
    for (int db = -2 * N; db <= 2 * N; ++db) {
      const auto c = coeff(da, db);
      for (int i = 0; i < W; ++i)
        for (int j = 0; j < W; ++j) {
          const int i2 = i + da, j2 = j + db;
          if (i2 < 0 || i2 >= W || j2 < 0 || j2 >= W) continue;
          for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s) P((r * W + i2) * W + j2, (s * W + i) * W + j) = c(r, s);
        }
    }
  return P;
}

double dense_dirac_trace(const ProjectorField& f, int N, int pairs) {
  const int W = 2 * N + 1;
  const auto P = dense_window(f, N, 64);
  const int n = static_cast<int>(P.rows());
  Eigen::VectorXcd f0(n);
  for (int k = 0; k < n; ++k) {
    const int site = k % (W * W);
    const double m = site / W - N, nn = site % W - N;
    f0(k) = (m == 0 && nn == 0) ? cplx(1.0) : cplx(m, nn) / std::hypot(m, nn);
  }
  const Eigen::MatrixXcd F = f0.asDiagonal(), Fs = f0.conjugate().asDiagonal();
  const Eigen::MatrixXcd A = F * P - P * F, B = Fs * P - P * Fs;
  Eigen::MatrixXcd ab = Eigen::MatrixXcd::Identity(n, n), ba = ab;
  for (int k = 0; k < pairs; ++k) {
    ab = ab * A * B;
    ba = ba * B * A;
  }
  const double sign = pairs % 2 == 0 ? 1.0 : -1.0;
  return sign * ((P * ab).trace() - (P * ba).trace()).real();
}

}  // namespace

TEST_CASE("symmetries square to one and anticommute with the grading") {
  for (auto name : {ModuleName::z0, ModuleName::w0, ModuleName::z1, ModuleName::w1prime, ModuleName::dirac_T2,
                    ModuleName::del1_w1}) {
    const auto spec = FredholmModuleSpec::make(name, 5);
    const auto F = symmetry_operator(spec, 2).entries;
    CHECK((F * F - Eigen::MatrixXcd::Identity(F.rows(), F.cols())).norm() < 1e-12);
    CHECK((F - F.adjoint()).norm() < 1e-12);
    if (spec.parity == Parity::Even) {
      const auto g = grading_operator(spec, 2).entries;
      CHECK((g * F + F * g).norm() < 1e-12);
    }
  }
  CHECK_THROWS_AS(grading_operator(FredholmModuleSpec::make(ModuleName::z1, 4)), std::invalid_argument);
}

TEST_CASE("commutation relation holds on the interior") {
  const auto U = AlgebraElement::U(), V = AlgebraElement::V(), W = AlgebraElement::W();
  for (auto name : {ModuleName::z1, ModuleName::z1prime, ModuleName::del1_w1}) {
    const auto spec = FredholmModuleSpec::make(name, 6);
    const auto lhs = build_representation(spec, V * U);
    const auto rhs = build_representation(spec, W * U * V);
    const Eigen::MatrixXcd prod = build_representation(spec, V).entries * build_representation(spec, U).entries;
    for (int i = 0; i < lhs.entries.rows(); ++i) {
      if (lhs.boundary_distance[static_cast<std::size_t>(i)] < 2) continue;
      CHECK((lhs.entries.row(i) - rhs.entries.row(i)).norm() < 1e-12);
      CHECK((lhs.entries.row(i) - prod.row(i)).norm() < 1e-12);
    }
  }
}

TEST_CASE("generator images of the torus modules") {
  const auto spec1 = FredholmModuleSpec::make(ModuleName::w1, 6);
  const auto spec2 = FredholmModuleSpec::make(ModuleName::w1prime, 6);
  const int n = spec1.sites();
  const auto S = build_representation(spec1, AlgebraElement::U()).entries;
  CHECK(S(3, 4) == cplx(1.0));  // S e_4 = e_3
  CHECK(build_representation(spec1, AlgebraElement::W()).entries.isApprox(Eigen::MatrixXcd::Identity(n, n)));
  CHECK(build_representation(spec2, AlgebraElement::U()).entries.isApprox(Eigen::MatrixXcd::Identity(n, n)));
  CHECK(build_representation(spec2, AlgebraElement::W()).entries.isApprox(S));
  CHECK_THROWS_AS(build_representation(spec1, AlgebraElement::V()), std::invalid_argument);
  CHECK_THROWS_AS(build_representation(spec1, AlgebraElement::U(6)), std::invalid_argument);
}

TEST_CASE("Toeplitz indices") {
  const std::vector<int> t{16, 32, 48};
  const auto z1 = FredholmModuleSpec::make(ModuleName::z1, 16);
  CHECK(odd_pairing(z1, AlgebraMatrix::scalar(AlgebraElement::U()), t).index == 1);
  CHECK(odd_pairing(z1, AlgebraMatrix::scalar(AlgebraElement::U(-2)), t).index == -2);
  CHECK(odd_pairing(z1, AlgebraMatrix::scalar(AlgebraElement::V()), t).index == 0);
  const auto c = odd_pairing(FredholmModuleSpec::make(ModuleName::z1prime, 16), odd_generator_image("[V_a]"), t);
  CHECK(c.index == 1);
  CHECK(c.kernel_dims.size() == 3);
  CHECK_THROWS_AS(odd_pairing(z1, AlgebraMatrix::scalar(AlgebraElement::U() + AlgebraElement::V()), t),
                  std::invalid_argument);
}

TEST_CASE("FFT trace engine agrees with a dense evaluation") {
  const auto f = bott_projector(16, 1.0);
  TraceOptions opt;
  opt.probe_spacing = 9;  // the window width: one site per probe, so the probe sum is the exact trace
  for (int pairs : {2, 3}) {
    const double fft = dirac_trace_raw(f, 4, 2 * pairs, opt, 40);
    const double dense = dense_dirac_trace(f, 4, pairs);
    CHECK(fft == doctest::Approx(dense).epsilon(1e-6));
  }
}

TEST_CASE("lattice Chern numbers") {
  CHECK(lattice_chern(bott_projector(16, 1.0)) == 1);
  CHECK(lattice_chern(two_band_projector(16, -1.0)) == -1);
  CHECK(lattice_chern(two_band_projector(16, 3.0)) == 0);
  CHECK_THROWS_AS(two_band_projector(16, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(bott_projector(16, 2.5), std::invalid_argument);
  CHECK(fourier_tail(bott_projector(32, 1.0), 40) < 1e-8);
}

TEST_CASE("finite-dimensional even pairings") {
  const auto z0 = FredholmModuleSpec::make(ModuleName::z0);
  CHECK(even_pairing_trace(z0, even_generator_image("[1]"), 2).value == 1);
  CHECK(even_pairing_trace(z0, even_generator_image("[P_a]"), 2).value == 1);
  CHECK_THROWS_AS(even_pairing_trace(z0, AlgebraMatrix::scalar(AlgebraElement::U()), 2), std::invalid_argument);
}

TEST_CASE("shear unitary intertwines the automorphism") {
  for (const auto& c : unitary_equivalence_check(16, 6, 7)) {
    CHECK(c.cells > 0);
    CHECK(c.mismatches == 0);
  }
}
