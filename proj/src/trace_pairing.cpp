#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fftw3.h>

#include "hnc/errors.hpp"
#include "hnc/fredholm.hpp"

namespace hnc {

namespace {

using cplx = std::complex<double>;

// Global orientation of the plaquette sum, fixed so that the Bott field at
// mass 1 has Chern number +1.
constexpr int kChernOrientation = 1;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool smooth_size(int n) {
  for (int f : {2, 3, 5, 7})
    while (n % f == 0) n /= f;
  return n == 1;
}

int next_smooth(int n) {
  while (!smooth_size(n)) ++n;
  return n;
}

std::vector<Eigen::MatrixXcd> sample(const Symbol& s, int grid) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(static_cast<std::size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) out.push_back(s(kTwoPi * i / grid, kTwoPi * j / grid));
  return out;
}

// Frobenius norms of the Fourier coefficients of the symbol on a G x G grid,
// indexed by frequency (a, b) with a, b in [0, G).
std::vector<double> coefficient_norms(const ProjectorField& field, int G) {
  const auto samples = sample(field.symbol, G);
  const int d = field.dim;
  std::vector<double> norm2(static_cast<std::size_t>(G) * G, 0.0);
  std::vector<cplx> buf(static_cast<std::size_t>(G) * G);
  auto* p = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan = fftw_plan_dft_2d(G, G, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      for (std::size_t k = 0; k < buf.size(); ++k) buf[k] = samples[k](r, c);
      fftw_execute(plan);
      const double scale = 1.0 / (static_cast<double>(G) * G);
      for (std::size_t k = 0; k < buf.size(); ++k) norm2[k] += std::norm(buf[k] * scale);
    }
  fftw_destroy_plan(plan);
  for (auto& v : norm2) v = std::sqrt(v);
  return norm2;
}

constexpr int kTailGrid = 256;

double tail_from_norms(const std::vector<double>& norms, int G, int radius) {
  double tail = 0.0;
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b) {
      const int fa = a < G / 2 ? a : G - a, fb = b < G / 2 ? b : G - b;
      if (std::max(fa, fb) >= radius) tail += norms[static_cast<std::size_t>(a) * G + b];
    }
  return tail;
}

// Smallest radius whose Fourier tail is below tol.
int certified_radius(const ProjectorField& field, double tol, double* tail) {
  const auto norms = coefficient_norms(field, kTailGrid);
  for (int R = 4; R <= 96; R += 4) {
    const double t = tail_from_norms(norms, kTailGrid, R);
    if (t < tol) {
      if (tail) *tail = t;
      return R;
    }
  }
  throw VerificationError("insufficient Fourier decay for the operator lift");
}

// pi0(p) on a (2N+1)^2 window of l^2(Z^2) tensor C^d, applied through a
// zero-padded FFT of size G >= window + Fourier radius.
class DiracEngine {
 public:
  DiracEngine(const ProjectorField& field, int N, int radius)
      : d_(field.dim), N_(N), W_(2 * N + 1), G_(next_smooth(2 * N + 1 + radius)) {
    const std::size_t gg = static_cast<std::size_t>(G_) * G_;
    buf_.assign(gg * static_cast<std::size_t>(d_), cplx{});
    tmp_.assign(gg * static_cast<std::size_t>(d_), cplx{});
    symbol_ = sample(field.symbol, G_);
    int n[2] = {G_, G_};
    auto* p = reinterpret_cast<fftw_complex*>(buf_.data());
    fwd_ = fftw_plan_many_dft(2, n, d_, p, nullptr, 1, static_cast<int>(gg), p, nullptr, 1,
                              static_cast<int>(gg), FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_many_dft(2, n, d_, p, nullptr, 1, static_cast<int>(gg), p, nullptr, 1,
                              static_cast<int>(gg), FFTW_BACKWARD, FFTW_ESTIMATE);
    f0_.resize(static_cast<std::size_t>(W_) * W_);
    for (int i = 0; i < W_; ++i)
      for (int j = 0; j < W_; ++j) {
        const double m = i - N, nn = j - N;
        f0_[static_cast<std::size_t>(i) * W_ + j] =
            (m == 0 && nn == 0) ? cplx(1.0) : cplx(m, nn) / std::hypot(m, nn);
      }
  }
  ~DiracEngine() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
  }
  DiracEngine(const DiracEngine&) = delete;
  DiracEngine& operator=(const DiracEngine&) = delete;

  int grid() const { return G_; }
  std::size_t size() const { return static_cast<std::size_t>(d_) * W_ * W_; }

  void apply_p(const std::vector<cplx>& in, std::vector<cplx>& out) {
    const std::size_t gg = static_cast<std::size_t>(G_) * G_;
    std::fill(buf_.begin(), buf_.end(), cplx{});
    for (int c = 0; c < d_; ++c)
      for (int i = 0; i < W_; ++i)
        for (int j = 0; j < W_; ++j) buf_[c * gg + static_cast<std::size_t>(i) * G_ + j] = in[idx(c, i, j)];
    fftw_execute(fwd_);
    for (std::size_t k = 0; k < gg; ++k) {
      const auto& s = symbol_[k];
      for (int r = 0; r < d_; ++r) {
        cplx acc = 0.0;
        for (int c = 0; c < d_; ++c) acc += s(r, c) * buf_[c * gg + k];
        tmp_[r * gg + k] = acc;
      }
    }
    std::copy(tmp_.begin(), tmp_.end(), buf_.begin());
    fftw_execute(bwd_);
    const double scale = 1.0 / static_cast<double>(gg);
    out.resize(size());
    for (int c = 0; c < d_; ++c)
      for (int i = 0; i < W_; ++i)
        for (int j = 0; j < W_; ++j) out[idx(c, i, j)] = buf_[c * gg + static_cast<std::size_t>(i) * G_ + j] * scale;
  }

  // [F0, P] v, or [F0*, P] v when conj_f is set
  void commutator(const std::vector<cplx>& v, std::vector<cplx>& out, bool conj_f) {
    std::vector<cplx> fv(v.size()), pv, pfv;
    for (std::size_t k = 0; k < v.size(); ++k) fv[k] = f(k, conj_f) * v[k];
    apply_p(v, pv);
    apply_p(fv, pfv);
    out.resize(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = f(k, conj_f) * pv[k] - pfv[k];
  }

  std::size_t idx(int c, int i, int j) const {
    return (static_cast<std::size_t>(c) * W_ + i) * W_ + j;
  }

 private:
  cplx f(std::size_t k, bool conj_f) const {
    const cplx z = f0_[k % (static_cast<std::size_t>(W_) * W_)];
    return conj_f ? std::conj(z) : z;
  }

  int d_, N_, W_, G_;
  std::vector<cplx> buf_, tmp_, f0_;
  std::vector<Eigen::MatrixXcd> symbol_;
  fftw_plan fwd_ = nullptr, bwd_ = nullptr;
};

cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

// Values for n = n0 and n0 + 1, where n counts pairs of commutators.
std::array<double, 2> dirac_trace_pair(const ProjectorField& field, int N, int n0,
                                       const TraceOptions& opt, int radius, int* grid) {
  DiracEngine eng(field, N, radius);
  if (grid) *grid = eng.grid();
  const int W = 2 * N + 1, L = std::max(1, opt.probe_spacing);
  const int top = (n0 + 2) / 2;  // highest power of AB needed
  std::array<cplx, 2> tab{}, tba{};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<cplx> v(eng.size()), tmp, pw;
  for (int comp = 0; comp < field.dim; ++comp)
    for (int cx = 0; cx < L; ++cx)
      for (int cy = 0; cy < L; ++cy) {
        std::fill(v.begin(), v.end(), cplx{});
        for (int i = cx; i < W; i += L)
          for (int j = cy; j < W; j += L) v[eng.idx(comp, i, j)] = coin(rng) ? 1.0 : -1.0;
        for (int order = 0; order < 2; ++order) {
          // chain w_j = (AB)^j v, or (BA)^j v
          std::vector<std::vector<cplx>> w{v};
          for (int j = 1; j <= top; ++j) {
            eng.commutator(w.back(), tmp, order == 0);
            std::vector<cplx> next;
            eng.commutator(tmp, next, order != 0);
            w.push_back(std::move(next));
          }
          for (int s = 0; s < 2; ++s) {
            const int m = n0 + s, a = m / 2, b = m - a;
            eng.apply_p(w[static_cast<std::size_t>(b)], pw);
            (order == 0 ? tab : tba)[static_cast<std::size_t>(s)] += dot(w[static_cast<std::size_t>(a)], pw);
          }
        }
      }
  std::array<double, 2> out{};
  for (int s = 0; s < 2; ++s) {
    const int m = n0 + s;
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    out[static_cast<std::size_t>(s)] = sign * (tab[static_cast<std::size_t>(s)] - tba[static_cast<std::size_t>(s)]).real();
  }
  return out;
}

EvenPairingCertificate accept_samples(std::vector<TraceSample> samples, double accept) {
  EvenPairingCertificate cert;
  cert.samples = std::move(samples);
  const double first = cert.samples.front().value;
  const long target = std::lround(first);
  for (const auto& s : cert.samples)
    if (std::abs(s.value - static_cast<double>(target)) > accept) {
      std::ostringstream os;
      os << "trace pairing not converged:";
      for (const auto& t : cert.samples) os << " [N=" << t.truncation << ",2n=" << t.n_commutators << "] " << t.value;
      throw VerificationError(os.str());
    }
  cert.value = static_cast<int>(target);
  return cert;
}

void require_commutators(int n_commutators) {
  if (n_commutators < 2 || n_commutators % 2 != 0)
    throw std::invalid_argument("number of commutators must be a positive even integer");
}

}  // namespace

ProjectorField ProjectorField::from_symbol(int grid, int dim, Symbol s, std::string label) {
  if (grid < 4) throw std::invalid_argument("projector grid too small");
  ProjectorField f;
  f.grid = grid;
  f.dim = dim;
  f.samples = sample(s, grid);
  f.symbol = std::move(s);
  f.label = std::move(label);
  return f;
}

int ProjectorField::check_projector(double tol) const {
  int rank = -1;
  for (const auto& p : samples) {
    if ((p - p.adjoint()).norm() > tol) throw std::invalid_argument("projector field is not Hermitian");
    if ((p * p - p).norm() > tol) throw std::invalid_argument("projector field is not idempotent");
    const double tr = p.trace().real();
    const int r = static_cast<int>(std::lround(tr));
    if (std::abs(tr - r) > tol) throw std::invalid_argument("projector trace is not an integer");
    if (rank >= 0 && r != rank) throw std::invalid_argument("projector field changes rank");
    rank = r;
  }
  return rank;
}

ProjectorField two_band_projector(int grid, double mass) {
  for (double gapless : {-2.0, 0.0, 2.0})
    if (std::abs(mass - gapless) < 1e-12) throw std::invalid_argument("two-band family is gapless at this mass");
  Symbol s = [mass](double k1, double k2) {
    const double dx = std::sin(k1), dy = std::sin(k2), dz = mass + std::cos(k1) + std::cos(k2);
    const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
    Eigen::MatrixXcd h(2, 2);
    h << dz, cplx(dx, -dy), cplx(dx, dy), -dz;
    return Eigen::MatrixXcd(0.5 * (Eigen::MatrixXcd::Identity(2, 2) - h / r));
  };
  std::ostringstream os;
  os << "two-band(mass=" << mass << ")";
  auto f = ProjectorField::from_symbol(grid, 2, s, os.str());
  f.check_projector();
  return f;
}

ProjectorField bott_projector(int grid, double mass) {
  if (grid < 8) throw std::invalid_argument("Bott projector needs grid >= 8");
  if (!(mass > 0.0 && mass < 2.0)) throw std::invalid_argument("Bott representative needs 0 < mass < 2");
  return two_band_projector(grid, mass);
}

ProjectorField constant_projector(int grid, const Eigen::MatrixXcd& p) {
  auto f = ProjectorField::from_symbol(grid, static_cast<int>(p.rows()), [p](double, double) { return p; }, "constant");
  f.check_projector();
  return f;
}

ProjectorField field_from_algebra(int grid, const AlgebraMatrix& p) {
  // U -> e^{i k1}, V -> e^{i k2}, W -> 1
  AlgebraMatrix q(p.dim());
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j) q(i, j) = quotient_to_torus(p(i, j));
  Symbol s = [q](double k1, double k2) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(q.dim(), q.dim());
    for (int i = 0; i < q.dim(); ++i)
      for (int j = 0; j < q.dim(); ++j)
        for (const auto& [g, c] : q(i, j).terms())
          m(i, j) += c.to_complex() * std::polar(1.0, static_cast<double>(g.p) * k1 + static_cast<double>(g.q) * k2);
    return m;
  };
  auto f = ProjectorField::from_symbol(grid, p.dim(), s, "algebra");
  f.check_projector();
  return f;
}

double lattice_chern_raw(const ProjectorField& field) {
  const int G = field.grid;
  double sum = 0.0;
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) {
      const int i1 = (i + 1) % G, j1 = (j + 1) % G;
      const cplx loop = (field.at(i, j) * field.at(i1, j) * field.at(i1, j1) * field.at(i, j1)).trace();
      sum += std::arg(loop);
    }
  return kChernOrientation * sum / kTwoPi;
}

int lattice_chern(const ProjectorField& field) {
  field.check_projector();
  const auto quantized = [](double raw) {
    const long c = std::lround(raw);
    if (std::abs(raw - static_cast<double>(c)) > 0.01) {
      std::ostringstream os;
      os << "plaquette sum not quantized: " << raw;
      throw VerificationError(os.str());
    }
    return static_cast<int>(c);
  };
  const int c = quantized(lattice_chern_raw(field));
  const auto finer = ProjectorField::from_symbol(2 * field.grid, field.dim, field.symbol, field.label);
  if (quantized(lattice_chern_raw(finer)) != c)
    throw VerificationError("lattice Chern number changes under grid refinement");
  return c;
}

double fourier_tail(const ProjectorField& field, int radius) {
  return tail_from_norms(coefficient_norms(field, kTailGrid), kTailGrid, radius);
}

double dirac_trace_raw(const ProjectorField& field, int truncation, int n_commutators,
                       const TraceOptions& opt, int fourier_radius, int* fft_grid) {
  require_commutators(n_commutators);
  return dirac_trace_pair(field, truncation, n_commutators / 2, opt, fourier_radius, fft_grid)[0];
}

EvenPairingCertificate dirac_even_pairing(const ProjectorField& field, int truncation,
                                          int n_commutators, const TraceOptions& opt) {
  require_commutators(n_commutators);
  if (truncation < 2) throw std::invalid_argument("truncation too small");
  field.check_projector();
  double tail = 0.0;
  const int radius = certified_radius(field, opt.tail_tol, &tail);
  std::vector<int> truncs = opt.truncations.empty() ? std::vector<int>{truncation, truncation + 16} : opt.truncations;
  if (truncs.size() < 2) throw std::invalid_argument("trace pairing needs two truncations");
  std::vector<TraceSample> samples;
  std::vector<int> grids;
  for (int N : truncs) {
    int grid = 0;
    const auto v = dirac_trace_pair(field, N, n_commutators / 2, opt, radius, &grid);
    samples.push_back({N, n_commutators, v[0]});
    samples.push_back({N, n_commutators + 2, v[1]});
    grids.push_back(grid);
  }
  auto cert = accept_samples(std::move(samples), opt.accept);
  cert.fourier_radius = radius;
  cert.tail_bound = tail;
  cert.fft_grids = grids;
  return cert;
}

EvenPairingCertificate even_pairing_trace(const FredholmModuleSpec& spec, const AlgebraMatrix& p,
                                          int n_commutators, const TraceOptions& opt) {
  require_commutators(n_commutators);
  if (spec.parity != Parity::Even) throw std::invalid_argument("even pairing needs an even module");
  if (!p.is_projection()) throw std::invalid_argument("input is not a projection");

  if (spec.base == BaseSpace::L2Z2Pair) {
    if (spec.name == ModuleName::dirac_T2)
      for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < p.dim(); ++j)
          for (const auto& [g, c] : p(i, j).terms())
            if (g.r != 0) throw std::invalid_argument("W is not in the algebra of module dirac_T2");
    return dirac_even_pairing(field_from_algebra(16, p), spec.truncation, n_commutators, opt);
  }

  // finite-dimensional module: exact dense evaluation
  const auto pp = build_representation(spec, p).entries;
  const auto F = symmetry_operator(spec, p.dim()).entries;
  const auto gamma = grading_operator(spec, p.dim()).entries;
  const Eigen::MatrixXcd C = F * pp - pp * F;
  std::vector<TraceSample> samples;
  for (int m : {n_commutators, n_commutators + 2}) {
    Eigen::MatrixXcd M = gamma * pp;
    for (int k = 0; k < m; ++k) M = M * C;
    const double sign = (m / 2) % 2 == 0 ? 1.0 : -1.0;
    samples.push_back({spec.truncation, m, sign * M.trace().real()});
  }
  return accept_samples(std::move(samples), opt.accept);
}

}  // namespace hnc
