#include "hnc/fredholm.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hnc/errors.hpp"

namespace hnc {

namespace {

// How a module represents each generator.
enum class Img { One, Id, Shift1, Shift2, Undef };

struct GeneratorImages {
  Img u, v, w;
};

GeneratorImages images_of(ModuleName n) {
  switch (n) {
    case ModuleName::z0: return {Img::One, Img::One, Img::One};
    case ModuleName::w0: return {Img::One, Img::Undef, Img::One};
    case ModuleName::z1: return {Img::Shift1, Img::Id, Img::Id};
    case ModuleName::z1prime:
    case ModuleName::del0_w0: return {Img::Id, Img::Shift1, Img::Id};
    case ModuleName::w1: return {Img::Shift1, Img::Undef, Img::Id};
    case ModuleName::w1prime: return {Img::Id, Img::Undef, Img::Shift1};
    case ModuleName::dirac_T2: return {Img::Shift1, Img::Shift2, Img::Undef};
    case ModuleName::del1_w1: return {Img::Shift1, Img::Shift2, Img::Id};
  }
  throw std::invalid_argument("unknown module");
}

constexpr int kFar = INT_MAX / 4;

// Lattice shift of a monomial in the module, checking the generators it uses.
std::array<std::int64_t, 2> shift_of(const FredholmModuleSpec& spec, const GroupElement& g) {
  const auto im = images_of(spec.name);
  std::array<std::int64_t, 2> s{0, 0};
  const std::array<std::pair<Img, std::int64_t>, 3> parts{{{im.u, g.p}, {im.v, g.q}, {im.w, g.r}}};
  for (const auto& [img, e] : parts) {
    if (e == 0) continue;
    if (img == Img::Undef)
      throw std::invalid_argument("element uses a generator outside the algebra of module " +
                                  to_string(spec.name));
    if (img == Img::Shift1) s[0] += e;
    if (img == Img::Shift2) s[1] += e;
  }
  return s;
}

int boundary_distance_of_site(const FredholmModuleSpec& spec, int site) {
  const int N = spec.truncation;
  switch (spec.base) {
    case BaseSpace::C2: return kFar;
    case BaseSpace::L2Z: return N - std::abs(site - N);
    case BaseSpace::L2Z2Pair: {
      const int w = 2 * N + 1;
      return N - std::max(std::abs(site / w - N), std::abs(site % w - N));
    }
  }
  return 0;
}

TruncatedOperator blank(const FredholmModuleSpec& spec, int components) {
  TruncatedOperator t;
  t.spec = spec;
  t.components = components;
  const int sites = spec.sites();
  const int dim = spec.sheets() * components * sites;
  t.entries = Eigen::MatrixXcd::Zero(dim, dim);
  t.boundary_distance.resize(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) t.boundary_distance[static_cast<std::size_t>(i)] = boundary_distance_of_site(spec, i % sites);
  return t;
}

// Adds c * pi(monomial) into the (row component, col component) block of every sheet.
void add_monomial(TruncatedOperator& t, int rc, int cc, const GroupElement& g, std::complex<double> c) {
  const auto& spec = t.spec;
  const int sites = spec.sites();
  const auto s = shift_of(spec, g);
  for (int sheet = 0; sheet < spec.sheets(); ++sheet) {
    const int roff = (sheet * t.components + rc) * sites;
    const int coff = (sheet * t.components + cc) * sites;
    switch (spec.base) {
      case BaseSpace::C2:
        // psi on the first summand, zero on the second
        t.entries(roff, coff) += c;
        break;
      case BaseSpace::L2Z:
        // S^e e_k = e_{k-e}
        for (int k = 0; k < sites; ++k) {
          const std::int64_t row = k - s[0];
          if (row >= 0 && row < sites) t.entries(roff + row, coff + k) += c;
        }
        break;
      case BaseSpace::L2Z2Pair: {
        const int w = 2 * spec.truncation + 1;
        for (int i = 0; i < w; ++i)
          for (int j = 0; j < w; ++j) {
            const std::int64_t ri = i - s[0], rj = j - s[1];
            if (ri >= 0 && ri < w && rj >= 0 && rj < w)
              t.entries(roff + ri * w + rj, coff + i * w + j) += c;
          }
        break;
      }
    }
  }
}

void require_window(const FredholmModuleSpec& spec, std::int64_t radius) {
  if (spec.base != BaseSpace::C2 && spec.truncation < radius + 2)
    throw std::invalid_argument("truncation window too small for the support");
}

}  // namespace

FredholmModuleSpec FredholmModuleSpec::make(ModuleName name, int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be positive");
  FredholmModuleSpec s;
  s.name = name;
  s.truncation = truncation;
  switch (name) {
    case ModuleName::z0:
    case ModuleName::w0:
      s.parity = Parity::Even;
      s.base = BaseSpace::C2;
      break;
    case ModuleName::dirac_T2:
    case ModuleName::del1_w1:
      s.parity = Parity::Even;
      s.base = BaseSpace::L2Z2Pair;
      break;
    default:
      s.parity = Parity::Odd;
      s.base = BaseSpace::L2Z;
  }
  return s;
}

int FredholmModuleSpec::sites() const {
  switch (base) {
    case BaseSpace::C2: return 2;
    case BaseSpace::L2Z: return 2 * truncation + 1;
    case BaseSpace::L2Z2Pair: return (2 * truncation + 1) * (2 * truncation + 1);
  }
  return 0;
}

std::string to_string(ModuleName n) {
  switch (n) {
    case ModuleName::z0: return "z0";
    case ModuleName::z1: return "z1";
    case ModuleName::z1prime: return "z1prime";
    case ModuleName::w0: return "w0";
    case ModuleName::w1: return "w1";
    case ModuleName::w1prime: return "w1prime";
    case ModuleName::dirac_T2: return "dirac_T2";
    case ModuleName::del1_w1: return "del1_w1";
    case ModuleName::del0_w0: return "del0_w0";
  }
  return "?";
}

ModuleName parse_module_name(const std::string& s) {
  for (auto n : {ModuleName::z0, ModuleName::z1, ModuleName::z1prime, ModuleName::w0, ModuleName::w1,
                 ModuleName::w1prime, ModuleName::dirac_T2, ModuleName::del1_w1, ModuleName::del0_w0})
    if (to_string(n) == s) return n;
  throw std::invalid_argument("unknown Fredholm module '" + s + "'");
}

TruncatedOperator TruncatedOperator::adjoint() const {
  TruncatedOperator t = *this;
  t.entries = entries.adjoint();
  return t;
}

TruncatedOperator build_representation(const FredholmModuleSpec& spec, const AlgebraMatrix& x) {
  require_window(spec, x.support_radius());
  TruncatedOperator t = blank(spec, x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j)
      for (const auto& [g, c] : x(i, j).terms()) add_monomial(t, i, j, g, c.to_complex());
  return t;
}

TruncatedOperator build_representation(const FredholmModuleSpec& spec, const AlgebraElement& x) {
  return build_representation(spec, AlgebraMatrix::scalar(x));
}

TruncatedOperator symmetry_operator(const FredholmModuleSpec& spec, int components) {
  TruncatedOperator t = blank(spec, components);
  const int sites = spec.sites();
  switch (spec.base) {
    case BaseSpace::C2:
      for (int c = 0; c < components; ++c) {
        t.entries(c * 2, c * 2 + 1) = 1.0;
        t.entries(c * 2 + 1, c * 2) = 1.0;
      }
      break;
    case BaseSpace::L2Z:
      for (int c = 0; c < components; ++c)
        for (int k = 0; k < sites; ++k) t.entries(c * sites + k, c * sites + k) = k >= spec.truncation ? 1.0 : -1.0;
      break;
    case BaseSpace::L2Z2Pair: {
      const int w = 2 * spec.truncation + 1, N = spec.truncation;
      const int half = components * sites;
      for (int c = 0; c < components; ++c)
        for (int i = 0; i < w; ++i)
          for (int j = 0; j < w; ++j) {
            const double m = i - N, n = j - N;
            std::complex<double> f0 = (m == 0 && n == 0) ? 1.0 : std::complex<double>(m, n) / std::hypot(m, n);
            const int k = c * sites + i * w + j;
            t.entries(k, half + k) = f0;
            t.entries(half + k, k) = std::conj(f0);
          }
      break;
    }
  }
  return t;
}

TruncatedOperator grading_operator(const FredholmModuleSpec& spec, int components) {
  if (spec.parity != Parity::Even) throw std::invalid_argument("odd modules carry no grading");
  TruncatedOperator t = blank(spec, components);
  const int dim = static_cast<int>(t.entries.rows());
  for (int k = 0; k < dim; ++k) {
    bool upper = spec.base == BaseSpace::C2 ? (k % 2 == 0) : (k < dim / 2);
    t.entries(k, k) = upper ? 1.0 : -1.0;
  }
  return t;
}

TruncatedOperator compress_to_positive(const TruncatedOperator& t) {
  if (t.spec.base != BaseSpace::L2Z) throw std::invalid_argument("compression needs a line module");
  const int N = t.spec.truncation, sites = t.spec.sites();
  std::vector<int> keep;
  for (int c = 0; c < t.components; ++c)
    for (int k = N; k < sites; ++k) keep.push_back(c * sites + k);
  TruncatedOperator out;
  out.spec = t.spec;
  out.components = t.components;
  const auto n = static_cast<Eigen::Index>(keep.size());
  out.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out.entries(i, j) = t.entries(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  for (int k : keep) out.boundary_distance.push_back(t.boundary_distance[static_cast<std::size_t>(k)]);
  return out;
}

namespace {

// Number of vectors in span(Q) that live away from the cut.
int interior_count(const Eigen::MatrixXcd& Q, const std::vector<int>& dist, int margin) {
  if (Q.cols() == 0) return 0;
  Eigen::MatrixXcd cut = Eigen::MatrixXcd::Zero(Q.rows(), Q.cols());
  for (Eigen::Index i = 0; i < Q.rows(); ++i)
    if (dist[static_cast<std::size_t>(i)] < margin) cut.row(i) = Q.row(i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(cut.adjoint() * cut);
  int n = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double w = es.eigenvalues()(i);
    if (w > 0.2 && w < 0.8)
      throw VerificationError("kernel vector neither interior nor boundary-localized");
    if (w <= 0.2) ++n;
  }
  return n;
}

}  // namespace

IndexCertificate fredholm_index(const std::function<TruncatedOperator(int)>& build,
                                const std::vector<int>& truncations, double tol, int margin) {
  if (truncations.size() < 2) throw std::invalid_argument("index needs at least two truncations");
  IndexCertificate cert;
  for (int N : truncations) {
    const TruncatedOperator t = build(N);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(t.entries, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int nker = 0;
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) < tol)
        ++nker;
      else
        gap = std::min(gap, sv(i));
    }
    const Eigen::Index n = t.entries.rows();
    const int ker = interior_count(svd.matrixV().rightCols(nker), t.boundary_distance, margin);
    const int coker = interior_count(svd.matrixU().rightCols(nker), t.boundary_distance, margin);
    (void)n;
    cert.truncations.push_back(N);
    cert.kernel_dims.push_back(ker);
    cert.cokernel_dims.push_back(coker);
    cert.spectral_gaps.push_back(gap);
  }
  cert.index = cert.kernel_dims[0] - cert.cokernel_dims[0];
  for (std::size_t i = 1; i < cert.truncations.size(); ++i) {
    const int idx = cert.kernel_dims[i] - cert.cokernel_dims[i];
    if (idx != cert.index) {
      std::ostringstream os;
      os << "index not stabilized: " << cert.index << " at N=" << cert.truncations[0] << " but "
         << idx << " at N=" << cert.truncations[i];
      throw VerificationError(os.str());
    }
  }
  return cert;
}

IndexCertificate odd_pairing(const FredholmModuleSpec& spec, const AlgebraMatrix& u,
                             const std::vector<int>& truncations, double tol) {
  if (spec.parity != Parity::Odd) throw std::invalid_argument("odd pairing needs an odd module");
  if (!u.is_unitary()) throw std::invalid_argument("input is not unitary");
  const int margin = static_cast<int>(u.support_radius()) + 2;
  const auto build = [&](int N) {
    return compress_to_positive(build_representation(FredholmModuleSpec::make(spec.name, N), u));
  };
  return fredholm_index(build, truncations, tol, margin);
}

std::vector<IntertwinerCheck> unitary_equivalence_check(int truncation, int random_words,
                                                        std::uint64_t seed) {
  // pi0(U^p W^r) e_{m,n} = e_{m-p, n-r}; T0 e_{m,n} = e_{m,n-m}
  using Pt = std::array<std::int64_t, 2>;
  const auto pi0 = [](const GroupElement& g, Pt x) { return Pt{x[0] - g.p, x[1] - g.r}; };
  const auto T0 = [](Pt x) { return Pt{x[0], x[1] - x[0]}; };
  const auto T0inv = [](Pt x) { return Pt{x[0], x[1] + x[0]}; };
  const std::int64_t N = truncation;
  const auto inside = [N](Pt x) { return std::abs(x[0]) <= N && std::abs(x[1]) <= N; };

  std::vector<std::pair<std::string, AlgebraElement>> words{{"U", AlgebraElement::U()},
                                                            {"W", AlgebraElement::W()}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int w = 0; w < random_words; ++w) {
    AlgebraElement x = AlgebraElement::scalar(1);
    std::string name;
    for (int len = 0; len < 4; ++len) {
      switch (pick(rng)) {
        case 0: x = x * AlgebraElement::U(); name += "U"; break;
        case 1: x = x * AlgebraElement::U(-1); name += "U*"; break;
        case 2: x = x * AlgebraElement::W(); name += "W"; break;
        default: x = x * AlgebraElement::W(-1); name += "W*"; break;
      }
    }
    words.emplace_back(name, x);
  }

  std::vector<IntertwinerCheck> out;
  const std::int64_t interior = N / 4;
  for (const auto& [name, x] : words) {
    if (x.size() != 1) throw VerificationError("word did not reduce to a monomial");
    const GroupElement g = x.terms().begin()->first;
    const GroupElement ag = apply_automorphism(x, 1).terms().begin()->first;
    IntertwinerCheck chk{name, 0, 0};
    for (std::int64_t m = -interior; m <= interior; ++m)
      for (std::int64_t n = -interior; n <= interior; ++n) {
        const Pt e{m, n};
        const Pt t0 = T0(e);
        const Pt moved = pi0(g, t0);
        if (!inside(t0) || !inside(moved)) throw VerificationError("interior cell left the window");
        ++chk.cells;
        if (T0inv(moved) != pi0(ag, e)) ++chk.mismatches;
      }
    out.push_back(chk);
  }
  return out;
}

}  // namespace hnc
