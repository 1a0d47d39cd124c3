#include "hnc/integer_matrix.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hnc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged integer matrix");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (auto v : a_)
    if (v != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("integer matrix size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k)
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row a -= f * row b
void add_row(IntMatrix& m, int a, int b, std::int64_t f) {
  for (int j = 0; j < m.cols(); ++j) m(a, j) -= f * m(b, j);
}
void add_col(IntMatrix& m, int a, int b, std::int64_t f) {
  for (int i = 0; i < m.rows(); ++i) m(i, a) -= f * m(i, b);
}
void negate_row(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), {}};
  IntMatrix& D = s.D;
  const int m = a.rows(), n = a.cols();
  for (int t = 0; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero |entry| in the trailing block
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi < 0 || std::abs(D(i, j)) < std::abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return s;
      swap_rows(D, t, pi);
      swap_rows(s.U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(s.V, t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        std::int64_t f = D(i, t) / D(t, t);
        add_row(D, i, t, f);
        add_row(s.U, i, t, f);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        std::int64_t f = D(t, j) / D(t, t);
        add_col(D, j, t, f);
        add_col(s.V, j, t, f);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any offending row into row t and repeat
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(D, t, bad, -1);
      add_row(s.U, t, bad, -1);
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(s.U, t);
    }
    s.invariants.push_back(D(t, t));
  }
  return s;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const auto s = smith_normal_form(a);
  const int r = s.rank();
  IntMatrix k(a.cols(), a.cols() - r);
  for (int j = r; j < a.cols(); ++j)
    for (int i = 0; i < a.cols(); ++i) k(i, j - r) = s.V(i, j);
  return k;
}

IntMatrix column_hnf(const IntMatrix& a) {
  // row-style HNF of the transpose, then transpose back
  IntMatrix h = a.transpose();
  const int m = h.rows(), n = h.cols();
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    for (;;) {
      int piv = -1;
      for (int i = row; i < m; ++i)
        if (h(i, col) != 0 && (piv < 0 || std::abs(h(i, col)) < std::abs(h(piv, col)))) piv = i;
      if (piv < 0) break;
      swap_rows(h, row, piv);
      bool done = true;
      for (int i = row + 1; i < m; ++i) {
        add_row(h, i, row, h(i, col) / h(row, col));
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (row < m && h(row, col) != 0) {
      if (h(row, col) < 0) negate_row(h, row);
      for (int i = 0; i < row; ++i) {
        std::int64_t f = h(i, col) / h(row, col);
        if (h(i, col) - f * h(row, col) < 0) --f;
        add_row(h, i, row, f);
      }
      ++row;
    }
  }
  IntMatrix out(n, row);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < n; ++j) out(j, i) = h(i, j);
  return out;
}

std::int64_t determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix m = a;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          sw = i;
          break;
        }
      if (sw < 0) return 0;
      swap_rows(m, k, sw);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace hnc
