#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hnc {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return a_[idx(i, j)]; }
  std::int64_t operator()(int i, int j) const { return a_[idx(i, j)]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> a_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<std::int64_t> invariants;  // nonzero diagonal entries
  int rank() const { return static_cast<int>(invariants.size()); }
};

SmithForm smith_normal_form(const IntMatrix& a);
// Columns form a basis of the integer kernel (always saturated).
IntMatrix kernel_basis(const IntMatrix& a);
// Column-style Hermite normal form of the lattice spanned by the columns.
IntMatrix column_hnf(const IntMatrix& a);
std::int64_t determinant(const IntMatrix& a);
std::string to_string(const IntMatrix& m);

}  // namespace hnc
