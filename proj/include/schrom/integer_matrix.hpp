#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schrom/state_complex.hpp"

namespace schrom {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> values);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_sparse(const SparseMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntegerMatrix column(std::size_t c) const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Invariant factors d1 | d2 | ... | dr of m (r = rank), all positive.
std::vector<Integer> smith_normal_form(const IntegerMatrix& m);

/// Same result as smith_normal_form, computed by sparse elimination on unit
/// pivots followed by a dense reduction of whatever remains. Runs in 64-bit
/// arithmetic and restarts with arbitrary precision on overflow.
std::vector<Integer> sparse_invariant_factors(const SparseMatrix& m);

/// m * transform = reduced, with transform unimodular and inverse = transform^-1.
/// The first `rank` columns of `reduced` are nonzero and the rest are zero, so
/// the trailing columns of `transform` span the kernel.
struct ColumnEchelon {
  IntegerMatrix reduced;
  IntegerMatrix transform;
  IntegerMatrix inverse;
  std::size_t rank = 0;
};

ColumnEchelon column_echelon(const IntegerMatrix& m);

/// Columns form a basis of the integer kernel {v : m v = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

}  // namespace schrom
