#ifndef RIGIDKIT_FIELD_MATRIX_H_
#define RIGIDKIT_FIELD_MATRIX_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "rigidkit/field.h"
#include "rigidkit/rng.h"

namespace rigidkit {

using FieldVector = std::vector<FieldElement>;

// Dense row-major matrix over Z_p.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(int rows, int cols);

  static FieldMatrix Identity(int n);
  // Small literal matrices for tests and examples; entries reduced mod p.
  static FieldMatrix FromInts(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static FieldMatrix FromRows(const std::vector<FieldVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FieldElement& operator()(int r, int c) { return data_[Index(r, c)]; }
  FieldElement operator()(int r, int c) const { return data_[Index(r, c)]; }

  std::span<FieldElement> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<const FieldElement> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  FieldMatrix Transposed() const;
  FieldMatrix SelectRows(std::span<const int> row_indices) const;
  // M x.
  FieldVector Apply(std::span<const FieldElement> x) const;
  // y^T M.
  FieldVector ApplyTransposed(std::span<const FieldElement> y) const;
  bool IsZero() const;

  FieldMatrix& operator+=(const FieldMatrix& other);
  FieldMatrix& operator*=(FieldElement scalar);
  friend FieldMatrix operator+(FieldMatrix a, const FieldMatrix& b) { return a += b; }
  friend FieldMatrix operator*(FieldElement s, FieldMatrix m) { return m *= s; }
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t Index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<FieldElement> data_;
};

enum class KernelSide {
  kColumn,  // { v : M v = 0 }
  kRow,     // { v : v^T M = 0 }, the cokernel
};

// Exact rank by Gaussian elimination. The second overload visits pivot
// columns in `column_order` (a permutation of 0..cols-1); the result does not
// depend on it.
int Rank(const FieldMatrix& m);
int Rank(const FieldMatrix& m, std::span<const int> column_order);

// Basis of the requested kernel, one vector per free column of the reduced
// row echelon form: the free coordinate is 1, the other free coordinates are
// 0. Size is (cols - rank) for kColumn and (rows - rank) for kRow.
std::vector<FieldVector> NullspaceBasis(const FieldMatrix& m, KernelSide side);

// Reduced row echelon form; pivot columns are written to `pivots` if given.
FieldMatrix ReducedRowEchelon(const FieldMatrix& m, std::vector<int>* pivots = nullptr);

FieldMatrix LinearCombination(std::span<const FieldMatrix> mats,
                              std::span<const FieldElement> coefficients);

struct Combination {
  std::vector<FieldElement> coefficients;
  FieldMatrix sum;
};

// Draws one coefficient per matrix (uniform on Z_p, or on Z_p \ {0} when
// `nonzero_coefficients`) and returns sum_i t_i A_i. Throws
// std::invalid_argument on an empty list or mismatched shapes.
Combination RandomCombination(std::span<const FieldMatrix> mats, Rng& rng,
                              bool nonzero_coefficients = false);

}  // namespace rigidkit

#endif  // RIGIDKIT_FIELD_MATRIX_H_
