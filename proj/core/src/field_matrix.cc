#include "rigidkit/field_matrix.h"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace rigidkit {
namespace {

// Forward elimination over a copy. Returns the rank; when `rref` is set the
// matrix is left in reduced row echelon form and pivot columns are recorded.
int Eliminate(FieldMatrix& a, std::span<const int> column_order, bool rref,
              std::vector<int>* pivots) {
  const int rows = a.rows();
  int rank = 0;
  for (const int col : column_order) {
    if (rank == rows) break;
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!a(r, col).IsZero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      auto x = a.row(pivot);
      auto y = a.row(rank);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    auto prow = a.row(rank);
    const FieldElement inv = prow[col].Inverse();
    if (rref) {
      for (auto& x : prow) x *= inv;
    }
    const int first = rref ? 0 : rank + 1;
    for (int r = first; r < rows; ++r) {
      if (r == rank) continue;
      auto cur = a.row(r);
      if (cur[col].IsZero()) continue;
      const FieldElement factor = rref ? cur[col] : cur[col] * inv;
      for (int c = 0; c < a.cols(); ++c) {
        if (!prow[c].IsZero()) cur[c] -= factor * prow[c];
      }
    }
    if (pivots != nullptr) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

std::vector<int> IdentityOrder(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

FieldMatrix::FieldMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, FieldElement());
}

FieldMatrix FieldMatrix::Identity(int n) {
  FieldMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = FieldElement(1);
  return m;
}

FieldMatrix FieldMatrix::FromInts(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  FieldMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
    int j = 0;
    for (const std::int64_t v : row) m(i, j++) = FieldElement::FromInt(v);
    ++i;
  }
  return m;
}

FieldMatrix FieldMatrix::FromRows(const std::vector<FieldVector>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  FieldMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

FieldMatrix FieldMatrix::Transposed() const {
  FieldMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

FieldMatrix FieldMatrix::SelectRows(std::span<const int> row_indices) const {
  FieldMatrix s(static_cast<int>(row_indices.size()), cols_);
  for (std::size_t i = 0; i < row_indices.size(); ++i) {
    const int r = row_indices[i];
    if (r < 0 || r >= rows_) throw std::out_of_range("row index out of range");
    auto src = row(r);
    std::copy(src.begin(), src.end(), s.row(static_cast<int>(i)).begin());
  }
  return s;
}

FieldVector FieldMatrix::Apply(std::span<const FieldElement> x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Apply: size mismatch");
  FieldVector y(rows_);
  for (int r = 0; r < rows_; ++r) {
    FieldElement acc;
    auto rr = row(r);
    for (int c = 0; c < cols_; ++c) acc += rr[c] * x[c];
    y[r] = acc;
  }
  return y;
}

FieldVector FieldMatrix::ApplyTransposed(std::span<const FieldElement> y) const {
  if (static_cast<int>(y.size()) != rows_) {
    throw std::invalid_argument("ApplyTransposed: size mismatch");
  }
  FieldVector x(cols_);
  for (int r = 0; r < rows_; ++r) {
    if (y[r].IsZero()) continue;
    auto rr = row(r);
    for (int c = 0; c < cols_; ++c) x[c] += y[r] * rr[c];
  }
  return x;
}

bool FieldMatrix::IsZero() const {
  for (const auto& x : data_) {
    if (!x.IsZero()) return false;
  }
  return true;
}

FieldMatrix& FieldMatrix::operator+=(const FieldMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

FieldMatrix& FieldMatrix::operator*=(FieldElement scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

int Rank(const FieldMatrix& m) {
  FieldMatrix a = m;
  const auto order = IdentityOrder(m.cols());
  return Eliminate(a, order, /*rref=*/false, nullptr);
}

int Rank(const FieldMatrix& m, std::span<const int> column_order) {
  if (static_cast<int>(column_order.size()) != m.cols()) {
    throw std::invalid_argument("column order must be a permutation of the columns");
  }
  std::vector<bool> seen(m.cols(), false);
  for (const int c : column_order) {
    if (c < 0 || c >= m.cols() || seen[c]) {
      throw std::invalid_argument("column order must be a permutation of the columns");
    }
    seen[c] = true;
  }
  FieldMatrix a = m;
  return Eliminate(a, column_order, /*rref=*/false, nullptr);
}

FieldMatrix ReducedRowEchelon(const FieldMatrix& m, std::vector<int>* pivots) {
  FieldMatrix a = m;
  if (pivots != nullptr) pivots->clear();
  const auto order = IdentityOrder(m.cols());
  Eliminate(a, order, /*rref=*/true, pivots);
  return a;
}

std::vector<FieldVector> NullspaceBasis(const FieldMatrix& m, KernelSide side) {
  if (side == KernelSide::kRow) return NullspaceBasis(m.Transposed(), KernelSide::kColumn);

  std::vector<int> pivots;
  const FieldMatrix rref = ReducedRowEchelon(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const int p : pivots) is_pivot[p] = true;

  std::vector<FieldVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(m.cols());
    v[free] = FieldElement(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -rref(static_cast<int>(i), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldMatrix LinearCombination(std::span<const FieldMatrix> mats,
                              std::span<const FieldElement> coefficients) {
  if (mats.empty()) throw std::invalid_argument("LinearCombination: empty list");
  if (mats.size() != coefficients.size()) {
    throw std::invalid_argument("LinearCombination: coefficient count mismatch");
  }
  FieldMatrix sum(mats[0].rows(), mats[0].cols());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != sum.rows() || mats[i].cols() != sum.cols()) {
      throw std::invalid_argument("LinearCombination: shape mismatch");
    }
    if (coefficients[i].IsZero()) continue;
    sum += coefficients[i] * mats[i];
  }
  return sum;
}

Combination RandomCombination(std::span<const FieldMatrix> mats, Rng& rng,
                              bool nonzero_coefficients) {
  if (mats.empty()) throw std::invalid_argument("RandomCombination: empty list");
  Combination out;
  out.coefficients.reserve(mats.size());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    out.coefficients.push_back(nonzero_coefficients ? rng.NextNonzeroField() : rng.NextField());
  }
  out.sum = LinearCombination(mats, out.coefficients);
  return out;
}

}  // namespace rigidkit
