#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxdatum/scalar.hpp"

namespace coxdatum {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over Scalar. Sizes here are the rank of the datum,
/// so nothing fancier is warranted.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const Field& field);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Matrix transposed() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& x);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Scalar dot(const Vec& a, const Vec& b);
Vec unit_vector(std::size_t n, std::size_t i, const Field& field);
Vec scaled(const Vec& v, const Scalar& c);
Vec added(const Vec& a, const Vec& b);

bool equal(const Vec& a, const Vec& b, const Field& field);
bool equal(const Matrix& a, const Matrix& b, const Field& field);
bool is_identity(const Matrix& m, const Field& field);

/// Rank by Gaussian elimination; pivots use Field::sign.
std::size_t rank(Matrix m, const Field& field);

/// True when x^T = y^T * m has a solution y, i.e. x lies in the row space.
bool in_row_space(const Matrix& m, const Vec& x, const Field& field);

/// Stable text key for a vector: exact rationals verbatim, floats snapped to
/// the epsilon grid. Used for deduplication.
std::string vector_key(const Vec& v, const Field& field);
std::string matrix_key(const Matrix& m, const Field& field);

}  // namespace coxdatum
