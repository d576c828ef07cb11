#include "coxdatum/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "coxdatum/errors.hpp"

namespace coxdatum {

Matrix Matrix::identity(std::size_t n, const Field& field) {
  Matrix m(n, n, field.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const Vec& r : rows) {
    if (r.size() != m.cols_) throw Error(ErrorKind::Parse, "ragged matrix rows");
    m.data_.insert(m.data_.end(), r.begin(), r.end());
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t;
  t.rows_ = cols_;
  t.cols_ = rows_;
  t.data_.reserve(data_.size());
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::Precondition, "matrix shape mismatch");
  Matrix c;
  c.rows_ = a.rows_;
  c.cols_ = b.cols_;
  c.data_.reserve(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Scalar acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
      c.data_.push_back(std::move(acc));
    }
  }
  return c;
}

Vec operator*(const Matrix& a, const Vec& x) {
  if (a.cols_ != x.size()) throw Error(ErrorKind::Precondition, "matrix-vector shape mismatch");
  Vec y;
  y.reserve(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Scalar acc = a(i, 0) * x[0];
    for (std::size_t k = 1; k < a.cols_; ++k) acc += a(i, k) * x[k];
    y.push_back(std::move(acc));
  }
  return y;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorKind::Precondition, "dot shape mismatch");
  Scalar acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec unit_vector(std::size_t n, std::size_t i, const Field& field) {
  Vec v(n, field.zero());
  v.at(i) = field.one();
  return v;
}

Vec scaled(const Vec& v, const Scalar& c) {
  Vec out;
  out.reserve(v.size());
  for (const Scalar& x : v) out.push_back(x * c);
  return out;
}

Vec added(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Precondition, "vector shape mismatch");
  Vec out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

bool equal(const Vec& a, const Vec& b, const Field& field) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!field.equal(a[i], b[i])) return false;
  return true;
}

bool equal(const Matrix& a, const Matrix& b, const Field& field) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!field.equal(a(i, j), b(i, j))) return false;
  return true;
}

bool is_identity(const Matrix& m, const Field& field) {
  return m.rows() == m.cols() && equal(m, Matrix::identity(m.rows(), field), field);
}

std::size_t rank(Matrix m, const Field& field) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    // Partial pivoting by magnitude keeps the float path stable; in exact
    // mode any nonzero pivot would do.
    std::size_t pivot = m.rows();
    double best = 0.0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (field.is_zero(m(i, col))) continue;
      const double mag = std::fabs(m(i, col).to_double());
      if (pivot == m.rows() || mag > best) {
        pivot = i;
        best = mag;
      }
    }
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (field.is_zero(m(i, col))) continue;
      const Scalar factor = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

bool in_row_space(const Matrix& m, const Vec& x, const Field& field) {
  if (x.size() != m.cols()) return false;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const std::size_t base = rank(m, field);
  rows.push_back(x);
  return rank(Matrix::from_rows(rows), field) == base;
}

std::string vector_key(const Vec& v, const Field& field) {
  std::string key;
  for (const Scalar& x : v) {
    if (!key.empty()) key += ',';
    if (field.mode() == Mode::Exact) {
      key += x.to_string();
    } else {
      double snapped = std::round(x.to_double() / field.epsilon());
      if (snapped == 0.0) snapped = 0.0;  // fold -0
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.0f", snapped);
      key += buf;
    }
  }
  return key;
}

std::string matrix_key(const Matrix& m, const Field& field) {
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    key += vector_key(m.row(i), field);
    key += ';';
  }
  return key;
}

}  // namespace coxdatum
