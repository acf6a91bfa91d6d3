#pragma once

#include <optional>
#include <vector>

#include "fundament/field.hpp"

namespace fundament {

using Vector = std::vector<FieldElem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldPtr& field, std::size_t n);
  static Matrix from_rows(const FieldPtr& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldPtr& field, std::size_t rows, const std::vector<Vector>& cols);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  const std::vector<FieldElem>& data() const noexcept { return data_; }

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(FieldElem c) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  // Lexicographic on (rows, cols, entries); used to sort endomorphisms.
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> data_;
};

// Reduced row echelon form; `pivots[i]` is the pivot column of row i.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0} as the rows of the result.
Matrix nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& b);
// Rows of the rref of the row space, zero rows dropped.
Matrix row_space(const Matrix& m);

// Incrementally built span of vectors with coordinates relative to the
// vectors that were accepted as independent, in insertion order.
class SpanBasis {
 public:
  SpanBasis(FieldPtr field, std::size_t ambient);
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return originals_.size(); }
  const std::vector<Vector>& originals() const noexcept { return originals_; }

  // Adds v if it is independent of what is there; returns whether it was.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::optional<Vector> coordinates(const Vector& v) const;
  // Indices of the unit vectors that, tried in order, complete the current
  // span to the whole space.
  std::vector<std::size_t> completing_units() const;

 private:
  Vector reduce(Vector v, Vector* combo) const;

  FieldPtr field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;      // echelon rows, pivot entry 1
  std::vector<std::size_t> pivot_;
  std::vector<Vector> combos_;    // rows_[i] = Σ combos_[i][k] originals_[k]
  std::vector<Vector> originals_;
};

Vector add(const FieldPtr& f, const Vector& a, const Vector& b);
Vector scale(const FieldPtr& f, FieldElem c, const Vector& a);
bool is_zero(const Vector& v);

}  // namespace fundament
