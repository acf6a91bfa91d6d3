#include "fundament/matrix.hpp"

#include <algorithm>

#include "fundament/error.hpp"

namespace fundament {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

Matrix Matrix::from_rows(const FieldPtr& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorKind::InvalidArgument, "row has the wrong length");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

Matrix Matrix::from_columns(const FieldPtr& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(ErrorKind::InvalidArgument, "column has the wrong length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) fail(ErrorKind::InvalidArgument, "vector has the wrong length");
  Vector out(rows_, 0);
  const auto& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    FieldElem s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] && at(i, j)) s = f.add(s, f.mul(at(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElem x) { return x == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix shapes do not match");
  Matrix c(a.field_, a.rows_, b.cols_);
  const auto& f = *a.field_;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      FieldElem x = a.at(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        FieldElem y = b.at(k, j);
        if (y) c.at(i, j) = f.add(c.at(i, j), f.mul(x, y));
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::InvalidArgument, "matrix shapes do not match");
  Matrix c(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::InvalidArgument, "matrix shapes do not match");
  Matrix c(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
  return c;
}

Matrix Matrix::scaled(FieldElem c) const {
  Matrix m(*this);
  for (auto& x : m.data_) x = field_->mul(c, x);
  return m;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  auto& a = e.reduced;
  const auto& f = *m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    FieldElem s = f.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(s, a.at(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      FieldElem t = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a.at(r, j)) a.at(i, j) = f.sub(a.at(i, j), f.mul(t, a.at(r, j)));
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix nullspace(const Matrix& m) {
  auto e = rref(m);
  const auto& f = *m.field();
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced.at(i, free));
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(m.field(), m.cols(), basis);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field()->one();
  }
  auto e = rref(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.reduced.at(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) fail(ErrorKind::InvalidArgument, "right-hand side has the wrong length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced.at(i, m.cols());
  return x;
}

Matrix row_space(const Matrix& m) {
  auto e = rref(m);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < e.rank(); ++i) rows.push_back(e.reduced.row(i));
  return Matrix::from_rows(m.field(), m.cols(), rows);
}

SpanBasis::SpanBasis(FieldPtr field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

Vector SpanBasis::reduce(Vector v, Vector* combo) const {
  const auto& f = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    FieldElem c = v[pivot_[r]];
    if (!c) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (rows_[r][j]) v[j] = f.sub(v[j], f.mul(c, rows_[r][j]));
    if (combo)
      for (std::size_t k = 0; k < combos_[r].size(); ++k)
        if (combos_[r][k]) (*combo)[k] = f.add((*combo)[k], f.mul(c, combos_[r][k]));
  }
  return v;
}

bool SpanBasis::add(const Vector& v) {
  if (v.size() != ambient_) fail(ErrorKind::InvalidArgument, "vector has the wrong length");
  const auto& f = *field_;
  Vector combo(originals_.size() + 1, 0);
  Vector w = reduce(v, &combo);
  std::size_t p = 0;
  while (p < ambient_ && w[p] == 0) ++p;
  if (p == ambient_) return false;
  // w = v - Σ combo_k originals_k; new row = w / w[p]
  FieldElem s = f.inv(w[p]);
  for (auto& x : w) x = f.mul(s, x);
  Vector row_combo(originals_.size() + 1, 0);
  for (std::size_t k = 0; k < originals_.size(); ++k) row_combo[k] = f.mul(s, f.neg(combo[k]));
  row_combo[originals_.size()] = s;
  for (auto& c : combos_) c.push_back(0);
  rows_.push_back(std::move(w));
  pivot_.push_back(p);
  combos_.push_back(std::move(row_combo));
  originals_.push_back(v);
  return true;
}

bool SpanBasis::contains(const Vector& v) const { return is_zero(reduce(v, nullptr)); }

std::optional<Vector> SpanBasis::coordinates(const Vector& v) const {
  if (v.size() != ambient_) fail(ErrorKind::InvalidArgument, "vector has the wrong length");
  Vector combo(originals_.size(), 0);
  Vector w = reduce(v, &combo);
  if (!is_zero(w)) return std::nullopt;
  return combo;
}

std::vector<std::size_t> SpanBasis::completing_units() const {
  SpanBasis copy(*this);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i) {
    Vector e(ambient_, 0);
    e[i] = field_->one();
    if (copy.add(e)) out.push_back(i);
  }
  return out;
}

Vector add(const FieldPtr& f, const Vector& a, const Vector& b) {
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = f->add(a[i], b[i]);
  return c;
}

Vector scale(const FieldPtr& f, FieldElem c, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f->mul(c, a[i]);
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](FieldElem x) { return x == 0; });
}

}  // namespace fundament
