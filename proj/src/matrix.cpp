#include "stringalg/matrix.hpp"

#include <sstream>

namespace stringalg {

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw domain_error("ragged rows in matrix construction");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix sum shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix difference shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(*this);
  for (auto& x : r.data_) x = x * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(std::size_t n) const {
  if (rows_ != cols_) throw domain_error("pow of non-square matrix");
  Matrix acc = identity(field_, rows_);
  Matrix base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::cols_slice(std::size_t from, std::size_t to) const {
  Matrix r(field_, rows_, to - from);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = from; j < to; ++j) r.at(i, j - from) = at(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw domain_error("hstack row mismatch");
  Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw domain_error("vstack column mismatch");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw domain_error("matrix-vector shape mismatch");
  std::vector<Scalar> r = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

std::vector<Scalar> Matrix::apply_left(const std::vector<Scalar>& v) const {
  if (v.size() != rows_) throw domain_error("vector-matrix shape mismatch");
  std::vector<Scalar> r = zero_vector(field_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[j] = r[j] + v[i] * at(i, j);
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  // drop zero rows
  Matrix out(m.field(), pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  m = std::move(out);
  return pivots;
}

Rref rref(const Matrix& m) {
  Rref r{m, {}};
  r.pivots = rref_in_place(r.mat);
  return r;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& a) {
  Rref r = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(a.field(), free_cols.size(), n);
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t fc = free_cols[fi];
    k.at(fi, fc) = Scalar::one(a.field());
    for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
      k.at(fi, r.pivots[pi]) = -r.mat.at(pi, fc);
  }
  rref_in_place(k);
  return k;
}

bool is_invertible(const Matrix& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw domain_error("inverse of non-square matrix");
  Matrix aug = Matrix::hstack(a, Matrix::identity(a.field(), a.rows()));
  auto piv = rref_in_place(aug);
  if (piv.size() != a.rows()) throw domain_error("matrix not invertible");
  return aug.cols_slice(a.cols(), 2 * a.cols());
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw domain_error("solve shape mismatch");
  Matrix bm(a.field(), a.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm.at(i, 0) = b[i];
  Matrix aug = Matrix::hstack(a, bm);
  Rref r = rref(aug);
  std::vector<Scalar> x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[r.pivots[i]] = r.mat.at(i, a.cols());
  }
  return x;
}

std::vector<Scalar> zero_vector(const FieldSpec& f, std::size_t n) {
  return std::vector<Scalar>(n, Scalar::zero(f));
}

std::vector<Scalar> unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  auto v = zero_vector(f, n);
  v[i] = Scalar::one(f);
  return v;
}

std::vector<Scalar> add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw domain_error("vector sum shape mismatch");
  std::vector<Scalar> r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

std::vector<Scalar> sub(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw domain_error("vector difference shape mismatch");
  std::vector<Scalar> r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

std::vector<Scalar> scale(const Scalar& c, const std::vector<Scalar>& v) {
  std::vector<Scalar> r(v);
  for (auto& x : r) x = c * x;
  return r;
}

bool is_zero_vector(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace stringalg
