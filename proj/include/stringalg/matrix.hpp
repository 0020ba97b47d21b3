#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stringalg/field.hpp"

namespace stringalg {

// Dense exact matrix. Rows/cols may be zero; every operation must cope with
// empty shapes (zero modules are everyday inputs here).
class Matrix {
 public:
  Matrix() : field_(FieldSpec::Q()), rows_(0), cols_(0) {}
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Matrix pow(std::size_t n) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> col(std::size_t j) const;
  Matrix cols_slice(std::size_t from, std::size_t to) const;  // [from, to)
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;       // A v
  std::vector<Scalar> apply_left(const std::vector<Scalar>& v) const;  // v A

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

// In-place reduced row echelon form; returns pivot column indices.
// Zero rows are dropped, pivots are 1 and their columns are cleared.
std::vector<std::size_t> rref_in_place(Matrix& m);

struct Rref {
  Matrix mat;
  std::vector<std::size_t> pivots;
};
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of the right null space {x : A x = 0}, returned as rows of a matrix
// in reduced echelon form.
Matrix kernel_basis(const Matrix& a);

// Inverse of a square matrix; throws domain_error if singular.
Matrix inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

// One solution x of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

// Vector helpers over a fixed field.
std::vector<Scalar> zero_vector(const FieldSpec& f, std::size_t n);
std::vector<Scalar> unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
std::vector<Scalar> add(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> sub(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> scale(const Scalar& c, const std::vector<Scalar>& v);
bool is_zero_vector(const std::vector<Scalar>& v);

}  // namespace stringalg
