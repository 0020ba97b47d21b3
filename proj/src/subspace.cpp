#include "stringalg/subspace.hpp"

namespace stringalg {

Subspace Subspace::span(const Matrix& generators) {
  Subspace s(generators.field(), generators.cols());
  s.basis_ = generators;
  rref_in_place(s.basis_);
  return s;
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  Subspace s(f, ambient);
  s.basis_ = Matrix::identity(f, ambient);
  return s;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw domain_error("vector/subspace ambient mismatch");
  // reduce v against the echelon basis
  std::vector<Scalar> w(v);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient_ && r < basis_.rows(); ++c) {
    if (!basis_.at(r, c).is_zero()) {
      if (!w[c].is_zero()) {
        Scalar f = w[c];
        for (std::size_t j = c; j < ambient_; ++j) w[j] = w[j] - f * basis_.at(r, j);
      }
      ++r;
    }
  }
  return is_zero_vector(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw domain_error("vector/subspace ambient mismatch");
  std::vector<Scalar> w(v);
  std::vector<Scalar> coeff = zero_vector(field(), basis_.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient_ && r < basis_.rows(); ++c) {
    if (!basis_.at(r, c).is_zero()) {
      if (!w[c].is_zero()) {
        Scalar f = w[c];
        coeff[r] = f;
        for (std::size_t j = c; j < ambient_; ++j) w[j] = w[j] - f * basis_.at(r, j);
      }
      ++r;
    }
  }
  if (!is_zero_vector(w)) return std::nullopt;
  return coeff;
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw domain_error("subspace sum ambient mismatch");
  return Subspace::span(Matrix::vstack(u.basis(), w.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw domain_error("subspace intersection ambient mismatch");
  // x = a U = b W; kernel of [U^T | -W^T] gives the (a,b) pairs.
  Matrix ut = u.basis().transpose();
  Matrix wt = w.basis().transpose().scaled(-Scalar::one(u.field()));
  Matrix stacked = Matrix::hstack(ut, wt);
  Matrix ker = kernel_basis(stacked);
  Matrix gens(u.field(), ker.rows(), u.ambient());
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    std::vector<Scalar> a(ker.row(i).begin(), ker.row(i).begin() + u.dim());
    auto x = u.basis().apply_left(a);
    for (std::size_t j = 0; j < u.ambient(); ++j) gens.at(i, j) = x[j];
  }
  return Subspace::span(gens);
}

std::vector<std::vector<Scalar>> quotient_basis(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw domain_error("quotient_basis ambient mismatch");
  if (!w.contains(u)) throw domain_error("quotient_basis requires U ⊆ W");
  std::vector<std::vector<Scalar>> out;
  Subspace acc = u;
  for (std::size_t i = 0; i < w.basis().rows(); ++i) {
    auto v = w.basis().row(i);
    if (!acc.contains(v)) {
      out.push_back(v);
      Matrix m(u.field(), 1, u.ambient());
      for (std::size_t j = 0; j < u.ambient(); ++j) m.at(0, j) = v[j];
      acc = sum(acc, Subspace::span(m));
    }
  }
  return out;
}

Subspace preimage(const Matrix& a, const Subspace& u) {
  if (a.rows() != u.ambient()) throw domain_error("preimage ambient mismatch");
  // U = {z : N z = 0} for N the kernel of U-as-row-matrix acting on the right;
  // then {x : A x ∈ U} = ker(N A) where rows of N span the dual complement.
  Matrix n = kernel_basis(u.basis());  // rows y with U y = 0
  return kernel(n * a);
}

Subspace image(const Matrix& a, const Subspace& u) {
  if (a.cols() != u.ambient()) throw domain_error("image ambient mismatch");
  return Subspace::span(u.basis() * a.transpose());
}

Subspace kernel(const Matrix& a) { return Subspace::span(kernel_basis(a)); }

}  // namespace stringalg
