#pragma once

#include <vector>

#include "stringalg/matrix.hpp"

namespace stringalg {

// Subspace of k^n, stored as a reduced-row-echelon basis (rows = basis
// vectors). The representation is canonical, so equality is data equality.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(FieldSpec::Q(), 0, 0) {}
  Subspace(FieldSpec f, std::size_t ambient)
      : ambient_(ambient), basis_(f, 0, ambient) {}

  // Rows are echelonized; redundant generators collapse.
  static Subspace span(const Matrix& generators);
  static Subspace full(const FieldSpec& f, std::size_t ambient);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in this basis, if v lies in the subspace.
  std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

 private:
  std::size_t ambient_;
  Matrix basis_;
};

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

// Vectors completing a basis of u to one of w; requires u ⊆ w.
std::vector<std::vector<Scalar>> quotient_basis(const Subspace& u, const Subspace& w);

// {x : A x ∈ u}
Subspace preimage(const Matrix& a, const Subspace& u);
// {A x : x ∈ u}
Subspace image(const Matrix& a, const Subspace& u);
// {x : A x = 0}
Subspace kernel(const Matrix& a);

}  // namespace stringalg
