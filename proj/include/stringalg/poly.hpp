#pragma once

#include <string>
#include <vector>

#include "stringalg/matrix.hpp"

namespace stringalg {

// Dense univariate polynomial; coefficients ascending, no trailing zeros.
class Poly {
 public:
  explicit Poly(FieldSpec f) : field_(f) {}
  Poly(FieldSpec f, std::vector<Scalar> coeffs);

  static Poly zero(const FieldSpec& f) { return Poly(f); }
  static Poly constant(const Scalar& c);
  static Poly variable(const FieldSpec& f);  // T
  static Poly monomial(const FieldSpec& f, std::size_t k, const Scalar& c);

  const FieldSpec& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // zero -> -1
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t k) const;
  Scalar lead() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Scalar& c) const;
  bool operator==(const Poly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;  // by degree, then coefficient order; for canonical reports

  Poly monic() const;
  Scalar eval(const Scalar& x) const;
  Matrix eval(const Matrix& a) const;

  std::string to_string() const;  // "T^2 + 3*T + 1"
 private:
  void trim();
  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

struct PolyDivMod {
  Poly quot;
  Poly rem;
};
PolyDivMod divmod(const Poly& a, const Poly& b);
bool divides(const Poly& a, const Poly& b);  // a | b
Poly gcd(const Poly& a, const Poly& b);      // monic
Poly lcm(const Poly& a, const Poly& b);      // monic

Poly parse_poly(const FieldSpec& f, const std::string& text);

// (g, multiplicity) pairs, g monic irreducible; input must be monic nonzero.
// Over Q the degree is capped (throws domain_error beyond the cap).
std::vector<std::pair<Poly, int>> factor_monic(const Poly& f, int q_degree_cap);

// Companion matrix of a monic polynomial.
Matrix companion(const Poly& f);

Poly min_poly(const Matrix& a);

// Reciprocal of a monic g with g(0) != 0, monic-normalized:
// the minimal polynomial of T^{-1} on k[T]/(g).
Poly reciprocal_monic(const Poly& g);

// Cyclic primary decomposition of (k^n, A): generators w with k[A]-annihilator
// g^e, such that k^n is the direct sum of the cyclic subspaces k[A]w.
struct CyclicBlock {
  Poly g;      // monic irreducible
  int power;   // e
  std::vector<Scalar> generator;
};
std::vector<CyclicBlock> cyclic_decomposition(const Matrix& a, int q_degree_cap);

}  // namespace stringalg
