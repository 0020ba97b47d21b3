#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "stringalg/errors.hpp"

namespace stringalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime };

// The ground field: Q or F_p with p prime.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::int64_t p = 0;  // modulus, prime kind only

  static FieldSpec Q() { return FieldSpec{FieldKind::rationals, 0}; }
  static FieldSpec Fp(std::int64_t p);

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  std::string to_string() const;
};

bool is_prime(std::int64_t n);

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (cpp_rational canonicalizes); residues are stored in 0..p-1.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::Q()), r_(0) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, std::int64_t v);
  static Scalar rational(BigRat q);
  static Scalar residue(std::int64_t v, std::int64_t p);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Only meaningful for the matching kind.
  const BigRat& rat() const { return q_; }
  std::int64_t res() const { return r_; }

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  BigRat q_;         // rationals payload
  std::int64_t r_;   // prime-field payload
};

}  // namespace stringalg
