#include "stringalg/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace stringalg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::Fp(std::int64_t p) {
  if (!is_prime(p)) throw domain_error("field characteristic must be prime, got " + std::to_string(p));
  return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::rationals ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& f) { return of_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, std::int64_t v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::rationals) {
    s.q_ = BigRat(v);
    s.r_ = 0;
  } else {
    std::int64_t r = v % f.p;
    if (r < 0) r += f.p;
    s.r_ = r;
  }
  return s;
}

Scalar Scalar::rational(BigRat q) {
  Scalar s;
  s.field_ = FieldSpec::Q();
  s.q_ = std::move(q);
  s.r_ = 0;
  return s;
}

Scalar Scalar::residue(std::int64_t v, std::int64_t p) {
  return of_int(FieldSpec::Fp(p), v);
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::rationals ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw domain_error("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(*this);
  if (field_.kind == FieldKind::rationals)
    s.q_ += o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(*this);
  if (field_.kind == FieldKind::rationals)
    s.q_ -= o.q_;
  else
    s.r_ = (r_ - o.r_ % field_.p + field_.p) % field_.p;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(*this);
  if (field_.kind == FieldKind::rationals)
    s.q_ *= o.q_;
  else
    s.r_ = (r_ * o.r_) % field_.p;  // p is small; no overflow at desk scale
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.kind == FieldKind::rationals)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

namespace {
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw domain_error("element not invertible mod " + std::to_string(p));
  return (t % p + p) % p;
}
}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) throw domain_error("division by zero in " + field_.to_string());
  Scalar s(*this);
  if (field_.kind == FieldKind::rationals)
    s.q_ = BigRat(1) / q_;
  else
    s.r_ = mod_inverse(r_, field_.p);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.kind == FieldKind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (field_.kind == FieldKind::prime) return std::to_string(r_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

}  // namespace stringalg
