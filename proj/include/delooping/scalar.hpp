#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dl {

class Scalar;

// Ground field: the rationals (p == 0) or a prime field GF(p).
class Field {
 public:
  Field() = default;
  explicit Field(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  Scalar zero() const;
  Scalar one() const;
  Scalar operator()(const mpq_class& v) const;
  Scalar operator()(long v) const;
  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_ = 0;
};

// An exact field element. Rationals are kept in lowest terms by GMP; residues
// are stored as integers in [0, p). A rational combined with a residue is
// first mapped into GF(p), so integer literals work in either field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : v_(v) {}
  Scalar(const mpq_class& v, std::uint32_t p = 0);

  std::uint32_t modulus() const { return p_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  // this -= a * b without a temporary Scalar
  void submul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void align(const Scalar& o);
  void reduce();

  mpq_class v_;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t p);

}  // namespace dl
