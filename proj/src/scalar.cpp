#include "delooping/scalar.hpp"

#include "delooping/error.hpp"

namespace dl {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NonGradedRelation: return "NonGradedRelation";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::InvalidArrow: return "InvalidArrow";
    case ErrorKind::CharTooSmall: return "CharTooSmall";
    case ErrorKind::NoSplitFound: return "NoSplitFound";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::GraphTruncated: return "GraphTruncated";
    case ErrorKind::MethodUnavailable: return "MethodUnavailable";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::ConditionsFail: return "ConditionsFail";
    case ErrorKind::Usage: return "Usage";
  }
  return "Error";
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p != 0 && !is_prime(p))
    throw Error(ErrorKind::ValidationError, "field characteristic " + std::to_string(p) + " is not prime");
}

Scalar Field::zero() const { return Scalar(mpq_class(0), p_); }
Scalar Field::one() const { return Scalar(mpq_class(1), p_); }
Scalar Field::operator()(const mpq_class& v) const { return Scalar(v, p_); }
Scalar Field::operator()(long v) const { return Scalar(mpq_class(v), p_); }

std::string Field::name() const { return p_ == 0 ? "Q" : "GF " + std::to_string(p_); }

Scalar::Scalar(const mpq_class& v, std::uint32_t p) : v_(v), p_(p) {
  v_.canonicalize();
  reduce();
}

// Map a rational into [0, p) when p != 0.
void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class mod(p_);
  if (v_.get_den() != 1) {
    mpz_class den = v_.get_den() % mod;
    if (den < 0) den += mod;
    if (den == 0)
      throw Error(ErrorKind::ValidationError, "denominator divisible by the characteristic " + std::to_string(p_));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    mpz_class num = v_.get_num() * inv;
    v_ = mpq_class(num);
  }
  mpz_class r = v_.get_num() % mod;
  if (r < 0) r += mod;
  v_ = mpq_class(r);
}

void Scalar::align(const Scalar& o) {
  if (p_ == o.p_ || o.p_ == 0) return;
  if (p_ != 0)
    throw Error(ErrorKind::ValidationError, "mixing scalars from different prime fields");
  p_ = o.p_;
  reduce();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r = *this;
  if (p_ == 0) {
    r.v_ = 1 / v_;
    return r;
  }
  mpz_class mod(p_), inv;
  mpz_invert(inv.get_mpz_t(), v_.get_num_mpz_t(), mod.get_mpz_t());
  r.v_ = mpq_class(inv);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  align(o);
  if (o.p_ == p_) {
    v_ += o.v_;
  } else {
    Scalar t = o;
    t.align(*this);
    v_ += t.v_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  align(o);
  if (o.p_ == p_) {
    v_ -= o.v_;
  } else {
    Scalar t = o;
    t.align(*this);
    v_ -= t.v_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  align(o);
  if (o.p_ == p_) {
    v_ *= o.v_;
  } else {
    Scalar t = o;
    t.align(*this);
    v_ *= t.v_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::submul(const Scalar& a, const Scalar& b) {
  if (p_ == 0 && a.p_ == 0 && b.p_ == 0) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
    return;
  }
  *this -= a * b;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ == o.p_) return v_ == o.v_;
  Scalar a = *this;
  a -= o;
  return a.is_zero();
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace dl
