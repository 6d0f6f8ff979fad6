// Exact coefficient arithmetic: rationals (default) or a prime field F_p.
// Every Scalar remembers its field; mixing fields is a hard error.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supersite {

using BigInt = boost::multiprecision::cpp_int;

struct FieldMismatch : std::runtime_error {
  FieldMismatch() : std::runtime_error("mixed-field scalar operation") {}
};

// p == 0 means the rationals; otherwise a prime p < 2^16.
struct Field {
  std::uint32_t p = 0;

  bool rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

class Scalar {
public:
  Scalar() = default;
  Scalar(const Field& f, long long n) : num_(n), field_(f) { reduce(); }
  Scalar(const Field& f, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)), field_(f) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    reduce();
  }

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  const Field& field() const { return field_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    r.reduce();
    return r;
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    return Scalar(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const {
    check(o);
    return Scalar(field_, num_ * o.num_, den_ * o.den_);
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (field_.rational()) return Scalar(field_, den_, num_);
    return Scalar(field_, mod_inverse(num_, field_.p), 1);
  }

  bool operator==(const Scalar& o) const {
    check(o);
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

private:
  void check(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }

  static BigInt mod_inverse(BigInt a, std::uint32_t p) {
    // extended Euclid; p prime, a not 0 mod p
    BigInt t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
      BigInt q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += p;
    return t;
  }

  void reduce() {
    if (!field_.rational()) {
      // residues live in 0..p-1 with denominator 1
      if (den_ != 1) {
        num_ *= mod_inverse(den_, field_.p);
        den_ = 1;
      }
      num_ %= field_.p;
      if (num_ < 0) num_ += field_.p;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_ = 0;
  BigInt den_ = 1;
  Field field_;
};

}  // namespace supersite
