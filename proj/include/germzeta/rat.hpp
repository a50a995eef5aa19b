#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "germzeta/errors.hpp"

namespace germzeta {

// Exact rational number. Always stored reduced with positive denominator;
// zero is 0/1. Backed by GMP so numerators/denominators are unbounded.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(long n, long d);
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "a" or "a/b" with optional leading '-'; throws ZeroDenominator on b = 0.
  static Rat from_string(const std::string& s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  // "a" when integral, else "a/b".
  std::string to_string() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

Rat pow(const Rat& base, unsigned e);
std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace germzeta
