#pragma once
#include <optional>
#include <string>

#include "germzeta/poly.hpp"

namespace germzeta {

// Rational function in one variable over Q, kept in canonical form:
// gcd(num, den) = 1 and den monic; the zero function is 0/1.
class RatFun1 {
 public:
  RatFun1() : num_(), den_(UniPoly::constant(Rat(1))) {}
  RatFun1(const UniPoly& num, const UniPoly& den);
  RatFun1(const UniPoly& p) : num_(p), den_(UniPoly::constant(Rat(1))) {}  // NOLINT: implicit by design
  explicit RatFun1(const Rat& c) : RatFun1(UniPoly::constant(c)) {}
  static RatFun1 from_poly(const UniPoly& p) { return RatFun1(p, UniPoly::constant(Rat(1))); }
  static RatFun1 constant(const Rat& c) { return from_poly(UniPoly::constant(c)); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun1 operator-() const;
  RatFun1 operator+(const RatFun1& o) const;
  RatFun1 operator-(const RatFun1& o) const;
  RatFun1 operator*(const RatFun1& o) const;
  RatFun1 operator/(const RatFun1& o) const;
  bool operator==(const RatFun1& o) const { return num_ == o.num_ && den_ == o.den_; }

  // Substitute the variable by the polynomial q.
  RatFun1 compose(const UniPoly& q) const;
  // Value at v, or nullopt when v is a root of the reduced denominator.
  std::optional<Rat> eval(const Rat& v) const;

  std::string to_string(const std::string& var = "s") const;

 private:
  UniPoly num_, den_;
};

// Spec-named constructor: reduce num/den to canonical form.
RatFun1 ratfun_reduce(const UniPoly& num, const UniPoly& den);

}  // namespace germzeta
