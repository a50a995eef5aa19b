#include "germzeta/ratfun.hpp"

namespace germzeta {

RatFun1::RatFun1(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UniPoly();
    den_ = UniPoly::constant(Rat(1));
    return;
  }
  const UniPoly g = poly_gcd(num, den);
  UniPoly n = *num.divide_exact(g);
  UniPoly d = *den.divide_exact(g);
  const Rat lead = d.leading();
  num_ = n * lead.inverse();
  den_ = d * lead.inverse();
}

RatFun1 RatFun1::operator-() const {
  RatFun1 r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun1 RatFun1::operator+(const RatFun1& o) const {
  return RatFun1(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun1 RatFun1::operator-(const RatFun1& o) const {
  return RatFun1(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun1 RatFun1::operator*(const RatFun1& o) const { return RatFun1(num_ * o.num_, den_ * o.den_); }

RatFun1 RatFun1::operator/(const RatFun1& o) const {
  if (o.is_zero()) throw ZeroDenominator("division by zero rational function");
  return RatFun1(num_ * o.den_, den_ * o.num_);
}

RatFun1 RatFun1::compose(const UniPoly& q) const { return RatFun1(num_.compose(q), den_.compose(q)); }

std::optional<Rat> RatFun1::eval(const Rat& v) const {
  const Rat d = den_.eval(v);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(v) / d;
}

std::string RatFun1::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  if (den_ == UniPoly::constant(Rat(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RatFun1 ratfun_reduce(const UniPoly& num, const UniPoly& den) { return RatFun1(num, den); }

}  // namespace germzeta
