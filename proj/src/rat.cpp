#include "germzeta/rat.hpp"

#include <ostream>

namespace germzeta {

Rat::Rat(long n, long d) {
  if (d == 0) throw ZeroDenominator();
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw ZeroDenominator();
  v_ = mpq_class(n) / mpq_class(d);
  v_.canonicalize();
}

Rat Rat::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpq_class(mpz_class(s)));
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    return Rat(n, d);
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational literal: " + s);
  }
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw ZeroDenominator();
  return Rat(mpq_class(v_ / o.v_));
}

Rat Rat::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero");
  return Rat(mpq_class(1 / v_));
}

std::string Rat::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat pow(const Rat& base, unsigned e) {
  Rat acc(1);
  Rat b = base;
  while (e) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace germzeta
