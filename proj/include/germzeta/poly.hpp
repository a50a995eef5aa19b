#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germzeta/rat.hpp"

namespace germzeta {

// Sparse univariate polynomial over Q, exponent -> coefficient.
// Invariant: no zero coefficients are stored; zero polynomial has empty map.
class UniPoly {
 public:
  UniPoly() = default;
  static UniPoly constant(const Rat& c);
  static UniPoly monomial(int e, const Rat& c);
  static UniPoly variable() { return monomial(1, Rat(1)); }
  // Coefficients in ascending degree order: c0 + c1 s + ...
  static UniPoly from_coeffs(const std::vector<Rat>& ascending);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return degree() <= 0; }
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  int low_exponent() const;  // smallest exponent with nonzero coeff; pre: nonzero
  Rat coeff(int e) const;
  const Rat& leading() const;
  const std::map<int, Rat>& terms() const { return c_; }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& k) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  Rat eval(const Rat& v) const;
  // Substitute the variable by q.
  UniPoly compose(const UniPoly& q) const;
  // Field division: returns (quotient, remainder); throws ZeroDenominator on q = 0.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& q) const;
  std::optional<UniPoly> divide_exact(const UniPoly& q) const;
  UniPoly monic() const;  // pre: nonzero
  // Divide out (s - root) exactly `times` times; caller guarantees divisibility.
  UniPoly deflate(const Rat& root, int times = 1) const;

  // p as c * q with q having coprime integer coefficients and positive leading
  // coefficient; returns q and writes c to unit if given. pre: nonzero.
  UniPoly primitive_normalized(Rat* unit = nullptr) const;

  std::string to_string(const std::string& var = "s") const;

  void set_coeff(int e, const Rat& v);

 private:
  std::map<int, Rat> c_;
};

// Monic gcd over Q; gcd(0,0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

struct RootReport {
  std::vector<std::pair<Rat, int>> roots;  // sorted ascending, with multiplicities
  UniPoly remainder;                       // rootless over Q, primitive-normalized; 1 if fully split
  bool remainder_squarefree = true;
};
// All rational roots with multiplicities plus the rootless cofactor. pre: p != 0.
RootReport rational_roots(const UniPoly& p);

// Sparse bivariate polynomial over Q, (i, j) -> coefficient of x^i y^j.
// Also reused for the Hodge variables with (i, j) read as (w^i, T^j).
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly constant(const Rat& c);
  static BiPoly monomial(int i, int j, const Rat& c);
  static BiPoly var_x() { return monomial(1, 0, Rat(1)); }
  static BiPoly var_y() { return monomial(0, 1, Rat(1)); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == Key{0, 0}); }
  int degree_x() const;
  int degree_y() const;
  int total_degree() const;        // max i+j; -1 for zero
  int origin_multiplicity() const; // min i+j; pre: nonzero
  Rat coeff(int i, int j) const;
  const std::map<Key, Rat>& terms() const { return c_; }

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rat& k) const;
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }

  BiPoly derivative_x() const;
  BiPoly derivative_y() const;
  Rat eval(const Rat& x, const Rat& y) const;
  UniPoly at_x0() const;  // p(0, y) as polynomial in y
  UniPoly at_y0() const;  // p(x, 0) as polynomial in x
  // General substitution x -> fx, y -> fy.
  BiPoly substitute(const BiPoly& fx, const BiPoly& fy) const;
  BiPoly shift(const Rat& dx, const Rat& dy) const;  // p(x + dx, y + dy)
  BiPoly pow(unsigned e) const;

  // Exact division by x^m (resp. y^m); throws InvariantViolation if not divisible.
  BiPoly divide_xpow(int m) const;
  BiPoly divide_ypow(int m) const;
  // Exact multivariate division; nullopt when q does not divide p.
  std::optional<BiPoly> divide_exact(const BiPoly& q) const;

  // The terms of minimal total degree (tangent cone at the origin). pre: nonzero.
  BiPoly lowest_form() const;

  // p as c * q with q having coprime integer coefficients and positive
  // lex-leading coefficient; writes c to unit if given. pre: nonzero.
  BiPoly primitive_normalized(Rat* unit = nullptr) const;

  std::string to_string(const std::string& vx = "x", const std::string& vy = "y") const;

  void set_coeff(int i, int j, const Rat& v);

 private:
  std::map<Key, Rat> c_;
};

// Gcd via content / primitive-part recursion with a primitive pseudo-remainder
// sequence; result is primitive-normalized. gcd(0,0) = 0.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

struct SquarefreeFactor {
  BiPoly factor;  // squarefree, primitive-normalized
  int multiplicity = 1;
};
// p = unit * prod factor_i^{mult_i}, factors pairwise coprime, multiplicities
// strictly increasing. pre: p != 0. Constants decompose to an empty list.
std::vector<SquarefreeFactor> squarefree_decompose(const BiPoly& p, Rat* unit = nullptr);

// Largest k with q^k | p. pre: p != 0, q nonconstant.
int factor_order(const BiPoly& p, const BiPoly& q);

}  // namespace germzeta
