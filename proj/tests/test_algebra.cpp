#include <vector>

#include "doctest.h"
#include "germzeta/poly.hpp"
#include "germzeta/rat.hpp"

using namespace germzeta;

namespace {
UniPoly lin(long a, long b) { return UniPoly::from_coeffs({Rat(a), Rat(b)}); }  // a + b s
}  // namespace

TEST_CASE("rationals are stored reduced with positive denominator") {
  CHECK(Rat(4, 6) == Rat(2, 3));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(-2, -4).to_string() == "1/2");
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(7).is_integer());
  CHECK(Rat(5, 3).num() == 5);
  CHECK(Rat(5, 3).den() == 3);
  CHECK_THROWS_AS(Rat(1, 0), ZeroDenominator);
}

TEST_CASE("rational string round-trip and arithmetic") {
  CHECK(Rat::from_string("-3/6") == Rat(-1, 2));
  CHECK(Rat::from_string("14") == Rat(14));
  CHECK_THROWS_AS(Rat::from_string("1/0"), ZeroDenominator);
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) * Rat(-4, 3) == Rat(-2, 3));
  CHECK(Rat(3, 4) / Rat(3, 2) == Rat(1, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), ZeroDenominator);
  CHECK(Rat(-5, 6).abs() == Rat(5, 6));
  CHECK(Rat(2, 3).inverse() == Rat(3, 2));
  CHECK(pow(Rat(-2, 3), 3) == Rat(-8, 27));
  CHECK(Rat(-5, 6) < Rat(-3, 4));
}

TEST_CASE("univariate basics: eval, compose, divmod") {
  UniPoly p = UniPoly::from_coeffs({Rat(5), Rat(4), Rat(1)});  // 5 + 4s + s^2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(-1)) == Rat(2));
  CHECK(p.coeff(1) == Rat(4));
  CHECK(p.derivative() == UniPoly::from_coeffs({Rat(4), Rat(2)}));

  // compose with s + 1/2 shifts the argument
  UniPoly shifted = p.compose(UniPoly::from_coeffs({Rat(1, 2), Rat(1)}));
  CHECK(shifted.eval(Rat(0)) == p.eval(Rat(1, 2)));
  CHECK(shifted.eval(Rat(-3)) == p.eval(Rat(-5, 2)));

  UniPoly q = lin(1, 1);
  auto [quot, rem] = p.divmod(q);
  CHECK(quot * q + rem == p);
  CHECK(rem.degree() < q.degree());
  CHECK_THROWS_AS(p.divmod(UniPoly()), ZeroDenominator);

  CHECK(!p.divide_exact(lin(1, 1)).has_value());  // p(-1) = 2, not divisible
  UniPoly exact = lin(1, 1) * lin(5, 1);          // 5 + 6s + s^2
  CHECK(exact.divide_exact(lin(1, 1)) == lin(5, 1));
}

TEST_CASE("univariate deflation removes known roots exactly") {
  UniPoly p = lin(1, 1) * lin(1, 1) * lin(5, 6);  // (s+1)^2 (6s+5)
  UniPoly d = p.deflate(Rat(-1), 2);
  CHECK(d == lin(5, 6));
  CHECK(p.deflate(Rat(-5, 6), 1).eval(Rat(-5, 6)) != Rat(0));
}

TEST_CASE("primitive normalization extracts a rational unit") {
  UniPoly p = UniPoly::from_coeffs({Rat(-2, 3), Rat(-4, 3)});
  Rat unit;
  UniPoly q = p.primitive_normalized(&unit);
  CHECK(q == UniPoly::from_coeffs({Rat(1), Rat(2)}));
  CHECK(unit == Rat(-2, 3));
  CHECK(q * unit == p);
}

TEST_CASE("gcd of univariate polynomials is monic") {
  UniPoly a = lin(1, 1) * lin(1, 1) * lin(3, 2);
  UniPoly b = lin(1, 1) * lin(-4, 1);
  CHECK(poly_gcd(a, b) == lin(1, 1));
  CHECK(poly_gcd(a, UniPoly()) == a.monic());
  CHECK(poly_gcd(UniPoly(), UniPoly()) == UniPoly());
  // coprime inputs
  CHECK(poly_gcd(lin(1, 2), lin(1, 3)).degree() == 0);
}

TEST_CASE("rational roots include zero and keep the irrational cofactor") {
  // s^2 (s - 1) (2s + 5)
  UniPoly p = UniPoly::monomial(2, Rat(1)) * lin(-1, 1) * lin(5, 2);
  RootReport rr = rational_roots(p);
  REQUIRE(rr.roots.size() == 3);
  CHECK(rr.roots[0] == std::pair{Rat(-5, 2), 1});
  CHECK(rr.roots[1] == std::pair{Rat(0), 2});
  CHECK(rr.roots[2] == std::pair{Rat(1), 1});
  CHECK(rr.remainder == UniPoly::constant(Rat(1)));

  // (s^2 - 2)(s - 3): the quadratic has no rational root
  UniPoly q = UniPoly::from_coeffs({Rat(-2), Rat(0), Rat(1)}) * lin(-3, 1);
  RootReport rq = rational_roots(q);
  REQUIRE(rq.roots.size() == 1);
  CHECK(rq.roots[0] == std::pair{Rat(3), 1});
  CHECK(rq.remainder == UniPoly::from_coeffs({Rat(-2), Rat(0), Rat(1)}));
  CHECK(rq.remainder_squarefree);
}

TEST_CASE("bivariate arithmetic and substitution") {
  BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
  BiPoly f = y * y + x * x * x;  // cusp
  CHECK(f.degree_x() == 3);
  CHECK(f.degree_y() == 2);
  CHECK(f.total_degree() == 3);
  CHECK(f.origin_multiplicity() == 2);
  CHECK(f.eval(Rat(2), Rat(1)) == Rat(9));
  CHECK(f.lowest_form() == y * y);
  CHECK(f.at_x0() == UniPoly::monomial(2, Rat(1)));
  CHECK(f.at_y0() == UniPoly::monomial(3, Rat(1)));

  // blow-up chart substitution x -> x, y -> x y gives x^2 (y^2 + x)
  BiPoly pulled = f.substitute(x, x * y);
  CHECK(pulled == (y * y + x) * x * x);
  CHECK(pulled.divide_xpow(2) == y * y + x);
  CHECK_THROWS_AS(pulled.divide_xpow(3), InvariantViolation);

  CHECK(f.shift(Rat(1), Rat(0)).eval(Rat(0), Rat(0)) == Rat(1));
  CHECK(f.derivative_y() == y * Rat(2));
}

TEST_CASE("bivariate gcd and exact division") {
  BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
  BiPoly g = y * y + x * x;
  BiPoly a = g * (x + y) * Rat(6);
  BiPoly b = g * x * x;
  BiPoly d = bipoly_gcd(a, b);
  CHECK(d == g);
  CHECK(a.divide_exact(g).has_value());
  CHECK(*a.divide_exact(g) == (x + y) * Rat(6));
  CHECK(!a.divide_exact(y * y + x).has_value());
  CHECK(bipoly_gcd(x * y, x + y).is_constant());
}

TEST_CASE("squarefree decomposition splits x^3 y^2 + x^5") {
  BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
  BiPoly f = x * x * x * y * y + x.pow(5);
  Rat unit;
  auto factors = squarefree_decompose(f, &unit);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].multiplicity == 1);
  CHECK(factors[0].factor == y * y + x * x);
  CHECK(factors[1].multiplicity == 3);
  CHECK(factors[1].factor == x);
  CHECK(unit == Rat(1));
}

TEST_CASE("squarefree decomposition reconstructs its input") {
  BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
  const std::vector<BiPoly> inputs = {
      (y * y + x * x * x) * (y * y + x * x * x) * (x + y) * Rat(-3, 2),
      x.pow(4) * y * (y - x) * (y - x),
      (y + x * x) * (y - x * x),
  };
  for (const BiPoly& f : inputs) {
    Rat unit;
    auto factors = squarefree_decompose(f, &unit);
    BiPoly rebuilt = BiPoly::constant(unit);
    for (const auto& sf : factors) rebuilt = rebuilt * sf.factor.pow(static_cast<unsigned>(sf.multiplicity));
    CHECK(rebuilt == f);
    // factors pairwise coprime and squarefree
    for (size_t i = 0; i < factors.size(); ++i) {
      // squarefree iff gcd with both partials is constant (one partial may vanish, e.g. f = y)
      CHECK(bipoly_gcd(bipoly_gcd(factors[i].factor, factors[i].factor.derivative_x()),
                       factors[i].factor.derivative_y())
                .is_constant());
      for (size_t j = i + 1; j < factors.size(); ++j)
        CHECK(bipoly_gcd(factors[i].factor, factors[j].factor).is_constant());
    }
    for (size_t i = 0; i + 1 < factors.size(); ++i)
      CHECK(factors[i].multiplicity < factors[i + 1].multiplicity);
  }
}

TEST_CASE("factor order counts exact divisibility") {
  BiPoly x = BiPoly::var_x(), y = BiPoly::var_y();
  BiPoly p = x * x * (y + x).pow(3);
  CHECK(factor_order(p, x) == 2);
  CHECK(factor_order(p, y + x) == 3);
  CHECK(factor_order(p, y - x) == 0);
}
