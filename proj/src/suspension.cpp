#include "germzeta/suspension.hpp"

#include "germzeta/errors.hpp"

namespace germzeta {

namespace {

UniPoly lin(const Rat& c0, const Rat& c1) { return UniPoly::from_coeffs({c0, c1}); }

RatFun1 shift_half(const RatFun1& z) {
  // s -> s + 1/2
  return z.compose(UniPoly::from_coeffs({Rat(1, 2), Rat(1)}));
}

}  // namespace

RatFun1 suspend_zeta(const RatFun1& zf, const RatFun1& zf2) {
  RatFun1 s(UniPoly::variable());
  RatFun1 one(UniPoly::constant(Rat(1)));
  RatFun1 a = one / RatFun1(lin(Rat(1), Rat(2)));                           // 1/(2s+1)
  RatFun1 b = s * RatFun1(lin(Rat(3), Rat(2))) /                            // s(2s+3) /
              (RatFun1(Rat(2)) * RatFun1(lin(Rat(1), Rat(1))) *             //   (2 (s+1)
               RatFun1(lin(Rat(1), Rat(2))));                               //    (2s+1))
  RatFun1 c = RatFun1(Rat(3)) * s /                                         // 3s /
              (RatFun1(Rat(2)) * RatFun1(lin(Rat(1), Rat(1))));             //   (2 (s+1))
  return a + b * shift_half(zf) - c * shift_half(zf2);
}

RatFun1 DisplayForm::reduced() const {
  UniPoly d = UniPoly::constant(Rat(1));
  for (const auto& f : den_factors) d = d * f;
  return RatFun1(num, d);
}

namespace family {

namespace {
void require_curve_k(long k) {
  if (k < 5) throw ParamOutOfRange("curve family requires k >= 5");
}
}  // namespace

DisplayForm curve_display(long k) {
  require_curve_k(k);
  DisplayForm f;
  if (k % 2 == 1) {
    long r = (k - 3) / 2;
    f.num = UniPoly::from_coeffs({Rat(r + 1), Rat(r + 2), Rat(-3)});
    f.den_factors = {lin(Rat(r + 1), Rat(2 * r + 3)), lin(Rat(1), Rat(3)), lin(Rat(1), Rat(1))};
  } else {
    long r = (k - 4) / 2;
    f.num = UniPoly::from_coeffs({Rat(2 * r + 3), Rat(2 * r + 8), Rat(3)});
    f.den_factors = {lin(Rat(2 * r + 3), Rat(4 * r + 8)), lin(Rat(1), Rat(3)), lin(Rat(1), Rat(1))};
  }
  return f;
}

RatFun1 curve_zeta2_closed(long k) {
  require_curve_k(k);
  if (k % 2 == 1) return RatFun1();
  long r = (k - 4) / 2;
  return RatFun1(UniPoly::constant(Rat(1)), lin(Rat(2 * r + 3), Rat(4 * r + 8)));
}

DisplayForm suspended_display(long k) {
  require_curve_k(k);
  DisplayForm f;
  f.num = UniPoly::from_coeffs({Rat(10 * k - 5), Rat(15 * k - 5), Rat(6 * k - 6)});
  f.den_factors = {lin(Rat(5), Rat(6)), lin(Rat(1), Rat(1)), lin(Rat(2 * k - 1), Rat(2 * k))};
  return f;
}

Rat suspended_substitution_point(long k) {
  require_curve_k(k);
  return Rat(-(2 * k - 1), 2 * k);
}

Rat suspended_substitution_value(long k) {
  require_curve_k(k);
  return Rat((k - 1) * (k - 3) * (2 * k - 1), 2 * k * k);
}

namespace {
void require_threevar(long n, long k) {
  if (n < 0 || k < n + 4) throw ParamOutOfRange("three-variable family requires n >= 0, k >= n + 4");
}
}  // namespace

DisplayForm threevar_display(long n, long k) {
  require_threevar(n, k);
  DisplayForm f;
  f.num = UniPoly::from_coeffs({Rat(10 * k - 10 * n - 5),
                                Rat(-4 * n * n + 4 * k * n - 7 * n + 15 * k - 5),
                                Rat(n * n + 3 * k * n - 4 * n + 6 * k - 6),
                                Rat(-2 * n * n - 6 * n)});
  f.den_factors = {lin(Rat(5), Rat(2 * n + 6)), lin(Rat(1), Rat(1)),
                   lin(Rat(2 * k - 2 * n - 1), Rat(2 * k)), lin(Rat(1), Rat(n))};
  return f;
}

Rat threevar_substitution_point(long n, long k) {
  require_threevar(n, k);
  return Rat(-(2 * k - 2 * n - 1), 2 * k);
}

Rat threevar_substitution_value(long n, long k) {
  require_threevar(n, k);
  Rat num(Rat(k - 1 - 2 * n) * Rat(k - n - 3) * Rat(2 * k - 2 * n - 1) *
          Rat(2 * n * n - 2 * k * n + n + 2 * k));
  return num / Rat(4 * k * k * k);
}

}  // namespace family

}  // namespace germzeta
