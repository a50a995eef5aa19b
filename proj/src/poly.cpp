#include "germzeta/poly.hpp"

#include <algorithm>
#include <sstream>

namespace germzeta {

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::constant(const Rat& c) {
  UniPoly p;
  p.set_coeff(0, c);
  return p;
}

UniPoly UniPoly::monomial(int e, const Rat& c) {
  UniPoly p;
  p.set_coeff(e, c);
  return p;
}

UniPoly UniPoly::from_coeffs(const std::vector<Rat>& ascending) {
  UniPoly p;
  for (std::size_t i = 0; i < ascending.size(); ++i) p.set_coeff(static_cast<int>(i), ascending[i]);
  return p;
}

void UniPoly::set_coeff(int e, const Rat& v) {
  if (v.is_zero())
    c_.erase(e);
  else
    c_[e] = v;
}

int UniPoly::low_exponent() const {
  if (c_.empty()) throw ZeroPolynomial("low_exponent of zero polynomial");
  return c_.begin()->first;
}

Rat UniPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rat(0) : it->second;
}

const Rat& UniPoly::leading() const {
  if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
  return c_.rbegin()->second;
}

UniPoly UniPoly::operator-() const {
  UniPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r = *this;
  for (const auto& [e, v] : o.c_) r.set_coeff(e, r.coeff(e) + v);
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly r = *this;
  for (const auto& [e, v] : o.c_) r.set_coeff(e, r.coeff(e) - v);
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  UniPoly r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + v1 * v2);
  return r;
}

UniPoly UniPoly::operator*(const Rat& k) const {
  UniPoly r;
  if (k.is_zero()) return r;
  for (const auto& [e, v] : c_) r.c_[e] = v * k;
  return r;
}

UniPoly UniPoly::derivative() const {
  UniPoly r;
  for (const auto& [e, v] : c_)
    if (e > 0) r.set_coeff(e - 1, v * Rat(e));
  return r;
}

Rat UniPoly::eval(const Rat& v) const {
  // Horner over the dense degree range would waste work on sparse input;
  // walk terms from the top and carry powers across gaps.
  Rat acc(0);
  int prev = -1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (prev >= 0) acc = acc * pow(v, static_cast<unsigned>(prev - it->first));
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc = acc * pow(v, static_cast<unsigned>(prev));
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  int prev = -1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (prev >= 0) {
      UniPoly qp = UniPoly::constant(Rat(1));
      for (int k = 0; k < prev - it->first; ++k) qp = qp * q;
      acc = acc * qp;
    }
    acc = acc + UniPoly::constant(it->second);
    prev = it->first;
  }
  if (prev > 0) {
    UniPoly qp = UniPoly::constant(Rat(1));
    for (int k = 0; k < prev; ++k) qp = qp * q;
    acc = acc * qp;
  }
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& q) const {
  if (q.is_zero()) throw ZeroDenominator("division by zero polynomial");
  UniPoly quot, rem = *this;
  const int dq = q.degree();
  const Rat lq = q.leading();
  while (!rem.is_zero() && rem.degree() >= dq) {
    UniPoly t = UniPoly::monomial(rem.degree() - dq, rem.leading() / lq);
    quot = quot + t;
    rem = rem - t * q;
  }
  return {quot, rem};
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& q) const {
  auto [quot, rem] = divmod(q);
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw ZeroPolynomial("monic of zero polynomial");
  return *this * leading().inverse();
}

UniPoly UniPoly::deflate(const Rat& root, int times) const {
  UniPoly cur = *this;
  for (int t = 0; t < times; ++t) {
    const int d = cur.degree();
    if (d < 1) throw InvariantViolation("deflate: constant polynomial");
    // Synthetic division by (s - root).
    std::vector<Rat> b(static_cast<std::size_t>(d));
    Rat carry = cur.coeff(d);
    for (int k = d - 1; k >= 0; --k) {
      b[static_cast<std::size_t>(k)] = carry;
      carry = cur.coeff(k) + root * carry;
    }
    if (!carry.is_zero()) throw InvariantViolation("deflate: value is not a root");
    UniPoly next;
    for (int k = 0; k < d; ++k) next.set_coeff(k, b[static_cast<std::size_t>(k)]);
    cur = next;
  }
  return cur;
}

UniPoly UniPoly::primitive_normalized(Rat* unit) const {
  if (is_zero()) throw ZeroPolynomial("primitive form of zero polynomial");
  mpz_class l(1);
  for (const auto& [e, v] : c_) l = lcm(l, v.den());
  mpz_class g(0);
  for (const auto& [e, v] : c_) g = gcd(g, mpz_class(v.num() * l / v.den()));
  Rat scale = Rat(l, g);  // multiply by this to normalize
  if (leading().sign() < 0) scale = -scale;
  if (unit) *unit = scale.inverse();
  return *this * scale;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat v = it->second;
    if (first) {
      first = false;
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
      v = v.abs();
    }
    const bool has_var = it->first > 0;
    if (!has_var || v != Rat(1)) {
      os << v.to_string();
      if (has_var) os << "*";
    }
    if (has_var) {
      os << var;
      if (it->first > 1) os << "^" << it->first;
    }
  }
  return os.str();
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  if (a.is_zero() && b.is_zero()) return UniPoly();
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = b;
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

namespace {

// Complete factorization by trial division; the cofactor left after testing
// every candidate up to the square root is prime.
std::vector<std::pair<mpz_class, int>> factorize(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> fs;
  if (n < 0) n = -n;
  if (n <= 1) return fs;
  auto strip = [&](const mpz_class& p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) fs.push_back({p, k});
  };
  strip(2);
  strip(3);
  mpz_class d(5);
  while (d * d <= n) {
    strip(d);
    strip(d + 2);
    d += 6;
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> ds{1};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t base = ds.size();
    mpz_class pe(1);
    for (int e = 1; e <= k; ++e) {
      pe *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

RootReport rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("rational_roots of zero polynomial");
  RootReport rep;
  UniPoly work = p;

  const int val = work.degree() == 0 ? 0 : work.low_exponent();
  if (val > 0) {
    rep.roots.push_back({Rat(0), val});
    UniPoly shifted;
    for (const auto& [e, v] : work.terms()) shifted.set_coeff(e - val, v);
    work = shifted;
  }

  while (work.degree() > 0) {
    const UniPoly prim = work.primitive_normalized();
    const mpz_class c0 = prim.coeff(0).num();
    const mpz_class cn = prim.leading().num();
    bool found = false;
    for (const mpz_class& dn : divisors(c0)) {
      for (const mpz_class& dd : divisors(cn)) {
        if (gcd(dn, dd) != 1) continue;
        for (int sign : {+1, -1}) {
          const Rat cand(sign * dn, dd);
          if (!work.eval(cand).is_zero()) continue;
          int mult = 0;
          while (work.degree() > 0 && work.eval(cand).is_zero()) {
            work = work.deflate(cand);
            ++mult;
          }
          rep.roots.push_back({cand, mult});
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }

  if (work.degree() > 0) {
    rep.remainder = work.primitive_normalized();
    rep.remainder_squarefree = poly_gcd(rep.remainder, rep.remainder.derivative()).is_constant();
  } else {
    rep.remainder = UniPoly::constant(Rat(1));
    rep.remainder_squarefree = true;
  }
  std::sort(rep.roots.begin(), rep.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return rep;
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const Rat& c) {
  BiPoly p;
  p.set_coeff(0, 0, c);
  return p;
}

BiPoly BiPoly::monomial(int i, int j, const Rat& c) {
  BiPoly p;
  p.set_coeff(i, j, c);
  return p;
}

void BiPoly::set_coeff(int i, int j, const Rat& v) {
  if (v.is_zero())
    c_.erase({i, j});
  else
    c_[{i, j}] = v;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, v] : c_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, v] : c_) d = std::max(d, k.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
  return d;
}

int BiPoly::origin_multiplicity() const {
  if (c_.empty()) throw ZeroPolynomial("origin multiplicity of zero polynomial");
  int m = INT32_MAX;
  for (const auto& [k, v] : c_) m = std::min(m, k.first + k.second);
  return m;
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Rat(0) : it->second;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [k, v] : c_) r.c_[k] = -v;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, v] : o.c_) r.set_coeff(k.first, k.second, r.coeff(k.first, k.second) + v);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, v] : o.c_) r.set_coeff(k.first, k.second, r.coeff(k.first, k.second) - v);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [k1, v1] : c_)
    for (const auto& [k2, v2] : o.c_) {
      const int i = k1.first + k2.first, j = k1.second + k2.second;
      r.set_coeff(i, j, r.coeff(i, j) + v1 * v2);
    }
  return r;
}

BiPoly BiPoly::operator*(const Rat& k) const {
  BiPoly r;
  if (k.is_zero()) return r;
  for (const auto& [key, v] : c_) r.c_[key] = v * k;
  return r;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r;
  for (const auto& [k, v] : c_)
    if (k.first > 0) r.set_coeff(k.first - 1, k.second, v * Rat(k.first));
  return r;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly r;
  for (const auto& [k, v] : c_)
    if (k.second > 0) r.set_coeff(k.first, k.second - 1, v * Rat(k.second));
  return r;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [k, v] : c_)
    acc += v * germzeta::pow(x, static_cast<unsigned>(k.first)) *
           germzeta::pow(y, static_cast<unsigned>(k.second));
  return acc;
}

UniPoly BiPoly::at_x0() const {
  UniPoly r;
  for (const auto& [k, v] : c_)
    if (k.first == 0) r.set_coeff(k.second, v);
  return r;
}

UniPoly BiPoly::at_y0() const {
  UniPoly r;
  for (const auto& [k, v] : c_)
    if (k.second == 0) r.set_coeff(k.first, v);
  return r;
}

BiPoly BiPoly::substitute(const BiPoly& fx, const BiPoly& fy) const {
  std::vector<BiPoly> px{BiPoly::constant(Rat(1))}, py{BiPoly::constant(Rat(1))};
  for (int i = 1; i <= degree_x(); ++i) px.push_back(px.back() * fx);
  for (int j = 1; j <= degree_y(); ++j) py.push_back(py.back() * fy);
  BiPoly r;
  for (const auto& [k, v] : c_) r = r + px[k.first] * py[k.second] * v;
  return r;
}

BiPoly BiPoly::shift(const Rat& dx, const Rat& dy) const {
  BiPoly fx = BiPoly::var_x() + BiPoly::constant(dx);
  BiPoly fy = BiPoly::var_y() + BiPoly::constant(dy);
  if (dy.is_zero()) fy = BiPoly::var_y();
  if (dx.is_zero()) fx = BiPoly::var_x();
  return substitute(fx, fy);
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly acc = BiPoly::constant(Rat(1));
  BiPoly b = *this;
  while (e) {
    if (e & 1u) acc = acc * b;
    b = b * b;
    e >>= 1u;
  }
  return acc;
}

BiPoly BiPoly::divide_xpow(int m) const {
  BiPoly r;
  for (const auto& [k, v] : c_) {
    if (k.first < m) throw InvariantViolation("divide_xpow: not divisible");
    r.c_[{k.first - m, k.second}] = v;
  }
  return r;
}

BiPoly BiPoly::divide_ypow(int m) const {
  BiPoly r;
  for (const auto& [k, v] : c_) {
    if (k.second < m) throw InvariantViolation("divide_ypow: not divisible");
    r.c_[{k.first, k.second - m}] = v;
  }
  return r;
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& q) const {
  if (q.is_zero()) throw ZeroDenominator("division by zero polynomial");
  BiPoly rem = *this, quot;
  const auto lq = *q.terms().rbegin();  // lex-leading term of q
  while (!rem.is_zero()) {
    const auto lr = *rem.terms().rbegin();
    const int di = lr.first.first - lq.first.first;
    const int dj = lr.first.second - lq.first.second;
    if (di < 0 || dj < 0) return std::nullopt;
    BiPoly t = BiPoly::monomial(di, dj, lr.second / lq.second);
    quot = quot + t;
    rem = rem - t * q;
  }
  return quot;
}

BiPoly BiPoly::lowest_form() const {
  const int m = origin_multiplicity();
  BiPoly r;
  for (const auto& [k, v] : c_)
    if (k.first + k.second == m) r.c_[k] = v;
  return r;
}

BiPoly BiPoly::primitive_normalized(Rat* unit) const {
  if (is_zero()) throw ZeroPolynomial("primitive form of zero polynomial");
  mpz_class l(1);
  for (const auto& [k, v] : c_) l = lcm(l, v.den());
  mpz_class g(0);
  for (const auto& [k, v] : c_) g = gcd(g, mpz_class(v.num() * l / v.den()));
  Rat scale = Rat(l, g);
  if (c_.rbegin()->second.sign() < 0) scale = -scale;
  if (unit) *unit = scale.inverse();
  return *this * scale;
}

std::string BiPoly::to_string(const std::string& vx, const std::string& vy) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat v = it->second;
    if (first) {
      first = false;
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
      v = v.abs();
    }
    const auto [i, j] = it->first;
    const bool has_var = i > 0 || j > 0;
    if (!has_var || v != Rat(1)) {
      os << v.to_string();
      if (has_var) os << "*";
    }
    if (i > 0) {
      os << vx;
      if (i > 1) os << "^" << i;
      if (j > 0) os << "*";
    }
    if (j > 0) {
      os << vy;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

// ------------------------------------------------------------ bivariate gcd

namespace {

// View as a polynomial in x whose coefficients live in Q[y].
std::map<int, UniPoly> x_slices(const BiPoly& p) {
  std::map<int, UniPoly> s;
  for (const auto& [k, v] : p.terms()) s[k.first].set_coeff(k.second, v);
  return s;
}

BiPoly from_x_slices(const std::map<int, UniPoly>& s) {
  BiPoly p;
  for (const auto& [i, u] : s)
    for (const auto& [j, v] : u.terms()) p.set_coeff(i, j, v);
  return p;
}

BiPoly embed_y(const UniPoly& u) {
  BiPoly p;
  for (const auto& [j, v] : u.terms()) p.set_coeff(0, j, v);
  return p;
}

// Gcd over Q[y] of all x-slice coefficients.
UniPoly content_x(const BiPoly& p) {
  UniPoly g;
  for (const auto& [i, u] : x_slices(p)) g = poly_gcd(g, u);
  return g;
}

BiPoly divide_by_ypoly(const BiPoly& p, const UniPoly& d) {
  std::map<int, UniPoly> out;
  for (const auto& [i, u] : x_slices(p)) {
    auto q = u.divide_exact(d);
    if (!q) throw InvariantViolation("content division failed");
    out[i] = *q;
  }
  return from_x_slices(out);
}

BiPoly primitive_part_x(const BiPoly& p) {
  if (p.is_zero()) return p;
  return divide_by_ypoly(p, content_x(p));
}

// One pseudo-remainder step in x (up to a y-polynomial unit, which the
// primitive PRS discards anyway).
BiPoly pseudo_rem_x(const BiPoly& a, const BiPoly& b) {
  auto sb = x_slices(b);
  const int db = sb.rbegin()->first;
  const UniPoly lb = sb.rbegin()->second;
  const BiPoly lbp = embed_y(lb);
  BiPoly r = a;
  while (!r.is_zero()) {
    auto sr = x_slices(r);
    const int dr = sr.rbegin()->first;
    if (dr < db) break;
    const BiPoly lr = embed_y(sr.rbegin()->second);
    BiPoly xshift = BiPoly::monomial(dr - db, 0, Rat(1));
    r = r * lbp - lr * xshift * b;
  }
  return r;
}

}  // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) return BiPoly();
  if (a.is_zero()) return b.primitive_normalized();
  if (b.is_zero()) return a.primitive_normalized();
  const int dax = a.degree_x(), dbx = b.degree_x();
  if (dax == 0 && dbx == 0) {
    UniPoly g = poly_gcd(a.at_x0(), b.at_x0());
    return embed_y(g).primitive_normalized();
  }
  if (dax == 0) return embed_y(poly_gcd(a.at_x0(), content_x(b))).primitive_normalized();
  if (dbx == 0) return embed_y(poly_gcd(b.at_x0(), content_x(a))).primitive_normalized();

  const UniPoly ca = content_x(a), cb = content_x(b);
  BiPoly pa = divide_by_ypoly(a, ca);
  BiPoly pb = divide_by_ypoly(b, cb);
  if (pa.degree_x() < pb.degree_x()) std::swap(pa, pb);
  // Primitive pseudo-remainder sequence in x.
  while (true) {
    if (pb.is_zero()) break;
    if (pb.degree_x() == 0) {
      // Nonzero remainder free of x: the x-primitive gcd is trivial.
      pa = BiPoly::constant(Rat(1));
      break;
    }
    BiPoly r = pseudo_rem_x(pa, pb);
    pa = pb;
    pb = r.is_zero() ? r : primitive_part_x(r);
  }
  const BiPoly gp = primitive_part_x(pa);
  const BiPoly gc = embed_y(poly_gcd(ca, cb));
  return (gp * gc).primitive_normalized();
}

// --------------------------------------------------------------- squarefree

namespace {

// Yun's algorithm with respect to the given derivative; factors of f must all
// have positive degree in the differentiated variable (ensured by the callers
// via content splitting). f is assumed nonconstant.
void yun(const BiPoly& f, bool wrt_x, std::map<int, BiPoly>& out) {
  auto deriv = [wrt_x](const BiPoly& p) { return wrt_x ? p.derivative_x() : p.derivative_y(); };
  auto exact = [](const BiPoly& p, const BiPoly& q) {
    auto r = p.divide_exact(q);
    if (!r) throw InvariantViolation("squarefree decomposition: exact division failed");
    return *r;
  };
  const BiPoly df = deriv(f);
  BiPoly g = bipoly_gcd(f, df);
  BiPoly c = exact(f, g);
  BiPoly d = exact(df, g) - deriv(c);
  int i = 1;
  while (!c.is_constant()) {
    BiPoly a = bipoly_gcd(c, d);
    if (!a.is_constant()) {
      auto& slot = out[i];
      slot = slot.is_zero() ? a.primitive_normalized() : (slot * a).primitive_normalized();
    }
    c = exact(c, a);
    d = exact(d, a) - deriv(c);
    ++i;
  }
}

void decompose_rec(const BiPoly& p, std::map<int, BiPoly>& out) {
  if (p.is_constant()) return;
  if (p.degree_x() == 0) {
    yun(p, /*wrt_x=*/false, out);
    return;
  }
  const UniPoly cont = content_x(p);
  const BiPoly pp = divide_by_ypoly(p, cont);
  if (cont.degree() > 0) decompose_rec(embed_y(cont), out);
  if (!pp.is_constant()) yun(pp, /*wrt_x=*/true, out);
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decompose(const BiPoly& p, Rat* unit) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero polynomial");
  std::map<int, BiPoly> by_mult;
  decompose_rec(p, by_mult);
  std::vector<SquarefreeFactor> out;
  BiPoly prod = BiPoly::constant(Rat(1));
  for (const auto& [m, f] : by_mult) {
    out.push_back({f, m});
    prod = prod * f.pow(static_cast<unsigned>(m));
  }
  auto u = p.divide_exact(prod);
  if (!u || !u->is_constant()) throw InvariantViolation("squarefree decomposition does not multiply back");
  if (unit) *unit = u->coeff(0, 0);
  return out;
}

int factor_order(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero()) throw ZeroPolynomial("factor_order of zero polynomial");
  if (q.is_constant()) throw Error("factor_order with constant divisor");
  int k = 0;
  BiPoly cur = p;
  while (auto next = cur.divide_exact(q)) {
    cur = *next;
    ++k;
  }
  return k;
}

}  // namespace germzeta
