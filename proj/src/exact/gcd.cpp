// Bivariate gcd and exact division. Polynomials are moved to a dense
// representation over Z[y][x] (x the main variable, y the coefficient
// variable), made primitive, and run through a subresultant PRS.

#include "charvar/exact.hpp"

#include <algorithm>

namespace charvar {
namespace {

using UZ = std::vector<BigInt>;  // dense in y, low to high
using PZ = std::vector<UZ>;      // dense in x, low to high, coefficients in Z[y]

void trim(UZ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(PZ& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

int deg(const UZ& a) { return static_cast<int>(a.size()) - 1; }
int deg(const PZ& a) { return static_cast<int>(a.size()) - 1; }

UZ sub(const UZ& a, const UZ& b) {
  UZ out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

UZ mul(const UZ& a, const UZ& b) {
  if (a.empty() || b.empty()) return {};
  UZ out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

UZ mul(const UZ& a, const BigInt& c) {
  if (c == 0) return {};
  UZ out = a;
  for (auto& x : out) x *= c;
  return out;
}

UZ pow(const UZ& a, int e) {
  UZ r{1};
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

BigInt content(const UZ& a) {
  BigInt g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UZ divexact(const UZ& a, const BigInt& c) {
  UZ out = a;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return out;
}

// Exact division in Z[y]; throws when b does not divide a.
UZ divexact(const UZ& a, const UZ& b) {
  if (b.empty()) throw DivisionByZero("division by zero polynomial");
  if (a.empty()) return {};
  if (deg(a) < deg(b)) throw MathError("inexact polynomial division");
  UZ r = a;
  UZ q(a.size() - b.size() + 1);
  const BigInt& lb = b.back();
  for (int i = deg(r) - deg(b); i >= 0; --i) {
    BigInt& top = r[i + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw MathError("inexact polynomial division");
    BigInt t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[i] = t;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= t * b[j];
  }
  trim(r);
  if (!r.empty()) throw MathError("inexact polynomial division");
  trim(q);
  return q;
}

// lc(b)^(deg a - deg b + 1) * a mod b, over Z.
UZ prem(const UZ& a, const UZ& b) {
  UZ r = a;
  int e = deg(a) - deg(b) + 1;
  const BigInt& lb = b.back();
  while (!r.empty() && deg(r) >= deg(b)) {
    BigInt lr = r.back();
    int shift = deg(r) - deg(b);
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b[j];
    trim(r);
    --e;
  }
  if (e > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    r = mul(r, f);
  }
  return r;
}

UZ primitive(const UZ& a) {
  if (a.empty()) return a;
  BigInt c = content(a);
  if (a.back() < 0) c = -c;
  return c == 1 ? a : divexact(a, c);
}

UZ gcd(const UZ& a0, const UZ& b0) {
  if (a0.empty()) return b0;
  if (b0.empty()) return a0;
  BigInt c;
  BigInt ca = content(a0), cb = content(b0);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  UZ a = primitive(a0), b = primitive(b0);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) return UZ{c};
    UZ r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return mul(primitive(a), c);
}

// ---- Z[y][x] ---------------------------------------------------------------

const UZ& lc(const PZ& a) { return a.back(); }

PZ mul(const PZ& a, const UZ& c) {
  if (c.empty()) return {};
  PZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], c);
  trim(out);
  return out;
}

PZ divexact(const PZ& a, const UZ& c) {
  PZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = divexact(a[i], c);
  return out;
}

PZ divexact(const PZ& a, const PZ& b) {
  if (b.empty()) throw DivisionByZero("division by zero polynomial");
  if (a.empty()) return {};
  if (deg(a) < deg(b)) throw MathError("inexact polynomial division");
  PZ r = a;
  PZ q(a.size() - b.size() + 1);
  for (int i = deg(a) - deg(b); i >= 0; --i) {
    const UZ& top = r[i + b.size() - 1];
    if (top.empty()) continue;
    UZ t = divexact(top, lc(b));
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = sub(r[i + j], mul(t, b[j]));
    q[i] = std::move(t);
  }
  trim(r);
  if (!r.empty()) throw MathError("inexact polynomial division");
  trim(q);
  return q;
}

PZ prem(const PZ& a, const PZ& b) {
  PZ r = a;
  int e = deg(a) - deg(b) + 1;
  const UZ& lb = lc(b);
  while (!r.empty() && deg(r) >= deg(b)) {
    UZ lr = r.back();
    int shift = deg(r) - deg(b);
    for (auto& x : r) x = mul(x, lb);
    for (std::size_t j = 0; j < b.size(); ++j)
      r[shift + j] = sub(r[shift + j], mul(lr, b[j]));
    trim(r);
    --e;
  }
  if (e > 0) r = mul(r, pow(lb, e));
  return r;
}

UZ content(const PZ& a) {
  UZ g;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (deg(g) == 0 && abs(g[0]) == 1) break;
  }
  return g;
}

PZ primitive(const PZ& a) {
  if (a.empty()) return a;
  UZ c = content(a);
  if (lc(a).back() < 0) c = mul(c, BigInt(-1));
  if (c.size() == 1 && c[0] == 1) return a;
  return divexact(a, c);
}

// Subresultant PRS on primitive inputs; returns the primitive gcd.
PZ gcd_primitive(PZ a, PZ b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  if (deg(b) == 0) return PZ{UZ{1}};
  UZ g{1}, h{1};
  while (true) {
    int delta = deg(a) - deg(b);
    PZ r = prem(a, b);
    if (r.empty()) return primitive(b);
    if (deg(r) == 0) return PZ{UZ{1}};
    a = std::move(b);
    b = divexact(r, mul(g, pow(h, delta)));
    g = lc(a);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divexact(pow(g, delta), pow(h, delta - 1));
    }
  }
}

// Rational content and the primitive integer polynomial, oriented with
// `x_is_z` choosing the main variable. Also strips the monomial content.
struct Dense {
  BigRat scale;  // poly = scale * x^mx * y^my * dense
  std::uint32_t mx = 0, my = 0;
  PZ dense;
};

Dense to_dense(const ZWPoly& p, bool x_is_z) {
  Dense out;
  BigInt lcm_den = 1;
  std::uint32_t mx = UINT32_MAX, my = UINT32_MAX, dx = 0, dy = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::uint32_t ex = x_is_z ? e.z : e.w, ey = x_is_z ? e.w : e.z;
    mx = std::min(mx, ex);
    my = std::min(my, ey);
    dx = std::max(dx, ex);
    dy = std::max(dy, ey);
  }
  out.mx = mx;
  out.my = my;
  out.dense.assign(dx - mx + 1, UZ{});
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) {
    std::uint32_t ex = (x_is_z ? e.z : e.w) - mx, ey = (x_is_z ? e.w : e.z) - my;
    UZ& slot = out.dense[ex];
    if (slot.size() <= ey) slot.resize(ey + 1);
    BigInt v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    slot[ey] = std::move(v);
  }
  for (auto& slot : out.dense) {
    for (auto& v : slot) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    trim(slot);
  }
  trim(out.dense);
  out.scale = BigRat(g, lcm_den);
  out.scale.canonicalize();
  return out;
}

ZWPoly from_dense(const PZ& d, bool x_is_z, std::uint32_t mx, std::uint32_t my,
                  const BigRat& scale) {
  std::vector<ZWPoly::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d[i].size(); ++j) {
      if (d[i][j] == 0) continue;
      std::uint32_t ex = static_cast<std::uint32_t>(i) + mx;
      std::uint32_t ey = static_cast<std::uint32_t>(j) + my;
      Exponent e = x_is_z ? Exponent{ex, ey} : Exponent{ey, ex};
      terms.emplace_back(e, BigRat(d[i][j]) * scale);
    }
  }
  return ZWPoly::from_terms(std::move(terms));
}

ZWPoly make_monic(ZWPoly p) {
  if (p.is_zero()) return p;
  BigRat inv = 1 / p.leading().second;
  return p * inv;
}

}  // namespace

ZWPoly gcd(const ZWPoly& a, const ZWPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return ZWPoly(1);
  // Prefer the variable of smaller degree as the main one: shorter PRS.
  bool x_is_z = std::max(a.degree_z(), b.degree_z()) <= std::max(a.degree_w(), b.degree_w());
  Dense da = to_dense(a, x_is_z), db = to_dense(b, x_is_z);
  std::uint32_t mx = std::min(da.mx, db.mx), my = std::min(da.my, db.my);

  UZ ca = content(da.dense), cb = content(db.dense);
  UZ c = gcd(ca, cb);
  PZ g;
  if (deg(da.dense) == 0 || deg(db.dense) == 0) {
    g = PZ{c};
  } else {
    PZ pa = divexact(da.dense, ca), pb = divexact(db.dense, cb);
    g = mul(gcd_primitive(std::move(pa), std::move(pb)), c);
  }
  return make_monic(from_dense(g, x_is_z, mx, my, 1));
}

ZWPoly exact_div(const ZWPoly& a, const ZWPoly& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_constant()) return a * (1 / b.leading().second);
  bool x_is_z = true;
  Dense da = to_dense(a, x_is_z), db = to_dense(b, x_is_z);
  if (da.mx < db.mx || da.my < db.my) throw MathError("inexact polynomial division");
  PZ q = divexact(da.dense, db.dense);
  return from_dense(q, x_is_z, da.mx - db.mx, da.my - db.my, da.scale / db.scale);
}

}  // namespace charvar
