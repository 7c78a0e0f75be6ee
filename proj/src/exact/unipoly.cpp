#include "charvar/exact.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace charvar {

UniPoly::UniPoly(const BigRat& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const BigRat& c, unsigned e) {
  if (c == 0) return {};
  std::vector<BigRat> v(e + 1);
  v[e] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r(1), base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

BigRat UniPoly::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<BigRat> r = a.c_;
  std::vector<BigRat> q(a.c_.size() - b.c_.size() + 1);
  BigRat inv = 1 / b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    BigRat t = r[i + b.degree()] * inv;
    if (t == 0) continue;
    q[i] = t;
    for (int j = 0; j <= b.degree(); ++j) r[i + j] -= t * b.c_[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  BigRat inv = 1 / leading();
  for (auto& x : out.c_) x *= inv;
  return out;
}

bool UniPoly::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRat& x) { return x.get_den() == 1; });
}

std::string UniPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRat& c = c_[i];
    if (c == 0) continue;
    BigRat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = UniPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniRat::UniRat(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  UniPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UniPoly::divmod(num_, g).first;
    den_ = UniPoly::divmod(den_, g).first;
  }
  BigRat inv = 1 / den_.leading();
  num_ = num_ * UniPoly(inv);
  den_ = den_ * UniPoly(inv);
}

UniRat& UniRat::operator+=(const UniRat& o) {
  *this = UniRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

UniRat& UniRat::operator-=(const UniRat& o) {
  *this = UniRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

UniRat& UniRat::operator*=(const UniRat& o) {
  *this = UniRat(num_ * o.num_, den_ * o.den_);
  return *this;
}

UniRat UniRat::shift(int e) const {
  if (e >= 0) return UniRat(num_ * UniPoly::monomial(1, e), den_);
  return UniRat(num_, den_ * UniPoly::monomial(1, -e));
}

std::string UniRat::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

UniPoly evaluate(const ZWPoly& p, const UniPoly& zv, const UniPoly& wv) {
  std::map<std::uint32_t, UniPoly> zpow, wpow;
  auto power = [](std::map<std::uint32_t, UniPoly>& cache, const UniPoly& base,
                  std::uint32_t e) -> const UniPoly& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
    return it->second;
  };
  UniPoly acc;
  for (const auto& [e, c] : p.terms())
    acc += UniPoly(c) * power(zpow, zv, e.z) * power(wpow, wv, e.w);
  return acc;
}

}  // namespace

UniRat substitute(const FieldElem& f, const UniPoly& z_val, const UniPoly& w_val) {
  UniPoly den = evaluate(f.den(), z_val, w_val);
  if (den.is_zero())
    throw PoleError("denominator " + f.den().to_string() +
                    " vanishes identically under the substitution");
  return UniRat(evaluate(f.num(), z_val, w_val), den);
}

UniPoly poly_assert(const UniRat& r) {
  if (!r.is_polynomial())
    throw NotPolynomial("expected a polynomial, got " + r.to_string());
  return r.num();
}

FieldElem substitute_monomial(const FieldElem& f, const MonomialImage& image_z,
                              const MonomialImage& image_w) {
  // Substitute into each polynomial, tracking the most negative exponents so
  // that the result can be written as (N / D) * u^a v^b with N, D polynomial.
  auto image = [&](const ZWPoly& p, long& min_u, long& min_v) {
    std::vector<std::tuple<long, long, BigRat>> raw;
    min_u = 0;
    min_v = 0;
    for (const auto& [e, c] : p.terms()) {
      long eu = static_cast<long>(e.z) * image_z.eu + static_cast<long>(e.w) * image_w.eu;
      long ev = static_cast<long>(e.z) * image_z.ev + static_cast<long>(e.w) * image_w.ev;
      BigRat coeff = c;
      for (std::uint32_t i = 0; i < e.z; ++i) coeff *= image_z.coeff;
      for (std::uint32_t i = 0; i < e.w; ++i) coeff *= image_w.coeff;
      min_u = std::min(min_u, eu);
      min_v = std::min(min_v, ev);
      raw.emplace_back(eu, ev, std::move(coeff));
    }
    std::vector<ZWPoly::Term> terms;
    for (auto& [eu, ev, c] : raw)
      terms.emplace_back(Exponent{static_cast<std::uint32_t>(eu - min_u),
                                  static_cast<std::uint32_t>(ev - min_v)},
                         std::move(c));
    return ZWPoly::from_terms(std::move(terms));
  };
  long nu = 0, nv = 0, du = 0, dv = 0;
  ZWPoly num = image(f.num(), nu, nv);
  ZWPoly den = image(f.den(), du, dv);
  if (den.is_zero()) throw PoleError("denominator vanishes under the substitution");
  // value = num * u^nu v^nv / (den * u^du v^dv)
  long su = nu - du, sv = nv - dv;
  ZWPoly up = ZWPoly::monomial(1, su > 0 ? su : 0, sv > 0 ? sv : 0);
  ZWPoly down = ZWPoly::monomial(1, su < 0 ? -su : 0, sv < 0 ? -sv : 0);
  return FieldElem(num * up, den * down);
}

}  // namespace charvar
