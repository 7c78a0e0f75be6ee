#include "charvar/exact.hpp"

namespace charvar {

FieldElem::FieldElem(ZWPoly num, ZWPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = ZWPoly(1);
    return;
  }
  ZWPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  normalize_den();
}

void FieldElem::normalize_den() {
  const BigRat& lc = den_.leading().second;
  if (lc != 1) {
    BigRat inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

BigRat FieldElem::constant_value() const {
  if (!is_rational_constant()) throw MathError("not a rational constant: " + to_string());
  return num_.is_zero() ? BigRat(0) : num_.leading().second;
}

FieldElem FieldElem::operator-() const { return FieldElem(-num_, den_, Reduced{}); }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = FieldElem(num_ + o.num_, den_);
    return *this;
  }
  // Henrici: with g = gcd(b, d), only gcd(numerator, g) can remain.
  ZWPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    ZWPoly n = num_ * o.den_ + o.num_ * den_;
    if (n.is_zero()) return *this = FieldElem();
    *this = FieldElem(std::move(n), den_ * o.den_, Reduced{});
    normalize_den();
    return *this;
  }
  ZWPoly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
  ZWPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = FieldElem();
  ZWPoly g2 = gcd(n, g);
  ZWPoly den = b1 * d1;
  if (g2.is_one()) {
    den *= g;
  } else {
    n = exact_div(n, g2);
    den *= exact_div(g, g2);
  }
  *this = FieldElem(std::move(n), std::move(den), Reduced{});
  normalize_den();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = FieldElem();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  ZWPoly a = num_, b = den_, c = o.num_, d = o.den_;
  ZWPoly g1 = gcd(a, d);
  if (!g1.is_one()) {
    a = exact_div(a, g1);
    d = exact_div(d, g1);
  }
  ZWPoly g2 = gcd(c, b);
  if (!g2.is_one()) {
    c = exact_div(c, g2);
    b = exact_div(b, g2);
  }
  *this = FieldElem(a * c, b * d, Reduced{});
  normalize_den();
  return *this;
}

FieldElem& FieldElem::operator*=(const BigRat& c) {
  if (c == 0) return *this = FieldElem();
  num_ *= c;
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  FieldElem out(den_, num_, Reduced{});
  out.normalize_den();
  return out;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  return *this *= o.inverse();
}

FieldElem FieldElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem out(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)),
                Reduced{});
  out.normalize_den();
  return out;
}

FieldElem FieldElem::inflate(unsigned m) const {
  return FieldElem(num_.inflate(m), den_.inflate(m), Reduced{});
}

FieldElem FieldElem::swap_variables() const {
  FieldElem out(num_.swap_variables(), den_.swap_variables(), Reduced{});
  out.normalize_den();
  return out;
}

std::string FieldElem::to_string(std::string_view zname, std::string_view wname) const {
  if (den_.is_one()) return num_.to_string(zname, wname);
  std::string n = num_.to_string(zname, wname), d = den_.to_string(zname, wname);
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace charvar
