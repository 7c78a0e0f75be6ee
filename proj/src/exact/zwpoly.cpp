#include "charvar/exact.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace charvar {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ValidationError("empty integer literal");
  BigInt out;
  if (out.set_str(s, 10) != 0) throw ValidationError("bad integer literal: " + s);
  return out;
}

BigRat parse_bigrat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in rational literal");
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const BigRat& x) { return x.get_str(10); }

namespace {

std::uint64_t pack(Exponent e) {
  return (static_cast<std::uint64_t>(e.z) << 32) | e.w;
}

Exponent unpack(std::uint64_t key) {
  return {static_cast<std::uint32_t>(key >> 32),
          static_cast<std::uint32_t>(key & 0xffffffffu)};
}

void sort_terms(std::vector<ZWPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return grlex_less(a.first, b.first);
  });
}

// Merge two grlex-sorted term lists, b scaled by sign.
std::vector<ZWPoly::Term> merge(const std::vector<ZWPoly::Term>& a,
                                const std::vector<ZWPoly::Term>& b, int sign) {
  std::vector<ZWPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : BigRat(-b[j].second));
      ++j;
    } else {
      BigRat c = sign > 0 ? BigRat(a[i].second + b[j].second)
                          : BigRat(a[i].second - b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ZWPoly::ZWPoly(const BigRat& c) {
  if (c != 0) terms_.emplace_back(Exponent{}, c);
}

ZWPoly ZWPoly::monomial(const BigRat& c, std::uint32_t ez, std::uint32_t ew) {
  ZWPoly p;
  if (c != 0) p.terms_.emplace_back(Exponent{ez, ew}, c);
  return p;
}

ZWPoly ZWPoly::from_terms(std::vector<Term> terms) {
  std::unordered_map<std::uint64_t, BigRat> acc;
  acc.reserve(terms.size());
  for (auto& [e, c] : terms) acc[pack(e)] += c;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) out.emplace_back(unpack(k), std::move(c));
  sort_terms(out);
  return ZWPoly(std::move(out), 0);
}

bool ZWPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0);
}

bool ZWPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.total() == 0 && terms_[0].second == 1;
}

BigRat ZWPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, Exponent x) { return grlex_less(t.first, x); });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

std::uint32_t ZWPoly::degree_z() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.z);
  return d;
}

std::uint32_t ZWPoly::degree_w() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.w);
  return d;
}

std::uint32_t ZWPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().first.total();
}

ZWPoly ZWPoly::operator-() const {
  ZWPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

ZWPoly& ZWPoly::operator+=(const ZWPoly& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

ZWPoly& ZWPoly::operator-=(const ZWPoly& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

ZWPoly operator*(const ZWPoly& a, const ZWPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].first.total() == 0)
    return b * a.terms_[0].second;
  if (b.terms_.size() == 1 && b.terms_[0].first.total() == 0)
    return a * b.terms_[0].second;
  std::unordered_map<std::uint64_t, BigRat> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  BigRat tmp;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      tmp = ca * cb;
      acc[pack({ea.z + eb.z, ea.w + eb.w})] += tmp;
    }
  }
  std::vector<ZWPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) out.emplace_back(unpack(k), std::move(c));
  sort_terms(out);
  return ZWPoly(std::move(out), 0);
}

ZWPoly& ZWPoly::operator*=(const ZWPoly& o) {
  *this = *this * o;
  return *this;
}

ZWPoly& ZWPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

bool operator==(const ZWPoly& a, const ZWPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].first == b.terms_[i].first) ||
        a.terms_[i].second != b.terms_[i].second)
      return false;
  }
  return true;
}

ZWPoly ZWPoly::pow(unsigned e) const {
  ZWPoly result(1);
  ZWPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

ZWPoly ZWPoly::inflate(unsigned m) const {
  ZWPoly out = *this;
  for (auto& t : out.terms_) t.first = {t.first.z * m, t.first.w * m};
  return out;
}

ZWPoly ZWPoly::swap_variables() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) std::swap(t.first.z, t.first.w);
  sort_terms(out);
  return ZWPoly(std::move(out), 0);
}

ZWPoly ZWPoly::shift(std::uint32_t ez, std::uint32_t ew) const {
  ZWPoly out = *this;
  for (auto& t : out.terms_) t.first = {t.first.z + ez, t.first.w + ew};
  return out;
}

std::string ZWPoly::to_string(std::string_view zname, std::string_view wname) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = e.total() > 0;
    if (!has_var || mag != 1) {
      os << mag.get_str();
      if (has_var) os << '*';
    }
    bool wrote = false;
    auto var = [&](std::string_view name, std::uint32_t k) {
      if (k == 0) return;
      if (wrote) os << '*';
      os << name;
      if (k > 1) os << '^' << k;
      wrote = true;
    };
    var(zname, e.z);
    var(wname, e.w);
  }
  return os.str();
}

}  // namespace charvar
