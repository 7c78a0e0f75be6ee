#include "charvar/symfunc.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <set>

namespace charvar {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::e: return 'e';
    case Basis::h: return 'h';
    case Basis::p: return 'p';
    case Basis::s: return 's';
  }
  return '?';
}

Basis basis_from_letter(std::string_view name) {
  if (name == "m") return Basis::m;
  if (name == "e") return Basis::e;
  if (name == "h") return Basis::h;
  if (name == "p") return Basis::p;
  if (name == "s") return Basis::s;
  throw ValidationError("unknown basis '" + std::string(name) + "'");
}

// ---- characters ------------------------------------------------------------

namespace {

// Beta-set (first-column hook lengths) of lam padded to `len` entries.
std::vector<int> beta_set(const Partition& lam, int len) {
  std::vector<int> b(len);
  for (int i = 0; i < len; ++i) b[i] = lam.part(i + 1) + (len - 1 - i);
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  int len = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) parts.push_back(b[i] - (len - 1 - i));
  return Partition::from_unsorted(parts);
}

BigInt mn_rec(const Partition& lam, const std::vector<int>& rho, std::size_t idx) {
  if (idx == rho.size()) return lam.empty() ? 1 : 0;
  int r = rho[idx];
  int len = lam.length();
  std::vector<int> beta = beta_set(lam, len);
  std::set<int> present(beta.begin(), beta.end());
  BigInt total = 0;
  for (int i = 0; i < len; ++i) {
    int from = beta[i], to = from - r;
    if (to < 0 || present.count(to)) continue;
    int between = 0;
    for (int x : beta)
      if (x > to && x < from) ++between;
    auto next = beta;
    next[i] = to;
    BigInt sub = mn_rec(from_beta(next), rho, idx + 1);
    if (between % 2) total -= sub;
    else total += sub;
  }
  return total;
}

}  // namespace

BigInt character(const Partition& lam, const Partition& rho) {
  if (lam.size() != rho.size()) throw ValidationError("character: size mismatch");
  return mn_rec(lam, rho.parts(), 0);
}

// ---- transition tables -----------------------------------------------------

namespace {

using Dense = std::vector<std::vector<BigRat>>;

Dense invert(Dense a) {
  std::size_t n = a.size();
  Dense inv(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw MathError("singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    BigRat s = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      BigRat f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (a[col][j] != 0) a[r][j] -= f * a[col][j];
        if (inv[col][j] != 0) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Partition concat(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(v));
}

// Number of ways to distribute the parts of rho into rows with sums lam.
long count_fillings(const std::vector<int>& rho, std::size_t idx, std::vector<int>& room) {
  if (idx == rho.size()) {
    return std::all_of(room.begin(), room.end(), [](int x) { return x == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& r : room) {
    if (r < rho[idx]) continue;
    r -= rho[idx];
    total += count_fillings(rho, idx + 1, room);
    r += rho[idx];
  }
  return total;
}

struct DegreeTables {
  std::once_flag once;
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  // to_p[b][i]: expansion of b_{parts[i]} in power sums.
  std::array<std::vector<std::map<Partition, BigRat>>, 5> to_p;
  // from_p[b][i]: expansion of p_{parts[i]} in basis b.
  std::array<std::vector<std::map<Partition, BigRat>>, 5> from_p;
};

std::array<DegreeTables, kMaxTableDegree + 1>& all_tables() {
  static std::array<DegreeTables, kMaxTableDegree + 1> t;
  return t;
}

std::size_t bi(Basis b) { return static_cast<std::size_t>(b); }

const DegreeTables& tables(int d);

// Power-sum expansion of h_n (sign = false) or e_n (sign = true).
std::map<Partition, BigRat> single_row(int n, bool sign) {
  std::map<Partition, BigRat> out;
  for (const auto& rho : partitions_of(n)) {
    BigRat c(BigInt(1), z_lambda(rho));
    if (sign && (n - rho.length()) % 2) c = -c;
    out[rho] = c;
  }
  return out;
}

std::map<Partition, BigRat> product_expansion(const Partition& lam, bool sign) {
  std::map<Partition, BigRat> acc{{Partition(), BigRat(1)}};
  for (int part : lam.parts()) {
    std::map<Partition, BigRat> next;
    for (const auto& [a, ca] : acc)
      for (const auto& [b, cb] : single_row(part, sign)) next[concat(a, b)] += ca * cb;
    acc = std::move(next);
  }
  return acc;
}

void build(DegreeTables& t, int d) {
  t.parts = partitions_of(d);
  std::size_t n = t.parts.size();
  for (std::size_t i = 0; i < n; ++i) t.index[t.parts[i]] = i;

  auto to_maps = [&](const Dense& m) {
    std::vector<std::map<Partition, BigRat>> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][j] != 0) out[i][t.parts[j]] = m[i][j];
    return out;
  };
  auto from_maps = [&](const std::vector<std::map<Partition, BigRat>>& rows) {
    Dense m(n, std::vector<BigRat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [p, c] : rows[i]) m[i][t.index.at(p)] = c;
    return m;
  };

  Dense id(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  t.to_p[bi(Basis::p)] = to_maps(id);
  t.from_p[bi(Basis::p)] = to_maps(id);

  Dense chi(n, std::vector<BigRat>(n));  // chi[lam][rho]
  Dense s_to_p(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      chi[i][j] = BigRat(character(t.parts[i], t.parts[j]));
      s_to_p[i][j] = chi[i][j] / BigRat(z_lambda(t.parts[j]));
    }
  Dense p_to_s(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p_to_s[i][j] = chi[j][i];
  t.to_p[bi(Basis::s)] = to_maps(s_to_p);
  t.from_p[bi(Basis::s)] = to_maps(p_to_s);

  for (bool sign : {false, true}) {
    std::vector<std::map<Partition, BigRat>> rows;
    for (const auto& lam : t.parts) rows.push_back(product_expansion(lam, sign));
    Basis b = sign ? Basis::e : Basis::h;
    t.to_p[bi(b)] = rows;
    t.from_p[bi(b)] = to_maps(invert(from_maps(rows)));
  }

  Dense p_to_m(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> room = t.parts[j].parts();
      p_to_m[i][j] = count_fillings(t.parts[i].parts(), 0, room);
    }
  t.from_p[bi(Basis::m)] = to_maps(p_to_m);
  t.to_p[bi(Basis::m)] = to_maps(invert(p_to_m));
}

const DegreeTables& tables(int d) {
  if (d < 0 || d > kMaxTableDegree)
    throw SizingError("symmetric function degree " + std::to_string(d) +
                      " exceeds the table limit " + std::to_string(kMaxTableDegree));
  DegreeTables& t = all_tables()[d];
  std::call_once(t.once, [&] { build(t, d); });
  return t;
}

}  // namespace

const std::map<Partition, BigRat>& p_expansion(Basis b, const Partition& lam) {
  const auto& t = tables(lam.size());
  return t.to_p[bi(b)][t.index.at(lam)];
}

// ---- SymFunc1 --------------------------------------------------------------

SymFunc1::SymFunc1(Basis basis, int degree_bound) : basis_(basis), bound_(degree_bound) {
  if (degree_bound < 0 || degree_bound > kMaxTableDegree)
    throw SizingError("degree bound " + std::to_string(degree_bound) + " out of range");
}

SymFunc1 SymFunc1::element(Basis basis, const Partition& lam, int degree_bound) {
  SymFunc1 f(basis, degree_bound);
  f.add_term(lam, FieldElem(1));
  return f;
}

FieldElem SymFunc1::coefficient(const Partition& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? FieldElem() : it->second;
}

void SymFunc1::add_term(const Partition& lam, const FieldElem& c) {
  if (lam.size() > bound_)
    throw SizingError("term " + lam.to_string() + " exceeds degree bound " +
                      std::to_string(bound_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lam, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc1& SymFunc1::operator+=(const SymFunc1& o) {
  const SymFunc1& src = o.basis_ == basis_ ? o : convert(o, basis_);
  for (const auto& [lam, c] : src.terms_) add_term(lam, c);
  return *this;
}

SymFunc1& SymFunc1::operator-=(const SymFunc1& o) {
  SymFunc1 src = o.basis_ == basis_ ? o : convert(o, basis_);
  for (const auto& [lam, c] : src.terms_) add_term(lam, -c);
  return *this;
}

SymFunc1& SymFunc1::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lam, x] : terms_) x *= c;
  return *this;
}

SymFunc1 SymFunc1::swap_variables() const {
  SymFunc1 out(basis_, bound_);
  for (const auto& [lam, c] : terms_) out.terms_.emplace(lam, c.swap_variables());
  return out;
}

namespace {

// Coefficient prefix and sign for rendering; returns false for a leading minus.
std::string coeff_text(const FieldElem& c, bool& negative) {
  negative = false;
  if (c.is_rational_constant()) {
    BigRat v = c.constant_value();
    if (v < 0) {
      negative = true;
      v = -v;
    }
    if (v == 1) return "";
    return v.get_str() + "*";
  }
  return "(" + c.to_string() + ")*";
}

}  // namespace

std::string SymFunc1::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    bool neg = false;
    std::string c = coeff_text(it->second, neg);
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    out += c;
    out += basis_letter(basis_);
    out += it->first.to_string();
  }
  return out;
}

SymFunc1 convert(const SymFunc1& f, Basis target) {
  if (f.basis() == target) return f;
  std::map<Partition, FieldElem> in_p;
  if (f.basis() == Basis::p) {
    in_p = f.terms();
  } else {
    for (const auto& [lam, c] : f.terms())
      for (const auto& [rho, a] : p_expansion(f.basis(), lam)) {
        auto& slot = in_p[rho];
        slot += c * a;
      }
  }
  SymFunc1 out(target, f.degree_bound());
  for (const auto& [rho, c] : in_p) {
    if (c.is_zero()) continue;
    if (target == Basis::p) {
      out.add_term(rho, c);
      continue;
    }
    const auto& t = tables(rho.size());
    for (const auto& [mu, b] : t.from_p[bi(target)][t.index.at(rho)]) out.add_term(mu, c * b);
  }
  return out;
}

SymFunc1 multiply(const SymFunc1& f, const SymFunc1& g) {
  int bound = std::min(f.degree_bound(), g.degree_bound());
  SymFunc1 a = convert(f, Basis::p), b = convert(g, Basis::p);
  SymFunc1 prod(Basis::p, bound);
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) {
      if (la.size() + lb.size() > bound)
        throw SizingError("product degree " + std::to_string(la.size() + lb.size()) +
                          " exceeds degree bound " + std::to_string(bound));
      prod.add_term(concat(la, lb), ca * cb);
    }
  return convert(prod, f.basis());
}

FieldElem hall_pairing(const SymFunc1& f, const SymFunc1& g) {
  SymFunc1 a = convert(f, Basis::p), b = convert(g, Basis::p);
  FieldElem acc;
  for (const auto& [lam, ca] : a.terms()) {
    auto it = b.terms().find(lam);
    if (it == b.terms().end()) continue;
    acc += ca * it->second * BigRat(z_lambda(lam));
  }
  return acc;
}

BigInt kostka(const Partition& nu, const Partition& lam) {
  if (nu.size() != lam.size())
    throw ValidationError("kostka: |" + nu.to_string() + "| != |" + lam.to_string() + "|");
  const auto& a = p_expansion(Basis::h, nu);
  const auto& b = p_expansion(Basis::s, lam);
  BigRat acc = 0;
  for (const auto& [rho, ca] : a) {
    auto it = b.find(rho);
    if (it != b.end()) acc += ca * it->second * BigRat(z_lambda(rho));
  }
  if (acc.get_den() != 1) throw MathError("non-integral Kostka number");
  return acc.get_num();
}

SymFunc1 twisted_schur(const TypeOmega& t) {
  std::map<Partition, BigRat> acc{{Partition(), BigRat(1)}};
  for (const auto& [d, w] : t.pairs) {
    std::map<Partition, BigRat> next;
    for (const auto& [rho, c] : p_expansion(Basis::s, w)) {
      std::vector<int> scaled = rho.parts();
      for (int& x : scaled) x *= d;
      Partition r(scaled);
      for (const auto& [a, ca] : acc) next[concat(a, r)] += ca * c;
    }
    acc = std::move(next);
  }
  SymFunc1 f(Basis::p, std::max(8, t.degree()));
  for (const auto& [rho, c] : acc)
    if (c != 0) f.add_term(rho, FieldElem(c));
  return convert(f, Basis::s);
}

SymFunc1 adams_basis_only(const SymFunc1& f, int m) {
  if (f.basis() != Basis::p) throw MathError("adams_basis_only expects the p basis");
  SymFunc1 out(Basis::p, f.degree_bound());
  for (const auto& [lam, c] : f.terms()) {
    std::vector<int> scaled = lam.parts();
    for (int& x : scaled) x *= m;
    out.add_term(Partition(scaled), c);
  }
  return out;
}

}  // namespace charvar
