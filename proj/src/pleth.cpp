#include "charvar/pleth.hpp"

#include <algorithm>

namespace charvar {

namespace {

Partition concat(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(v));
}

Partition scale(const Partition& a, int m) {
  std::vector<int> v = a.parts();
  for (int& x : v) x *= m;
  return Partition(std::move(v));
}

}  // namespace

MultiSymFunc MultiSymFunc::tensor(const std::vector<SymFunc1>& per_alphabet) {
  int k = static_cast<int>(per_alphabet.size());
  MultiSymFunc out(k);
  out.add_term(MultiKey(k), FieldElem(1));
  for (int j = 0; j < k; ++j) {
    SymFunc1 f = convert(per_alphabet[j], Basis::p);
    MultiSymFunc next(k);
    for (const auto& [key, c] : out.terms_)
      for (const auto& [lam, a] : f.terms()) {
        MultiKey nk = key;
        nk[j] = lam;
        next.add_term(nk, c * a);
      }
    out = std::move(next);
  }
  return out;
}

MultiSymFunc MultiSymFunc::constant(int k, const FieldElem& c) {
  MultiSymFunc out(k);
  out.add_term(MultiKey(k), c);
  return out;
}

FieldElem MultiSymFunc::coefficient(const MultiKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? FieldElem() : it->second;
}

void MultiSymFunc::add_term(const MultiKey& key, const FieldElem& c) {
  if (static_cast<int>(key.size()) != k_)
    throw MathError("key with " + std::to_string(key.size()) + " alphabets added to a " +
                    std::to_string(k_) + "-alphabet function");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiSymFunc& MultiSymFunc::operator+=(const MultiSymFunc& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

MultiSymFunc& MultiSymFunc::operator-=(const MultiSymFunc& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

MultiSymFunc& MultiSymFunc::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, x] : terms_) x *= c;
  return *this;
}

MultiSymFunc operator*(const MultiSymFunc& a, const MultiSymFunc& b) {
  if (a.k_ != b.k_) throw MathError("alphabet count mismatch in product");
  MultiSymFunc out(a.k_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      MultiKey key(a.k_);
      for (int j = 0; j < a.k_; ++j) key[j] = concat(ka[j], kb[j]);
      out.add_term(key, ca * cb);
    }
  return out;
}

MultiSymFunc MultiSymFunc::adams(int m) const {
  MultiSymFunc out(k_);
  for (const auto& [key, c] : terms_) {
    MultiKey nk(k_);
    for (int j = 0; j < k_; ++j) nk[j] = scale(key[j], m);
    out.terms_.emplace(std::move(nk), c.inflate(static_cast<unsigned>(m)));
  }
  return out;
}

MultiSymFunc MultiSymFunc::swap_alphabets(int i, int j) const {
  MultiSymFunc out(k_);
  for (const auto& [key, c] : terms_) {
    MultiKey nk = key;
    std::swap(nk.at(i), nk.at(j));
    out.terms_.emplace(std::move(nk), c);
  }
  return out;
}

std::string MultiSymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")";
    for (int j = 0; j < k_; ++j)
      if (!key[j].empty()) out += "*p" + key[j].to_string() + "[X" + std::to_string(j + 1) + "]";
  }
  return out;
}

FieldElem pair_multi(const MultiSymFunc& f, const MultiSymFunc& g) {
  if (f.k() != g.k())
    throw ValidationError("pairing across " + std::to_string(f.k()) + " and " +
                          std::to_string(g.k()) + " alphabets");
  const auto& small = f.terms().size() <= g.terms().size() ? f : g;
  const auto& large = &small == &f ? g : f;
  FieldElem acc;
  for (const auto& [key, c] : small.terms()) {
    auto it = large.terms().find(key);
    if (it == large.terms().end()) continue;
    BigInt z = 1;
    for (const auto& lam : key) z *= z_lambda(lam);
    acc += c * it->second * BigRat(z);
  }
  return acc;
}

// ---- series ----------------------------------------------------------------

SymSeries::SymSeries(int k, int n) : k_(k), n_(n), c_(n + 1, MultiSymFunc(k)) {
  if (n < 0) throw MathError("negative truncation order");
}

SymSeries& SymSeries::operator+=(const SymSeries& o) {
  if (o.k_ != k_ || o.n_ != n_) throw MathError("series shape mismatch");
  for (int d = 0; d <= n_; ++d) c_[d] += o.c_[d];
  return *this;
}

SymSeries& SymSeries::operator-=(const SymSeries& o) {
  if (o.k_ != k_ || o.n_ != n_) throw MathError("series shape mismatch");
  for (int d = 0; d <= n_; ++d) c_[d] -= o.c_[d];
  return *this;
}

SymSeries& SymSeries::operator*=(const FieldElem& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

SymSeries operator*(const SymSeries& a, const SymSeries& b) {
  if (a.k_ != b.k_ || a.n_ != b.n_) throw MathError("series shape mismatch");
  SymSeries out(a.k_, a.n_);
  for (int i = 0; i <= a.n_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.n_; ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

SymSeries SymSeries::adams(int m) const {
  if (m < 1) throw MathError("Adams operator index must be positive");
  SymSeries out(k_, n_);
  out.truncated_ = truncated_;
  for (int d = 0; d <= n_; ++d) {
    if (c_[d].is_zero()) continue;
    if (d * m > n_) {
      out.truncated_ = true;
      continue;
    }
    out.c_[d * m] = c_[d].adams(m);
  }
  return out;
}

SymSeries adams(int m, const SymSeries& f) { return f.adams(m); }

SymSeries series_exp(const SymSeries& g) {
  if (!g[0].is_zero()) throw MathError("exp needs a series without constant term");
  SymSeries e(g.k(), g.order());
  e[0] = MultiSymFunc::constant(g.k(), FieldElem(1));
  for (int d = 1; d <= g.order(); ++d) {
    MultiSymFunc acc(g.k());
    for (int j = 1; j <= d; ++j) {
      if (g[j].is_zero() || e[d - j].is_zero()) continue;
      acc += (g[j] * e[d - j]) * FieldElem(j);
    }
    e[d] = acc * FieldElem(BigRat(1, d));
  }
  return e;
}

SymSeries series_log(const SymSeries& h) {
  if (!(h[0] == MultiSymFunc::constant(h.k(), FieldElem(1))))
    throw MathError("log needs a series with constant term 1");
  SymSeries l(h.k(), h.order());
  for (int d = 1; d <= h.order(); ++d) {
    MultiSymFunc acc = h[d] * FieldElem(d);
    for (int j = 1; j < d; ++j) {
      if (l[j].is_zero() || h[d - j].is_zero()) continue;
      acc -= (l[j] * h[d - j]) * FieldElem(j);
    }
    l[d] = acc * FieldElem(BigRat(1, d));
  }
  return l;
}

int moebius(int m) {
  int result = 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

SymSeries pleth_exp(const SymSeries& g) {
  if (!g[0].is_zero()) throw MathError("plethystic Exp needs zero constant term");
  SymSeries sum(g.k(), g.order());
  for (int m = 1; m <= g.order(); ++m) sum += g.adams(m) * FieldElem(BigRat(1, m));
  return series_exp(sum);
}

SymSeries pleth_log(const SymSeries& h) {
  SymSeries l = series_log(h);
  SymSeries out(h.k(), h.order());
  for (int m = 1; m <= h.order(); ++m) {
    int mu = moebius(m);
    if (mu == 0) continue;
    out += l.adams(m) * FieldElem(BigRat(mu, m));
  }
  return out;
}

}  // namespace charvar
