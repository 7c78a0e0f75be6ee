#include "charvar/fq.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <unordered_set>

namespace charvar::fq {

namespace {

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

constexpr double kLoopGuard = 1e9;
constexpr std::size_t kClassGuard = 10'000'000;

}  // namespace

// ---- fields -------------------------------------------------------------------

PrimeField::PrimeField(long q) : q_(q) {
  if (!is_prime(q)) throw ValidationError("q = " + std::to_string(q) + " is not a prime");
  if (q > 3037000499L) throw SizingError("q too large for machine arithmetic");
  if (q == 2) return;
  for (long x = 2; x < q; ++x)
    if (pow(x, (q - 1) / 2) == q - 1) {
      nonres_ = x;
      break;
    }
}

long PrimeField::pow(long a, long e) const {
  long r = 1 % q_, b = reduce(a);
  for (; e > 0; e >>= 1, b = mul(b, b))
    if (e & 1) r = mul(r, b);
  return r;
}

long PrimeField::inv(long a) const {
  a = reduce(a);
  if (a == 0) throw ValidationError("zero has no inverse in F_q");
  return pow(a, q_ - 2);
}

long PrimeField::primitive_root() const {
  if (q_ == 2) return 1;
  std::vector<long> primes;
  long m = q_ - 1;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (long g = 2; g < q_; ++g)
    if (std::all_of(primes.begin(), primes.end(), [&](long p) { return pow(g, (q_ - 1) / p) != 1; }))
      return g;
  throw MathError("no primitive root found");
}

std::optional<long> PrimeField::sqrt(long a) const {
  a = reduce(a);
  for (long x = 0; x < q_; ++x)
    if (mul(x, x) == a) return x;
  return std::nullopt;
}

Fq2 mul(const PrimeField& F, Fq2 x, Fq2 y) {
  return {F.add(F.mul(x.a, y.a), F.mul(F.mul(x.b, y.b), F.nonresidue())),
          F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}

Fq2 pow(const PrimeField& F, Fq2 x, long e) {
  Fq2 r{1 % F.q(), 0};
  for (; e > 0; e >>= 1, x = mul(F, x, x))
    if (e & 1) r = mul(F, r, x);
  return r;
}

Fq2 frobenius(const PrimeField& F, Fq2 x) { return {x.a, F.neg(x.b)}; }

// ---- class specs --------------------------------------------------------------

int FqClassSpec::rank() const {
  int n = 0;
  for (const auto& e : eigenvalues) n += e.degree() * e.mult;
  return n;
}

std::vector<std::pair<Fq2, int>> FqClassSpec::spectrum(const PrimeField& F) const {
  std::vector<std::pair<Fq2, int>> out;
  for (const auto& e : eigenvalues) {
    out.emplace_back(e.value, e.mult);
    if (e.quadratic()) out.emplace_back(frobenius(F, e.value), e.mult);
  }
  return out;
}

void FqClassSpec::validate(const PrimeField& F) const {
  if (eigenvalues.empty()) throw ValidationError("class has no eigenvalues");
  for (const auto& e : eigenvalues) {
    if (e.value.a < 0 || e.value.a >= F.q() || e.value.b < 0 || e.value.b >= F.q())
      throw ValidationError("eigenvalue coordinates must lie in [0, q)");
    if (e.value == Fq2{}) throw ValidationError("eigenvalue 0 is not invertible");
    if (e.quadratic() && F.q() == 2) throw ValidationError("quadratic eigenvalues need odd q");
    if (e.mult < 1 || e.jordan.size() != e.mult)
      throw ValidationError("Jordan type must be a partition of the multiplicity");
  }
  auto spec = spectrum(F);
  std::set<Fq2> seen;
  for (const auto& [x, m] : spec)
    if (!seen.insert(x).second) throw ValidationError("class repeats an eigenvalue");
}

// ---- matrices -------------------------------------------------------------------

FqMatrix FqMatrix::identity(int n) {
  FqMatrix m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::uint64_t FqMatrix::encode(long q) const {
  std::uint64_t code = 0;
  for (int i = n * n - 1; i >= 0; --i) code = code * q + static_cast<std::uint64_t>(a[i]);
  return code;
}

FqMatrix mul(const PrimeField& F, const FqMatrix& x, const FqMatrix& y) {
  FqMatrix r;
  r.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      long s = 0;
      for (int l = 0; l < x.n; ++l) s += x.at(i, l) * y.at(l, j);
      r.at(i, j) = s % F.q();
    }
  return r;
}

long det(const PrimeField& F, const FqMatrix& x) {
  FqMatrix m = x;
  long d = 1;
  for (int c = 0; c < m.n; ++c) {
    int p = c;
    while (p < m.n && m.at(p, c) == 0) ++p;
    if (p == m.n) return 0;
    if (p != c) {
      for (int j = 0; j < m.n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, m.at(c, c));
    long inv = F.inv(m.at(c, c));
    for (int r = c + 1; r < m.n; ++r) {
      long f = F.mul(m.at(r, c), inv);
      for (int j = c; j < m.n; ++j) m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(c, j)));
    }
  }
  return d;
}

int rank(const PrimeField& F, FqMatrix m) {
  int r = 0;
  for (int c = 0; c < m.n && r < m.n; ++c) {
    int p = r;
    while (p < m.n && m.at(p, c) == 0) ++p;
    if (p == m.n) continue;
    for (int j = 0; j < m.n; ++j) std::swap(m.at(p, j), m.at(r, j));
    long inv = F.inv(m.at(r, c));
    for (int i = r + 1; i < m.n; ++i) {
      long f = F.mul(m.at(i, c), inv);
      for (int j = c; j < m.n; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

FqMatrix inverse(const PrimeField& F, const FqMatrix& x) {
  int n = x.n;
  FqMatrix m = x, out = FqMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m.at(p, c) == 0) ++p;
    if (p == n) throw MathError("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(m.at(p, j), m.at(c, j));
      std::swap(out.at(p, j), out.at(c, j));
    }
    long inv = F.inv(m.at(c, c));
    for (int j = 0; j < n; ++j) {
      m.at(c, j) = F.mul(m.at(c, j), inv);
      out.at(c, j) = F.mul(out.at(c, j), inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m.at(r, c) == 0) continue;
      long f = m.at(r, c);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(c, j)));
        out.at(r, j) = F.sub(out.at(r, j), F.mul(f, out.at(c, j)));
      }
    }
  }
  return out;
}

long trace(const PrimeField& F, const FqMatrix& x) {
  long t = 0;
  for (int i = 0; i < x.n; ++i) t = F.add(t, x.at(i, i));
  return t;
}

BigInt group_size(int n, long q) {
  BigInt out = 1, qn, qi = 1;
  mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
  for (int i = 0; i < n; ++i, qi *= q) out *= qn - qi;
  return out;
}

// ---- classes ----------------------------------------------------------------------

namespace {

void check_size(int n) {
  if (n < 1 || n > 3) throw SizingError("matrices limited to 1 <= n <= 3");
}

// Minimal polynomial x² − t x + N of a Frobenius pair.
std::pair<long, long> pair_poly(const PrimeField& F, Fq2 x) {
  long t = F.add(x.a, x.a);
  long N = F.sub(F.mul(x.a, x.a), F.mul(F.mul(x.b, x.b), F.nonresidue()));
  return {t, N};
}

FqMatrix factor_at(const PrimeField& F, const FqMatrix& x, const FqEigen& e) {
  FqMatrix id = FqMatrix::identity(x.n);
  FqMatrix out;
  out.n = x.n;
  if (!e.quadratic()) {
    for (int i = 0; i < x.n * x.n; ++i) out.a[i] = F.sub(x.a[i], F.mul(e.value.a, id.a[i]));
    return out;
  }
  auto [t, N] = pair_poly(F, e.value);
  FqMatrix sq = mul(F, x, x);
  for (int i = 0; i < x.n * x.n; ++i)
    out.a[i] = F.add(F.sub(sq.a[i], F.mul(t, x.a[i])), F.mul(N, id.a[i]));
  return out;
}

}  // namespace

FqMatrix jordan_representative(const PrimeField& F, const FqClassSpec& spec) {
  spec.validate(F);
  int n = spec.rank();
  check_size(n);
  FqMatrix m;
  m.n = n;
  int off = 0;
  for (const auto& e : spec.eigenvalues)
    for (int part : e.jordan.parts()) {
      if (!e.quadratic()) {
        for (int i = 0; i < part; ++i) {
          m.at(off + i, off + i) = e.value.a;
          if (i + 1 < part) m.at(off + i, off + i + 1) = 1;
        }
        off += part;
        continue;
      }
      auto [t, N] = pair_poly(F, e.value);
      for (int i = 0; i < part; ++i) {
        int b = off + 2 * i;
        m.at(b, b + 1) = F.neg(N);
        m.at(b + 1, b) = 1;
        m.at(b + 1, b + 1) = t;
        if (i + 1 < part) {
          m.at(b, b + 2) = 1;
          m.at(b + 1, b + 3) = 1;
        }
      }
      off += 2 * part;
    }
  return m;
}

bool in_class(const PrimeField& F, const FqMatrix& x, const FqClassSpec& spec) {
  if (spec.rank() != x.n) return false;
  for (const auto& e : spec.eigenvalues) {
    FqMatrix f = factor_at(F, x, e);
    FqMatrix p = f;
    for (int m = 1; m <= e.mult; ++m) {
      int expect = 0;
      for (int part : e.jordan.parts()) expect += std::min(part, m);
      if (x.n - rank(F, p) != e.degree() * expect) return false;
      p = mul(F, p, f);
    }
  }
  return true;
}

std::vector<FqMatrix> class_elements(const PrimeField& F, const FqClassSpec& spec) {
  if (F.q() > 17) throw SizingError("class enumeration limited to q <= 17");
  FqMatrix rep = jordan_representative(F, spec);
  int n = rep.n;
  std::vector<std::pair<FqMatrix, FqMatrix>> gens;  // (h, h^{-1})
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      FqMatrix h = FqMatrix::identity(n);
      h.at(i, j) = 1;
      gens.emplace_back(h, inverse(F, h));
    }
  FqMatrix d = FqMatrix::identity(n);
  d.at(0, 0) = F.primitive_root();
  gens.emplace_back(d, inverse(F, d));

  std::vector<FqMatrix> out{rep};
  std::unordered_set<std::uint64_t> seen{rep.encode(F.q())};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& [h, hi] : gens) {
      FqMatrix y = mul(F, mul(F, h, out[i]), hi);
      if (seen.insert(y.encode(F.q())).second) {
        out.push_back(y);
        if (out.size() > kClassGuard) throw SizingError("conjugacy class too large to enumerate");
      }
    }
  return out;
}

// ---- genericity ------------------------------------------------------------------

bool is_generic(const PrimeField& F, const std::vector<FqClassSpec>& specs) {
  if (specs.empty()) throw ValidationError("at least one class is required");
  int n = specs[0].rank();
  std::vector<std::vector<std::pair<Fq2, int>>> spectra;
  for (const auto& s : specs) {
    s.validate(F);
    if (s.rank() != n) throw ValidationError("classes have different ranks");
    spectra.push_back(s.spectrum(F));
  }
  const Fq2 one{1, 0};
  Fq2 total = one;
  for (const auto& sp : spectra)
    for (const auto& [x, m] : sp) total = mul(F, total, pow(F, x, m));
  if (total != one) return false;
  for (int r = 1; r < n; ++r) {
    std::set<Fq2> reach{one};
    for (const auto& sp : spectra) {
      std::set<Fq2> subs;
      std::function<void(std::size_t, int, Fq2)> rec = [&](std::size_t i, int left, Fq2 acc) {
        if (i == sp.size()) {
          if (left == 0) subs.insert(acc);
          return;
        }
        for (int c = 0; c <= std::min(left, sp[i].second); ++c)
          rec(i + 1, left - c, mul(F, acc, pow(F, sp[i].first, c)));
      };
      rec(0, r, one);
      std::set<Fq2> next;
      for (const auto& a : reach)
        for (const auto& b : subs) next.insert(mul(F, a, b));
      reach = std::move(next);
    }
    if (reach.count(one)) return false;
  }
  return true;
}

// ---- counting ----------------------------------------------------------------------

BigInt count_points(int g, long q, const std::vector<FqClassSpec>& specs) {
  PrimeField F(q);
  if (g < 0) throw ValidationError("genus must be nonnegative");
  if (!is_generic(F, specs)) throw ValidationError("classes are not generic over F_q");
  int n = specs[0].rank();
  check_size(n);
  std::size_t k = specs.size();

  std::vector<std::vector<FqMatrix>> classes;
  double loops = 1;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    classes.push_back(class_elements(F, specs[j]));
    loops *= static_cast<double>(classes.back().size());
  }
  std::vector<FqMatrix> gl, gl_inv;
  if (g > 0) {
    loops *= std::pow(group_size(n, q).get_d(), 2 * g);
    if (loops > kLoopGuard) throw SizingError("point count needs more than 1e9 steps");
    long total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    FqMatrix m;
    m.n = n;
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < n * n; ++i, c /= q) m.a[i] = c % q;
      if (det(F, m) != 0) {
        gl.push_back(m);
        gl_inv.push_back(inverse(F, m));
      }
    }
  }
  if (loops > kLoopGuard) throw SizingError("point count needs more than 1e9 steps");
  std::unordered_set<std::uint64_t> last;
  for (const auto& x : class_elements(F, specs.back())) last.insert(x.encode(q));

  std::uint64_t count = 0;
  std::function<void(int, const FqMatrix&)> handles;
  std::function<void(std::size_t, const FqMatrix&)> punctures = [&](std::size_t j, const FqMatrix& acc) {
    if (j + 1 == k) {
      if (last.count(inverse(F, acc).encode(q))) ++count;
      return;
    }
    for (const auto& x : classes[j]) punctures(j + 1, mul(F, acc, x));
  };
  handles = [&](int i, const FqMatrix& acc) {
    if (i == g) {
      punctures(0, acc);
      return;
    }
    for (std::size_t a = 0; a < gl.size(); ++a)
      for (std::size_t b = 0; b < gl.size(); ++b) {
        FqMatrix c = mul(F, mul(F, mul(F, gl[a], gl[b]), gl_inv[a]), gl_inv[b]);
        handles(i + 1, mul(F, acc, c));
      }
  };
  handles(0, FqMatrix::identity(n));

  BigInt pgl = group_size(n, q) / (q - 1);
  BigInt total(std::to_string(count));
  if (total % pgl != 0)
    throw MathError("solution count " + total.get_str() + " is not divisible by |PGL_n(F_q)| = " +
                    pgl.get_str());
  return total / pgl;
}

BigInt fricke_count(long q, long t1, long t2, long t3, long t4) {
  PrimeField F(q);
  t1 = F.reduce(t1), t2 = F.reduce(t2), t3 = F.reduce(t3), t4 = F.reduce(t4);
  long A = F.neg(F.add(F.mul(t1, t4), F.mul(t2, t3)));
  long B = F.neg(F.add(F.mul(t2, t4), F.mul(t1, t3)));
  long C = F.neg(F.add(F.mul(t3, t4), F.mul(t1, t2)));
  long D = F.mul(F.mul(t1, t2), F.mul(t3, t4));
  for (long t : {t1, t2, t3, t4}) D = F.add(D, F.mul(t, t));
  D = F.sub(D, F.reduce(4));
  std::uint64_t count = 0;
  for (long x = 0; x < q; ++x)
    for (long y = 0; y < q; ++y)
      for (long z = 0; z < q; ++z) {
        long v = F.mul(F.mul(x, y), z);
        v = F.add(v, F.add(F.mul(x, x), F.add(F.mul(y, y), F.mul(z, z))));
        v = F.add(v, F.add(F.mul(A, x), F.add(F.mul(B, y), F.mul(C, z))));
        if (F.add(v, D) == 0) ++count;
      }
  return BigInt(std::to_string(count));
}

UniPoly lagrange(const std::vector<std::pair<BigInt, BigInt>>& points) {
  UniPoly out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPoly basis(1);
    BigRat denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      if (points[i].first == points[j].first) throw ValidationError("interpolation nodes must be distinct");
      basis = basis * (UniPoly::x() - UniPoly(BigRat(points[j].first)));
      denom *= BigRat(points[i].first - points[j].first);
    }
    out += basis * UniPoly(BigRat(points[i].second) / denom);
  }
  return out;
}

// ---- data search ---------------------------------------------------------------------

std::optional<std::vector<FqClassSpec>> find_generic_semisimple(const PrimeField& F,
                                                                const std::vector<Partition>& nus) {
  if (nus.empty()) throw ValidationError("at least one class is required");
  long gen = F.primitive_root();
  long order = F.q() - 1;
  std::vector<std::vector<long>> exps(nus.size());
  std::size_t tried = 0;
  std::optional<std::vector<FqClassSpec>> found;

  auto build = [&] {
    std::vector<FqClassSpec> out;
    for (std::size_t j = 0; j < nus.size(); ++j) {
      FqClassSpec s;
      for (std::size_t i = 0; i < exps[j].size(); ++i) {
        int m = nus[j].parts()[i];
        s.eigenvalues.push_back({Fq2{F.pow(gen, exps[j][i]), 0}, m, Partition::column(m)});
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  // Puncture j, eigenvalue slot i.
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t i) -> bool {
    if (j == nus.size()) {
      long sum = 0;
      for (std::size_t jj = 0; jj < nus.size(); ++jj)
        for (std::size_t ii = 0; ii < exps[jj].size(); ++ii) sum += exps[jj][ii] * nus[jj].parts()[ii];
      if (sum % order != 0) return false;
      if (++tried > kClassGuard) throw SizingError("generic data search space too large");
      auto specs = build();
      if (!is_generic(F, specs)) return false;
      found = std::move(specs);
      return true;
    }
    const auto& parts = nus[j].parts();
    if (i == parts.size()) return rec(j + 1, 0);
    long start = 0;
    if (i > 0 && parts[i] == parts[i - 1]) start = exps[j][i - 1] + 1;
    for (long e = start; e < order; ++e) {
      if (std::find(exps[j].begin(), exps[j].end(), e) != exps[j].end()) continue;
      exps[j].push_back(e);
      bool ok = rec(j, i + 1);
      exps[j].pop_back();
      if (ok) return true;
    }
    return false;
  };
  rec(0, 0);
  return found;
}

std::optional<std::vector<FqClassSpec>> find_generic_sl2_regular(const PrimeField& F, int k) {
  long q = F.q();
  std::vector<FqClassSpec> candidates;
  for (long a = 2; a < q - 1; ++a) {
    long ai = F.inv(a);
    if (a > ai) continue;
    candidates.push_back({{FqEigen{Fq2{a, 0}, 1, Partition{1}}, FqEigen{Fq2{ai, 0}, 1, Partition{1}}}});
  }
  if (q > 2)
    for (long a = 0; a < q; ++a)
      for (long b = 1; b <= (q - 1) / 2; ++b) {
        Fq2 x{a, b};
        if (pow(F, x, q + 1) == Fq2{1, 0}) candidates.push_back({{FqEigen{x, 1, Partition{1}}}});
      }
  std::vector<std::size_t> idx(k, 0);
  std::function<std::optional<std::vector<FqClassSpec>>(int, std::size_t)> rec =
      [&](int j, std::size_t from) -> std::optional<std::vector<FqClassSpec>> {
    if (j == k) {
      std::vector<FqClassSpec> specs;
      for (int i = 0; i < k; ++i) specs.push_back(candidates[idx[i]]);
      if (is_generic(F, specs)) return specs;
      return std::nullopt;
    }
    for (std::size_t c = from; c < candidates.size(); ++c) {
      idx[j] = c;
      if (auto r = rec(j + 1, c)) return r;
    }
    return std::nullopt;
  };
  return rec(0, 0);
}

}  // namespace charvar::fq
