#include "charvar/macdonald.hpp"

#include <algorithm>
#include <mutex>

namespace charvar {

namespace {

std::mutex memo_mutex;
std::map<Partition, SymFunc1>& memo() {
  static std::map<Partition, SymFunc1> m;
  return m;
}

// Π (1 − x^{ρ_i}) with x = z (q) or x = w (t).
ZWPoly one_minus_powers(const Partition& rho, bool in_z) {
  ZWPoly out(1);
  for (int r : rho.parts()) {
    ZWPoly mono = in_z ? ZWPoly::monomial(1, r, 0) : ZWPoly::monomial(1, 0, r);
    out *= ZWPoly(1) - mono;
  }
  return out;
}

// a[ν][λ]: coefficient of s_ν in s_λ[X(1 − x)].
std::vector<std::vector<FieldElem>> plethysm_matrix(int n, bool in_z) {
  const auto& ps = partitions_of(n);
  std::size_t m = ps.size();
  std::vector<ZWPoly> weight;
  for (const auto& rho : ps) weight.push_back(one_minus_powers(rho, in_z));
  std::vector<std::vector<FieldElem>> a(m, std::vector<FieldElem>(m));
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t l = 0; l < m; ++l) {
      ZWPoly acc;
      for (std::size_t r = 0; r < m; ++r) {
        BigRat c(character(ps[l], ps[r]) * character(ps[v], ps[r]), z_lambda(ps[r]));
        c.canonicalize();
        if (c != 0) acc += weight[r] * c;
      }
      a[v][l] = FieldElem(acc);
    }
  return a;
}

std::size_t complexity(const FieldElem& f) { return f.num().size() + f.den().size(); }

}  // namespace

SymFunc1 htilde_solve(const Partition& mu) {
  int n = mu.size();
  const auto& ps = partitions_of(n);
  std::size_t m = ps.size();
  int bound = std::max(8, n);
  if (n == 0) return SymFunc1::element(Basis::s, Partition(), bound);

  // Unknowns c_λ for λ ≠ (n); c_(n) = 1 moves to the right-hand side.
  // Row layout: coefficients for columns 1..m-1, then the constant term.
  std::vector<std::vector<FieldElem>> rows;
  Partition mu_t = mu.transpose();
  for (bool in_z : {true, false}) {
    const Partition& top = in_z ? mu : mu_t;
    auto a = plethysm_matrix(n, in_z);
    for (std::size_t v = 0; v < m; ++v) {
      if (dominance_leq(top, ps[v])) continue;
      std::vector<FieldElem> row(m);
      for (std::size_t l = 1; l < m; ++l) row[l - 1] = a[v][l];
      row[m - 1] = -a[v][0];
      rows.push_back(std::move(row));
    }
  }

  std::size_t unknowns = m - 1;
  std::vector<std::size_t> pivot_row(unknowns);
  std::vector<bool> used(rows.size(), false);
  for (std::size_t col = 0; col < unknowns; ++col) {
    std::size_t best = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r][col].is_zero()) continue;
      if (best == rows.size() || complexity(rows[r][col]) < complexity(rows[best][col])) best = r;
    }
    if (best == rows.size()) throw MathError("Macdonald system is underdetermined for " + mu.to_string());
    used[best] = true;
    pivot_row[col] = best;
    FieldElem inv = rows[best][col].inverse();
    for (std::size_t j = col; j < m; ++j)
      if (!rows[best][j].is_zero()) rows[best][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best || rows[r][col].is_zero()) continue;
      FieldElem f = rows[r][col];
      for (std::size_t j = col; j < m; ++j)
        if (!rows[best][j].is_zero()) rows[r][j] -= f * rows[best][j];
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && !rows[r][m - 1].is_zero())
      throw MathError("Macdonald system is inconsistent for " + mu.to_string());

  SymFunc1 out(Basis::s, bound);
  out.add_term(ps[0], FieldElem(1));
  for (std::size_t col = 0; col < unknowns; ++col) {
    const FieldElem& c = rows[pivot_row[col]][m - 1];
    if (!c.is_polynomial())
      throw MathError("non-polynomial Macdonald coefficient for " + mu.to_string());
    out.add_term(ps[col + 1], c.inflate(2));
  }
  return out;
}

SymFunc1 htilde(const Partition& lam) {
  {
    std::lock_guard lock(memo_mutex);
    auto it = memo().find(lam);
    if (it != memo().end()) return it->second;
  }
  SymFunc1 h = htilde_solve(lam);
  std::lock_guard lock(memo_mutex);
  return memo().emplace(lam, std::move(h)).first->second;
}

std::map<Partition, SymFunc1> htilde_snapshot() {
  std::lock_guard lock(memo_mutex);
  return memo();
}

void htilde_seed(const std::map<Partition, SymFunc1>& entries) {
  std::lock_guard lock(memo_mutex);
  for (const auto& [lam, f] : entries) memo().emplace(lam, f);
}

void htilde_clear_memo() {
  std::lock_guard lock(memo_mutex);
  memo().clear();
}

// ---- fillings oracle --------------------------------------------------------

SymFunc1 htilde_oracle(const Partition& lam) {
  int n = lam.size();
  if (n > 6) throw SizingError("fillings oracle limited to |lambda| <= 6");
  int bound = std::max(8, n);
  Partition lt = lam.transpose();

  // French convention: row 1 at the bottom has lam_1 cells.
  struct Pos {
    int row, col;
  };
  std::vector<Pos> reading;  // top row first, left to right
  for (int r = lam.length(); r >= 1; --r)
    for (int c = 1; c <= lam.part(r); ++c) reading.push_back({r, c});
  auto idx_of = [&](int r, int c) {
    for (std::size_t i = 0; i < reading.size(); ++i)
      if (reading[i].row == r && reading[i].col == c) return static_cast<int>(i);
    return -1;
  };
  std::vector<int> below(reading.size(), -1);
  for (std::size_t i = 0; i < reading.size(); ++i)
    if (reading[i].row > 1) below[i] = idx_of(reading[i].row - 1, reading[i].col);
  std::vector<std::pair<int, int>> attacking;  // (earlier, later) in reading order
  for (std::size_t i = 0; i < reading.size(); ++i)
    for (std::size_t j = i + 1; j < reading.size(); ++j) {
      const Pos& u = reading[i];
      const Pos& v = reading[j];
      bool same_row = u.row == v.row;
      bool next_row = v.row == u.row - 1 && v.col < u.col;
      if (same_row || next_row) attacking.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }

  SymFunc1 in_m(Basis::m, bound);
  for (const auto& content : partitions_of(n)) {
    std::vector<int> values;
    for (int i = 0; i < content.length(); ++i)
      for (int k = 0; k < content.part(i + 1); ++k) values.push_back(i + 1);
    std::sort(values.begin(), values.end());
    ZWPoly acc;
    do {
      int maj = 0, inv = 0;
      for (std::size_t i = 0; i < reading.size(); ++i) {
        if (below[i] < 0 || values[i] <= values[below[i]]) continue;
        int arm = lam.part(reading[i].row) - reading[i].col;
        int leg = lt.part(reading[i].col) - reading[i].row;
        maj += leg + 1;
        inv -= arm;
      }
      for (auto [i, j] : attacking)
        if (values[i] > values[j]) ++inv;
      if (inv < 0) throw MathError("negative inversion statistic");
      acc += ZWPoly::monomial(1, static_cast<std::uint32_t>(inv), static_cast<std::uint32_t>(maj));
    } while (std::next_permutation(values.begin(), values.end()));
    in_m.add_term(content, FieldElem(acc.inflate(2)));
  }
  return convert(in_m, Basis::s);
}

}  // namespace charvar
