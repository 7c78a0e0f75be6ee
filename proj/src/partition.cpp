#include "charvar/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace charvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ValidationError("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> out(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back({i + 1, j + 1});
  return out;
}

bool Partition::contains(Cell c) const {
  return c.row >= 1 && c.row <= length() && c.col >= 1 && c.col <= parts_[c.row - 1];
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

ArmLeg arm_leg(const Partition& p, Cell c) {
  if (!p.contains(c))
    throw ValidationError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                          ") outside " + p.to_string());
  int leg = 0;
  while (p.part(c.row + leg + 1) >= c.col) ++leg;
  return {p.part(c.row) - c.col, leg};
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return out;
}

BigInt z_lambda(const Partition& p) {
  BigInt out = 1;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    int m = static_cast<int>(j - i);
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), parts[i], m);
    out *= pw * factorial(m);
    i = j;
  }
  return out;
}

namespace {

void generate(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  if (n >= 0) {
    std::vector<int> cur;
    generate(n, n, cur, out);
  }
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<std::pair<int, int>> column_multiplicities(const Partition& p) {
  Partition t = p.transpose();
  std::vector<std::pair<int, int>> out;
  for (int a : t.parts()) {
    if (!out.empty() && out.back().first == a)
      ++out.back().second;
    else
      out.emplace_back(a, 1);
  }
  return out;
}

int TypeOmega::degree() const {
  int d = 0;
  for (const auto& [di, w] : pairs) d += di * w.size();
  return d;
}

TypeOmega TypeOmega::transpose() const {
  TypeOmega out;
  for (const auto& [d, w] : pairs) out.pairs.emplace_back(d, w.transpose());
  return out;
}

std::string TypeOmega::to_string() const {
  std::string s;
  for (const auto& [d, w] : pairs) s += "(" + std::to_string(d) + "," + w.to_string() + ")";
  return s;
}

int r_of_type(const TypeOmega& t) {
  int r = 0;
  for (const auto& [d, w] : t.pairs) r += (d - 1) * w.size();
  return r;
}

namespace {

// Pairs are emitted in nondecreasing order of their index in `atoms`.
void gen_types(int n, std::size_t from, const std::vector<std::pair<int, Partition>>& atoms,
               TypeOmega& cur, std::vector<TypeOmega>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < atoms.size(); ++i) {
    int deg = atoms[i].first * atoms[i].second.size();
    if (deg > n) continue;
    cur.pairs.push_back(atoms[i]);
    gen_types(n - deg, i, atoms, cur, out);
    cur.pairs.pop_back();
  }
}

}  // namespace

std::vector<TypeOmega> types_of_degree(int n) {
  std::vector<std::pair<int, Partition>> atoms;
  for (int d = 1; d <= n; ++d)
    for (int m = 1; d * m <= n; ++m)
      for (const auto& w : partitions_of(m)) atoms.emplace_back(d, w);
  std::vector<TypeOmega> out;
  TypeOmega cur;
  gen_types(n, 0, atoms, cur, out);
  return out;
}

std::vector<int> MultiPartition::sizes() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(c.size());
  return out;
}

std::string MultiPartition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += ',';
    s += components[i].to_string();
  }
  return s + "]";
}

TypeOmega eta_to_types(const Partition& mu, const std::vector<Partition>& eta) {
  auto slots = column_multiplicities(mu);
  if (eta.size() != slots.size())
    throw ValidationError("eta for " + mu.to_string() + " needs " +
                          std::to_string(slots.size()) + " slot(s), got " +
                          std::to_string(eta.size()));
  TypeOmega out;
  for (std::size_t r = 0; r < slots.size(); ++r) {
    auto [a, m] = slots[r];
    if (eta[r].size() != m)
      throw ValidationError("eta slot " + std::to_string(r) + " for " + mu.to_string() +
                            " must be a partition of " + std::to_string(m));
    for (int d : eta[r].parts()) out.pairs.emplace_back(d, Partition::column(a));
  }
  return out;
}

std::vector<Partition> trivial_eta(const Partition& mu) {
  std::vector<Partition> out;
  for (auto [a, m] : column_multiplicities(mu)) out.push_back(Partition::column(m));
  return out;
}

std::vector<std::pair<std::vector<Partition>, BigInt>> eta_classes(const Partition& mu) {
  std::vector<std::pair<std::vector<Partition>, BigInt>> out{{{}, BigInt(1)}};
  for (auto [a, m] : column_multiplicities(mu)) {
    std::vector<std::pair<std::vector<Partition>, BigInt>> next;
    for (const auto& [prefix, size] : out) {
      for (const auto& eta : partitions_of(m)) {
        auto v = prefix;
        v.push_back(eta);
        next.emplace_back(std::move(v), size * (factorial(m) / z_lambda(eta)));
      }
    }
    out = std::move(next);
  }
  return out;
}

BigInt relative_weyl_order(const Partition& mu) {
  BigInt out = 1;
  for (auto [a, m] : column_multiplicities(mu)) out *= factorial(m);
  return out;
}

std::vector<MultiPartition> strata_below(const MultiPartition& mu) {
  std::vector<MultiPartition> out{MultiPartition{}};
  for (const auto& comp : mu.components) {
    std::vector<Partition> below;
    for (const auto& p : partitions_of(comp.size()))
      if (dominance_leq(p, comp)) below.push_back(p);
    std::vector<MultiPartition> next;
    for (const auto& prefix : out) {
      for (const auto& p : below) {
        MultiPartition m = prefix;
        m.components.push_back(p);
        next.push_back(std::move(m));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace charvar
