#pragma once

// Partitions, Young diagram statistics, dominance order, types and the
// conjugacy-class labels of relative Weyl groups.

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "charvar/exact.hpp"

namespace charvar {

/// 1-based cell of a Young diagram (English convention: row 1 is longest).
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(Cell, Cell) = default;
};

class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Sorts and drops zeros first.
  static Partition from_unsorted(std::vector<int> parts);
  static Partition row(int n) { return n > 0 ? Partition{n} : Partition(); }
  static Partition column(int n) { return Partition(std::vector<int>(n > 0 ? n : 0, 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// 1-based part, 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  int multiplicity(int part) const;

  Partition transpose() const;
  std::vector<Cell> cells() const;
  bool contains(Cell c) const;

  /// "[2,1]"; the empty partition is "[]".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct ArmLeg {
  int arm = 0;
  int leg = 0;
  friend bool operator==(ArmLeg, ArmLeg) = default;
};

ArmLeg arm_leg(const Partition& p, Cell c);

/// a ⪯ b in dominance order (false when sizes differ).
bool dominance_leq(const Partition& a, const Partition& b);

/// Order of the centralizer of a permutation of cycle type p.
BigInt z_lambda(const Partition& p);

BigInt factorial(int n);

/// All partitions of n in reverse lexicographic order, (n) first. Cached.
const std::vector<Partition>& partitions_of(int n);

/// Distinct parts a_r of p' in decreasing order with their multiplicities m_r.
std::vector<std::pair<int, int>> column_multiplicities(const Partition& p);

/// A type: sequence of (d_i, ω^i); its degree is Σ d_i |ω^i|.
struct TypeOmega {
  std::vector<std::pair<int, Partition>> pairs;

  int degree() const;
  TypeOmega transpose() const;
  std::string to_string() const;
};

/// r(ω) = Σ (d_i − 1) |ω^i|.
int r_of_type(const TypeOmega& t);

/// Every type of degree n up to reordering of its pairs.
std::vector<TypeOmega> types_of_degree(int n);

/// Jordan partitions of one puncture, one per eigenvalue.
struct MultiPartition {
  std::vector<Partition> components;

  /// Multiplicities ν_i = |components[i]| in eigenvalue order.
  std::vector<int> sizes() const;
  std::string to_string() const;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
};

/// η^{j,i,r}: [puncture][eigenvalue][slot], slot r following
/// column_multiplicities of μ^{j,i}.
using EtaIndex = std::vector<std::vector<std::vector<Partition>>>;

/// The type with pairs (η^r_s, (1^{a_r})) for one eigenvalue's Jordan partition.
TypeOmega eta_to_types(const Partition& mu, const std::vector<Partition>& eta);

/// η with every slot (1^{m_r}): the identity of the relative Weyl group.
std::vector<Partition> trivial_eta(const Partition& mu);

/// Every η slice for mu together with its conjugacy-class size in Π S_{m_r}.
std::vector<std::pair<std::vector<Partition>, BigInt>> eta_classes(const Partition& mu);

/// Order of Π_r S_{m_r}.
BigInt relative_weyl_order(const Partition& mu);

/// All ρ with ρ^i ⪯ μ^i componentwise, μ first.
std::vector<MultiPartition> strata_below(const MultiPartition& mu);

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

}  // namespace charvar
