#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exotic {

/// Integer partition stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts descending and drops zero parts; throws RangeError on negative parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based row access, zero past the end.
  int row(int r) const noexcept {
    return (r >= 1 && r <= length()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
  }

  Partition conjugate() const;
  /// Multiplicity of the part value `k`.
  int multiplicity(int k) const noexcept;

  /// "2,1,1" or "-" for the empty partition.
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Row-wise sum (λ_i + μ_i).
Partition operator+(const Partition& a, const Partition& b);
/// Union of parts, re-sorted.
Partition join(const Partition& a, const Partition& b);

/// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);
std::uint64_t partition_count(int n);

/// Σ (i-1) λ_i.
int n_invariant(const Partition& lambda);

struct Bipartition {
  Partition first;
  Partition second;

  int rank() const noexcept { return first.size() + second.size(); }
  /// "2,1|1", empty component written "-".
  std::string to_string() const;
  static Bipartition parse(std::string_view text);

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// Sequence of non-negative integers; comparisons pad with zeros.
using Composition = std::vector<int>;

int total(const Composition& c);

/// (μ_1, ν_1, μ_2, ν_2, ...) for Λ = (μ, ν), padded to even length.
Composition interleave_c(const Bipartition& label);

/// Partial-sum dominance after zero padding. Throws UnequalTotals.
bool dominance_leq(const Composition& c, const Composition& d);

/// Orbit closure order: O_mu ⊂ closure(O_lambda). Throws RankMismatch.
bool closure_leq(const Bipartition& mu, const Bipartition& lambda);

/// Canonical order: interleaved composition, lexicographically descending.
/// ((n),-) comes first and (-,(1^n)) last.
bool canonical_less(const Bipartition& a, const Bipartition& b);

std::vector<Bipartition> bipartitions_of(int n);
std::uint64_t bipartition_count(int n);

/// n(Λ) = n(μ⁽¹⁾ + μ⁽²⁾).
int n_invariant(const Bipartition& label);

/// 2n² − 2n − 4n(Λ) + 2|μ⁽¹⁾|. Throws RankMismatch if |Λ| ≠ n.
int orbit_dim(const Bipartition& label, int n);

/// d_Λ = 2n(Λ) + n − |μ⁽¹⁾|.
int fiber_dim_d(const Bipartition& label, int n);

struct NodeRemoval {
  int component = 1;  // 1 = μ⁽¹⁾, 2 = μ⁽²⁾
  int row = 1;        // 1-based row inside that component
  Bipartition result;

  friend bool operator==(const NodeRemoval&, const NodeRemoval&) = default;
};

/// Corner removals from either component. Throws EmptyBipartition on rank 0.
std::vector<NodeRemoval> removable_nodes(const Bipartition& label);

/// Covering pairs (upper, lower) of closure_leq, upper listed in canonical order.
std::vector<std::pair<Bipartition, Bipartition>> hasse_covers(int n);

/// Graphviz rendering of hasse_covers; nodes carry orbit dimension as rank.
std::string hasse_dot(int n);

}  // namespace exotic
