#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/rational.hpp>

#include "exotic/bicomb.hpp"

namespace exotic {

using Rational = boost::rational<std::int64_t>;

/// |W_n| = 2^n n!.
std::uint64_t wn_order(int n);

/// Conjugacy class of W_n: α = positive cycle type, β = negative cycle type.
struct WnClass {
  Bipartition signature;
  std::uint64_t centralizer_order = 0;
  std::uint64_t size = 0;

  bool operator==(const WnClass&) const = default;
};

/// z_α 2^{ℓ(α)} z_β 2^{ℓ(β)}.
std::uint64_t wn_centralizer_order(const Bipartition& signature);

/// Identity class first, then the remaining classes in canonical bipartition order.
std::vector<WnClass> wn_classes(int n);

/// S_n character by Murnaghan–Nakayama. Throws SizeMismatch.
std::int64_t sn_character(const Partition& lambda, const Partition& rho);

/// Character of the irreducible W_n-module labelled (μ, ν): induced from
/// W_|μ| × W_|ν| with trivial Z/2 on the μ factor and the sign of each flip on ν.
std::int64_t wn_character(const Bipartition& irrep, const Bipartition& cls);

/// Standard Young tableaux count via hook lengths.
std::uint64_t standard_tableaux(const Partition& lambda);
/// C(n, |μ|) f^μ f^ν.
std::uint64_t irrep_dim(const Bipartition& irrep);

/// Values on wn_classes(n), in that order.
struct ClassFunction {
  int n = 0;
  std::vector<std::int64_t> values;
};

ClassFunction character(const Bipartition& irrep);
ClassFunction regular_character(int n);

/// |W_n|⁻¹ Σ |C| f(C) g(C). Throws SizeMismatch.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

class CharacterTable {
 public:
  static CharacterTable build(int n);
  /// Reassembles a table from serialized parts. Throws SizeMismatch.
  static CharacterTable assemble(int n, std::vector<Bipartition> irreps, std::vector<WnClass> classes,
                                 std::vector<std::vector<std::int64_t>> values);

  bool operator==(const CharacterTable&) const = default;

  int n() const noexcept { return n_; }
  const std::vector<Bipartition>& irreps() const noexcept { return irreps_; }
  const std::vector<WnClass>& classes() const noexcept { return classes_; }
  std::int64_t value(std::size_t irrep, std::size_t cls) const { return values_.at(irrep).at(cls); }
  ClassFunction row(std::size_t irrep) const { return {n_, values_.at(irrep)}; }
  std::size_t irrep_index(const Bipartition& label) const;
  std::size_t class_index(const Bipartition& signature) const;

 private:
  int n_ = 0;
  std::vector<Bipartition> irreps_;
  std::vector<WnClass> classes_;
  std::vector<std::vector<std::int64_t>> values_;
};

/// entries[i][j] = <Res χ_{rows[i]}, χ_{cols[j]}> for W_{n−1} ⊂ W_n.
struct BranchingMatrix {
  int n = 0;
  std::vector<Bipartition> rows;  // bipartitions_of(n)
  std::vector<Bipartition> cols;  // bipartitions_of(n − 1)
  std::vector<std::vector<std::int64_t>> entries;

  bool operator==(const BranchingMatrix&) const = default;
};

BranchingMatrix restrict_branching(int n);

/// Degree 2k ↦ multiplicity of each W_n irrep (indexed by bipartitions_of(n)).
struct GradedWnModule {
  int n = 0;
  std::vector<Bipartition> labels;
  std::map<int, std::vector<std::int64_t>> degrees;

  std::uint64_t dimension() const;
  bool operator==(const GradedWnModule&) const = default;
};

/// Ind from W_m × W_{n−m} of χ^{ρ₁} ⊠ (H^{2k}(P_1^{n−m}) ⊗ χ^{ρ₂}). Throws RangeError, SizeMismatch.
GradedWnModule graded_fiber_module(int n, int m, const Partition& rho1, const Partition& rho2);

}  // namespace exotic
