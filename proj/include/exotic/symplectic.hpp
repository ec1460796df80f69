#pragma once

#include <cstdint>
#include <vector>

#include "exotic/bicomb.hpp"
#include "exotic/ffield.hpp"

namespace exotic {

/// F_p^{2n} with basis e_1..e_n, f_1..f_n and form <u,v> = u^T J v, J = [[0,1],[-1,0]].
struct SymplecticSpace {
  int n = 1;
  Scalar p = 3;

  SymplecticSpace() = default;
  SymplecticSpace(int n, Scalar p);

  int dim() const noexcept { return 2 * n; }
  FpMatrix J() const;
  Scalar pairing(const Vector& u, const Vector& v) const;
  Vector e(int i) const;  // 1-based
  Vector f(int i) const;  // 1-based

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;
};

enum class Flavor { Lie, Group };

/// (x, v): x self-adjoint and nilpotent (Lie) or unipotent (Group), v ∈ V.
struct ExoticPair {
  SymplecticSpace space;
  FpMatrix x;
  Vector v;
  Flavor flavor = Flavor::Lie;
};

/// Checks shapes, self-adjointness and (uni/nil)potency. Throws SizeMismatch,
/// NotDoubled (not self-adjoint) or NotNilpotent.
void validate(const ExoticPair& pair);

/// θ(g) = J⁻¹ g^{-T} J. Throws Singular.
FpMatrix theta_group(const FpMatrix& g);
/// x* = J⁻¹ xᵀ J.
FpMatrix adjoint(const FpMatrix& x);

enum class Membership { GMinusTheta, GIotaTheta, SpLie, HGroup };
bool membership(const FpMatrix& x, Membership which);

/// p₂(x − 1) = ((x−1) + (x−1)*)/2. Throws NotInGIotaTheta.
FpMatrix log_map(const FpMatrix& x);

/// diag(x, 1_n) ↦ diag(x, xᵀ) = a θ(a)⁻¹. Throws NotInA.
FpMatrix klyachko_embed(const FpMatrix& a);
/// diag(x, 1_n) from an n×n block.
FpMatrix embed_in_A(const FpMatrix& x);

/// Basis of the self-adjoint matrices (dimension 2n² − n).
std::vector<FpMatrix> self_adjoint_basis(const SymplecticSpace& space);
/// Basis of sp_{2n} (dimension 2n² + n).
std::vector<FpMatrix> sp_lie_basis(const SymplecticSpace& space);

/// Normal-form representative of an orbit together with its Jordan data.
struct NormalFormData {
  ExoticPair pair;
  Bipartition label;
  Partition nu;               // μ⁽¹⁾ + μ⁽²⁾, with a = ν.length() rows
  // jordan_basis[i-1][j-1] = v_{i,j}; (y−1)v_{i,j} = v_{i,j−1}, (y−1)v_{i,1} = 0.
  std::vector<std::vector<Vector>> jordan_basis;
  // dual_basis[i-1][j-1] = v'_{i,j} in span(f); <v_{i,j}, v'_{i',j'}> = δ.
  std::vector<std::vector<Vector>> dual_basis;
  FpMatrix y;                 // unipotent element of A
  std::vector<int> block_sizes;     // a_1..a_ℓ
  std::vector<int> block_nu;        // ν_[k]
  std::vector<int> block_mu1;       // μ⁽¹⁾_[k]
  std::vector<int> block_first_row; // p_k
  std::vector<int> block_last_row;  // q_k

  int blocks() const noexcept { return static_cast<int>(block_sizes.size()); }
  const Vector& v_at(int i, int j) const { return jordan_basis.at(i - 1).at(j - 1); }
  const Vector& dual_at(int i, int j) const { return dual_basis.at(i - 1).at(j - 1); }
};

/// Builds the group-flavor normal form for Λ. Throws SizeMismatch if |Λ| ≠ n.
NormalFormData normal_form_pair(const Bipartition& label, const SymplecticSpace& space);

/// F_p-point counts of the θ-fixed unipotent radical, B^{ιθ} and T^{ιθ}.
struct FixedPointCounts {
  std::uint64_t u_theta = 0;
  std::uint64_t b_iota_theta = 0;
  std::uint64_t t_iota_theta = 0;
};
FixedPointCounts fixed_point_counts(const SymplecticSpace& space);

}  // namespace exotic
