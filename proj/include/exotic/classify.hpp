#pragma once

#include <vector>

#include "exotic/bicomb.hpp"
#include "exotic/ffield.hpp"
#include "exotic/symplectic.hpp"

namespace exotic {

/// (y, v) with y acting on F_p^m; `unipotent` selects y − 1 as the nilpotent part.
struct EnhancedPair {
  FpMatrix y;
  Vector v;
  bool unipotent = false;
};

using OrbitLabel = Bipartition;

/// Type (λ⁽¹⁾, λ⁽²⁾) from W = E^y v: Jordan types of y on W and on F_p^m / W.
OrbitLabel enhanced_type(const EnhancedPair& pair);

/// Classifies many vectors against one fixed nilpotent matrix.
class EnhancedClassifier {
 public:
  explicit EnhancedClassifier(FpMatrix nilpotent);

  OrbitLabel type_of(const Vector& v) const;
  /// dim E^y v.
  int span_dim(const Vector& v) const;
  const FpMatrix& nilpotent() const noexcept { return nilpotent_; }

 private:
  Subspace orbit_span(const Vector& v) const;

  FpMatrix nilpotent_;
  std::vector<FpMatrix> commutant_;
};

/// Halves a doubled partition λ∪λ. Throws NotDoubled.
Partition halve(const Partition& doubled);

/// Label Λ ∈ P_{n,2} of an exotic pair, via the GL_{2n} enhanced type (Λ∪Λ).
OrbitLabel exotic_type(const ExoticPair& pair);

/// exotic_type for a fixed x and varying v.
class ExoticClassifier {
 public:
  ExoticClassifier(const SymplecticSpace& space, const FpMatrix& x, Flavor flavor);

  OrbitLabel type_of(const Vector& v) const;
  const FpMatrix& nilpotent() const noexcept { return inner_.nilpotent(); }

 private:
  EnhancedClassifier inner_;
};

/// dim {h ∈ sp_{2n} : hx = xh [, hv = 0]}.
int stabilizer_dim(const ExoticPair& pair, bool include_v);

/// dim span{v, xv, x²v, ...}.
int cyclic_dim(const ExoticPair& pair);

enum class NodeCase { I, II };

/// w_i = v_{q_i,1} (case I) or v'_{p_i, ν_[i]} (case II), 1-based block index.
Vector parabolic_line(const NormalFormData& nf, int block, NodeCase which);

/// dim {h ∈ sp : hx = xh, hv = 0, h w_i ∈ <w_i>}. Throws IndexOutOfRange.
int parabolic_stabilizer_dim(const NormalFormData& nf, int block, NodeCase which);

/// dim Z_H(z) − 2q_i + 2 (case I) or + 1 (case II).
int parabolic_stabilizer_expected(int stabilizer, int q, NodeCase which);

}  // namespace exotic
