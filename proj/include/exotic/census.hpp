#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "exotic/bicomb.hpp"
#include "exotic/ffield.hpp"
#include "exotic/springer.hpp"
#include "exotic/symplectic.hpp"

namespace exotic {

/// q^{n²} Π_{i=1..n} (q^{2i} − 1). Throws RangeError on overflow.
std::uint64_t sp_group_order(int n, std::uint64_t q);

/// Throws SizeGate unless n ≤ 2 and p ∈ {3, 5}.
void require_census_gate(int n, Scalar p);

/// Symplectic transvections w ↦ w + <w,u>u for u in a fixed spanning family.
std::vector<FpMatrix> sp_generators(const SymplecticSpace& space);

/// All of Sp_{2n}(F_p) by closure under the generators. Gated.
std::vector<FpMatrix> sp_group_elements(int n, Scalar p);
/// Same closure, packed with pack_key and sorted.
std::vector<std::uint64_t> sp_group_keys(int n, Scalar p);
FpMatrix unpack_matrix(std::uint64_t key, int size, Scalar p);

/// Base-p packing of a small matrix (and optional vector) into one integer key.
std::uint64_t pack_key(const FpMatrix& x, const Vector& v);

/// Self-adjoint matrices indexed by their coordinate code in self_adjoint_basis order;
/// pairs are grouped in contiguous code ranges ("chunks").
class NilconeEnumerator {
 public:
  NilconeEnumerator(int n, Scalar p, Flavor flavor = Flavor::Lie, std::size_t chunks = 64);

  const SymplecticSpace& space() const noexcept { return space_; }
  Flavor flavor() const noexcept { return flavor_; }
  std::uint64_t matrix_codes() const noexcept { return matrix_codes_; }
  std::uint64_t vector_codes() const noexcept { return vector_codes_; }
  std::size_t chunk_count() const noexcept { return chunks_; }

  FpMatrix matrix(std::uint64_t code) const;
  Vector vector(std::uint64_t code) const;
  /// x ∈ g^{−θ} nilpotent (Lie) or x ∈ G^{ιθ} unipotent (Group).
  bool admissible(const FpMatrix& x) const;

  /// visit(x_code, x) for admissible x whose code falls in the chunk.
  void for_each_matrix(std::size_t chunk, const std::function<void(std::uint64_t, const FpMatrix&)>& visit) const;
  /// Every (x, v) in deterministic order.
  void for_each_pair(const std::function<void(const FpMatrix&, const Vector&)>& visit) const;

 private:
  SymplecticSpace space_;
  Flavor flavor_;
  std::vector<FpMatrix> basis_;
  std::uint64_t matrix_codes_ = 0;
  std::uint64_t vector_codes_ = 0;
  std::size_t chunks_ = 1;
};

/// Every pair of the exotic nilpotent cone (Lie flavor). Gated.
std::vector<ExoticPair> enumerate_exotic_nilcone(int n, Scalar p);

/// |{g ∈ Sp_{2n}(F_p) : g x g⁻¹ = x, g v = v}|. Gated.
std::uint64_t stabilizer_census(const ExoticPair& pair);
std::uint64_t stabilizer_census(const ExoticPair& pair, const std::vector<FpMatrix>& group);

struct OrbitCheck {
  Bipartition label;
  std::uint64_t count = 0;
  std::uint64_t stabilizer = 0;
  std::uint64_t group_order = 0;
  bool orbit_stabilizer_ok = false;
  std::uint64_t components = 0;  // union-find components carrying this label
  bool transitive = false;

  bool operator==(const OrbitCheck&) const = default;
};

struct CensusResult {
  int n = 0;
  Scalar p = 3;
  Flavor flavor = Flavor::Lie;
  bool complete = true;  // false when stopped early by max_chunks
  std::uint64_t total_points = 0;
  std::map<Bipartition, std::uint64_t> label_counts;
  std::map<int, std::set<Bipartition>> strata;        // cyclic_dim ↦ labels seen
  std::map<Bipartition, std::pair<std::uint64_t, std::uint64_t>> representatives;  // (x code, v code)
  std::vector<OrbitCheck> orbit_checks;
  bool labels_invariant = true;  // no union-find component mixes labels

  bool operator==(const CensusResult&) const = default;
};

struct CensusOptions {
  unsigned jobs = 1;
  std::optional<std::filesystem::path> checkpoint;
  bool orbit_checks = true;
  Flavor flavor = Flavor::Lie;
  std::size_t chunks = 64;
  /// Stop after this many chunks (checkpoint left for resume); testing hook.
  std::optional<std::size_t> max_chunks;
};

/// Classifies every pair and, with orbit_checks, verifies orbit–stabilizer and transitivity.
CensusResult orbit_census(int n, Scalar p, const CensusOptions& options = {});

ExoticPair representative(const CensusResult& result, const Bipartition& label);

/// Checks on a finished census: label set, orbit–stabilizer, transitivity.
Report census_report(const CensusResult& result);
/// Points with cyclic_dim = m carry exactly the labels with μ⁽¹⁾_1 = m.
Report strata_check(const CensusResult& result);
/// Labels with cyclic_dim ≤ m are exactly those ≤ ((m),(n−m)).
Report closure_shadow_check(const CensusResult& result);
/// Label-by-label comparison of two censuses.
Report compare_censuses(const CensusResult& lie, const CensusResult& group);

/// Number of conjugacy classes of GL_n(F_p), by brute-force union-find.
std::uint64_t gl_class_count(int n, Scalar p);

struct KlyachkoReport {
  int n = 0;
  Scalar p = 3;
  std::uint64_t points = 0;        // |G^{ιθ}(F_p)|
  std::uint64_t orbit_count = 0;   // Sp_{2n}(F_p)-conjugacy orbits
  std::uint64_t gl_classes = 0;
  std::uint64_t orbits_hit = 0;    // orbits containing some diag(x, xᵀ)
  bool passed() const noexcept { return orbit_count == gl_classes && orbits_hit == orbit_count; }
};

KlyachkoReport klyachko_census(int n, Scalar p);

}  // namespace exotic
