#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exotic/bicomb.hpp"

namespace exotic {

struct OrbitRecord {
  Bipartition label;
  int orbit_dim = 0;
  int d = 0;
  Bipartition irrep;
  std::uint64_t irrep_dim = 0;
  std::vector<Bipartition> covers;             // labels directly below in the closure order
  std::optional<std::uint64_t> census_points;  // filled from a finite-field census

  bool operator==(const OrbitRecord&) const = default;
};

struct SpringerTable {
  int n = 0;
  std::vector<OrbitRecord> rows;

  bool operator==(const SpringerTable&) const = default;
};

/// One row per orbit in canonical order; the irrep column is the derived correspondence.
SpringerTable springer_table(int n);

/// Orbit label ↦ irrep label at each rank 1..n_max.
struct CorrespondenceMap {
  std::map<int, std::map<Bipartition, Bipartition>> by_rank;
};

struct RankSolveStats {
  int rank = 0;
  std::uint64_t solutions_with_axioms = 0;
  std::uint64_t solutions_without_axioms = 0;  // capped at 2: "unique" or "ambiguous"
};

struct Determination {
  CorrespondenceMap map;
  std::vector<RankSolveStats> stats;
  bool identity = true;
};

/// Inductive determination from the trivial/sign axioms and the branching constraint.
/// Throws AmbiguousAssignment when a rank admits zero or several bijections.
Determination determine_correspondence(int n_max);

/// One disagreement between an expected and an observed value.
struct Mismatch {
  std::string check;
  std::string instance;
  std::string expected;
  std::string got;

  bool operator==(const Mismatch&) const = default;
};

struct Report {
  std::string suite;
  int n = 0;
  std::uint64_t checked = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
  bool operator==(const Report&) const = default;
};

/// Branching multiplicities against removable-node incidence.
Report verify_restriction(int n);
/// d_Λ − d_Λ' = 2r − 2 (μ⁽¹⁾ node) or 2r − 1 (μ⁽²⁾ node).
Report d_difference_check(int n);
/// Σ_Λ dim² = 2^n n!.
bool sum_squares_check(int n);
Report sum_squares_report(int n);

}  // namespace exotic
