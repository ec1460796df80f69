#pragma once

#include <cstdint>

#include "exotic/census.hpp"
#include "exotic/springer.hpp"

namespace exotic {

/// Normal forms classify back to their label; stabilizer dimensions match the orbit formula.
Report stabilizer_dim_report(int n, Scalar p);

/// Line stabilizers inside Z_H(x, v) for every removable node (row q_i of block i;
/// μ⁽¹⁾ node → case I, μ⁽²⁾ node → case II), over labels with at most `max_blocks` blocks.
Report parabolic_report(int n, Scalar p, int max_blocks = 3);

/// Orthogonality, degree column and central-element column of the W_n table.
Report chartable_report(int n);

/// closure_leq is a partial order and strictly increases orbit dimension.
Report closure_poset_report(int n);

/// Inductive determination at every rank ≤ n is unique and equal to the identity.
Report determination_report(int n);

/// Fiber modules: m = n degree 0 is the single irrep (ρ₁, −); m = 0 top-level checks at n = 1.
Report graded_report(int n);

/// exotic_type is constant on random symplectic conjugates of normal forms.
Report invariance_report(int n, Scalar p, std::uint64_t seed, int samples = 20);

Report klyachko_as_report(const KlyachkoReport& k);

}  // namespace exotic
