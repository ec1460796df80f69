#include "exotic/springer.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "exotic/error.hpp"
#include "exotic/hyperoct.hpp"

namespace exotic {

namespace {

// Irrep whose character is identically 1.
Bipartition trivial_irrep(const CharacterTable& table) {
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    bool all_one = true;
    for (std::size_t c = 0; c < table.classes().size() && all_one; ++c) all_one = table.value(i, c) == 1;
    if (all_one) return table.irreps()[i];
  }
  throw Error(ErrorKind::AmbiguousAssignment, "no trivial character found");
}

// Irrep whose character is the determinant of the signed permutation matrix.
Bipartition sign_irrep(const CharacterTable& table) {
  const int n = table.n();
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    bool match = true;
    for (std::size_t c = 0; c < table.classes().size() && match; ++c) {
      const Bipartition& sig = table.classes()[c].signature;
      const int cycles = sig.first.length() + sig.second.length();
      const int exponent = (n - cycles) + sig.second.length();
      match = table.value(i, c) == (exponent % 2 ? -1 : 1);
    }
    if (match) return table.irreps()[i];
  }
  throw Error(ErrorKind::AmbiguousAssignment, "no sign character found");
}

// Number of bijections orbit ↦ irrep respecting the candidate sets, capped at `cap`.
// `first` receives the first bijection found.
std::uint64_t count_matchings(const std::vector<std::vector<std::size_t>>& candidates, std::size_t irrep_count,
                              std::uint64_t cap, std::vector<std::size_t>* first) {
  const std::size_t count = candidates.size();
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return candidates[a].size() < candidates[b].size(); });
  std::vector<char> used(irrep_count, 0);
  std::vector<std::size_t> assignment(count, 0);
  std::uint64_t found = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (found >= cap) return;
    if (depth == count) {
      if (found == 0 && first) *first = assignment;
      ++found;
      return;
    }
    const std::size_t orbit = order[depth];
    for (std::size_t irrep : candidates[orbit]) {
      if (used[irrep]) continue;
      used[irrep] = 1;
      assignment[orbit] = irrep;
      rec(depth + 1);
      used[irrep] = 0;
    }
  };
  rec(0);
  return found;
}

}  // namespace

Determination determine_correspondence(int n_max) {
  if (n_max < 1) throw Error(ErrorKind::RangeError, "n_max must be >= 1");
  Determination out;
  for (int k = 1; k <= n_max; ++k) {
    const CharacterTable table = CharacterTable::build(k);
    const auto& irreps = table.irreps();
    const std::vector<Bipartition> orbits = bipartitions_of(k);

    // Without branching data (k = 1) every irrep is a candidate for every orbit.
    std::vector<std::vector<std::size_t>> candidates(orbits.size());
    if (k == 1) {
      for (auto& c : candidates)
        for (std::size_t i = 0; i < irreps.size(); ++i) c.push_back(i);
    } else {
      const BranchingMatrix branching = restrict_branching(k);
      const auto& previous = out.map.by_rank.at(k - 1);
      for (std::size_t o = 0; o < orbits.size(); ++o) {
        // The representation attached to an orbit restricts to the sum of the
        // representations attached to its removable-node predecessors.
        std::set<Bipartition> expected;
        for (const auto& node : removable_nodes(orbits[o])) expected.insert(previous.at(node.result));
        for (std::size_t i = 0; i < irreps.size(); ++i) {
          bool match = true;
          for (std::size_t j = 0; j < branching.cols.size() && match; ++j) {
            const std::int64_t want = expected.count(branching.cols[j]) ? 1 : 0;
            match = branching.entries[i][j] == want;
          }
          if (match) candidates[o].push_back(i);
        }
      }
    }

    RankSolveStats stats;
    stats.rank = k;
    stats.solutions_without_axioms = count_matchings(candidates, irreps.size(), 2, nullptr);

    const Bipartition open_orbit{Partition({k}), Partition()};
    const Bipartition zero_orbit{Partition(), Partition(std::vector<int>(static_cast<std::size_t>(k), 1))};
    const std::size_t trivial = table.irrep_index(trivial_irrep(table));
    const std::size_t sign = table.irrep_index(sign_irrep(table));
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      std::size_t forced = orbits[o] == open_orbit ? trivial : orbits[o] == zero_orbit ? sign : irreps.size();
      if (forced == irreps.size()) continue;
      auto& c = candidates[o];
      const bool allowed = std::find(c.begin(), c.end(), forced) != c.end();
      c.assign(allowed ? 1 : 0, forced);
    }

    std::vector<std::size_t> assignment;
    stats.solutions_with_axioms = count_matchings(candidates, irreps.size(), 2, &assignment);
    out.stats.push_back(stats);
    if (stats.solutions_with_axioms != 1) {
      throw Error(ErrorKind::AmbiguousAssignment,
                  "rank " + std::to_string(k) + ": " +
                      (stats.solutions_with_axioms == 0 ? "no bijection satisfies the constraints"
                                                        : "several bijections satisfy the constraints"));
    }
    auto& level = out.map.by_rank[k];
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      level.emplace(orbits[o], irreps[assignment[o]]);
      if (orbits[o] != irreps[assignment[o]]) out.identity = false;
    }
  }
  return out;
}

SpringerTable springer_table(int n) {
  const Determination det = determine_correspondence(n);
  const auto& level = det.map.by_rank.at(n);
  const auto covers = hasse_covers(n);
  SpringerTable table{n, {}};
  for (const auto& label : bipartitions_of(n)) {
    OrbitRecord rec;
    rec.label = label;
    rec.orbit_dim = orbit_dim(label, n);
    rec.d = fiber_dim_d(label, n);
    rec.irrep = level.at(label);
    rec.irrep_dim = irrep_dim(rec.irrep);
    for (const auto& [upper, lower] : covers)
      if (upper == label) rec.covers.push_back(lower);
    table.rows.push_back(std::move(rec));
  }
  return table;
}

Report verify_restriction(int n) {
  Report report{"restriction", n, 0, {}};
  const BranchingMatrix branching = restrict_branching(n);
  for (std::size_t i = 0; i < branching.rows.size(); ++i) {
    std::set<Bipartition> predecessors;
    for (const auto& node : removable_nodes(branching.rows[i])) predecessors.insert(node.result);
    for (std::size_t j = 0; j < branching.cols.size(); ++j) {
      const std::int64_t expected = predecessors.count(branching.cols[j]) ? 1 : 0;
      ++report.checked;
      if (branching.entries[i][j] != expected) {
        report.mismatches.push_back({"branching", branching.rows[i].to_string() + " -> " + branching.cols[j].to_string(),
                                     std::to_string(expected), std::to_string(branching.entries[i][j])});
      }
    }
  }
  return report;
}

Report d_difference_check(int n) {
  Report report{"d-diff", n, 0, {}};
  for (const auto& label : bipartitions_of(n)) {
    for (const auto& node : removable_nodes(label)) {
      const int expected = 2 * node.row - (node.component == 1 ? 2 : 1);
      const int got = fiber_dim_d(label, n) - fiber_dim_d(node.result, n - 1);
      ++report.checked;
      if (got != expected) {
        report.mismatches.push_back({"d-difference",
                                     label.to_string() + " -> " + node.result.to_string() + " (component " +
                                         std::to_string(node.component) + ", row " + std::to_string(node.row) + ")",
                                     std::to_string(expected), std::to_string(got)});
      }
    }
  }
  return report;
}

namespace {

std::uint64_t sum_of_squares(int n) {
  std::uint64_t acc = 0;
  for (const auto& label : bipartitions_of(n)) {
    const std::uint64_t d = irrep_dim(label);
    acc += d * d;
  }
  return acc;
}

}  // namespace

bool sum_squares_check(int n) { return sum_of_squares(n) == wn_order(n); }

Report sum_squares_report(int n) {
  Report report{"sum-squares", n, 1, {}};
  const std::uint64_t got = sum_of_squares(n);
  if (got != wn_order(n)) {
    report.mismatches.push_back({"sum-squares", "n=" + std::to_string(n), std::to_string(wn_order(n)), std::to_string(got)});
  }
  return report;
}

}  // namespace exotic
