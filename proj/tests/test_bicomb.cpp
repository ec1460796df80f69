#include <doctest.h>

#include <algorithm>
#include <set>

#include "exotic/bicomb.hpp"
#include "exotic/error.hpp"

using namespace exotic;

namespace {

Bipartition bp(const char* s) { return Bipartition::parse(s); }

// Partition numbers by the coin-change recurrence.
std::vector<std::uint64_t> partition_numbers(int n) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int t = part; t <= n; ++t) ways[t] += ways[t - part];
  return ways;
}

}  // namespace

TEST_CASE("partition counts") {
  const auto oracle = partition_numbers(12);
  for (int n = 0; n <= 12; ++n) {
    CHECK(partition_count(n) == oracle[n]);
    CHECK(partitions_of(n).size() == oracle[n]);
  }
  const auto p4 = partitions_of(4);
  CHECK(p4.front() == Partition({4}));
  CHECK(p4.back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("bipartition counts") {
  const auto p = partition_numbers(10);
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t conv = 0;
    for (int k = 0; k <= n; ++k) conv += p[k] * p[n - k];
    CHECK(bipartition_count(n) == conv);
    CHECK(bipartitions_of(n).size() == conv);
  }
  CHECK(bipartition_count(1) == 2);
  CHECK(bipartition_count(2) == 5);
  CHECK(bipartition_count(6) == 65);
}

TEST_CASE("canonical order") {
  const auto n1 = bipartitions_of(1);
  CHECK(n1 == std::vector<Bipartition>{bp("1|-"), bp("-|1")});
  const auto n2 = bipartitions_of(2);
  CHECK(n2 == std::vector<Bipartition>{bp("2|-"), bp("1|1"), bp("1,1|-"), bp("-|2"), bp("-|1,1")});
  for (int n = 1; n <= 6; ++n) {
    const auto all = bipartitions_of(n);
    CHECK(all.front() == Bipartition{Partition({n}), {}});
    CHECK(all.back() == Bipartition{{}, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))});
    CHECK(std::set<Bipartition>(all.begin(), all.end()).size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end(), canonical_less));
  }
}

TEST_CASE("grammar") {
  const Bipartition b = bp("2,1|1");
  CHECK(b.first == Partition({2, 1}));
  CHECK(b.second == Partition({1}));
  CHECK(b.to_string() == "2,1|1");
  CHECK(bp("-|-").rank() == 0);
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : bipartitions_of(n)) CHECK(bp(l.to_string().c_str()) == l);
  CHECK_THROWS_AS(bp("2,1"), Error);
  CHECK_THROWS_AS(bp("a|b"), Error);
  CHECK_THROWS_AS(bp("1,2|-"), Error);
}

TEST_CASE("n statistic") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(n_invariant(Partition({n})) == 0);
    CHECK(n_invariant(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == n * (n - 1) / 2);
  }
  CHECK(n_invariant(Partition({2, 1})) == 1);
}

TEST_CASE("interleaved composition") {
  CHECK(interleave_c(bp("2|-")) == Composition{2, 0});
  CHECK(interleave_c(bp("1|1")) == Composition{1, 1});
  CHECK(interleave_c(bp("1,1|-")) == Composition{1, 0, 1, 0});
}

TEST_CASE("dominance") {
  CHECK(dominance_leq({1, 1}, {2, 0}));
  CHECK_FALSE(dominance_leq({1, 0, 1}, {0, 2}));
  CHECK_FALSE(dominance_leq({0, 2}, {1, 0, 1}));
  CHECK(dominance_leq({3, 1, 0}, {3, 1, 0}));
  CHECK_THROWS_AS(dominance_leq({1}, {2}), Error);
}

TEST_CASE("closure order") {
  for (const auto& l : bipartitions_of(2)) {
    CHECK(closure_leq(bp("-|1,1"), l));
    CHECK(closure_leq(l, bp("2|-")));
  }
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : bipartitions_of(n)) CHECK(closure_leq(l, Bipartition{Partition({n}), {}}));
  CHECK_FALSE(closure_leq(bp("1,1|-"), bp("-|2")));
  CHECK_FALSE(closure_leq(bp("-|2"), bp("1,1|-")));
  CHECK_THROWS_AS(closure_leq(bp("1|-"), bp("2|-")), Error);
}

TEST_CASE("orbit and fiber dimensions") {
  const std::vector<std::pair<int, int>> n2{{8, 0}, {6, 1}, {4, 2}, {4, 2}, {0, 4}};
  const auto labels = bipartitions_of(2);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    CHECK(orbit_dim(labels[i], 2) == n2[i].first);
    CHECK(fiber_dim_d(labels[i], 2) == n2[i].second);
  }
  for (int n = 1; n <= 8; ++n) {
    const Bipartition open{Partition({n}), {}};
    const Bipartition zero{{}, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))};
    CHECK(orbit_dim(open, n) == 2 * n * n);
    CHECK(orbit_dim(zero, n) == 0);
    CHECK(fiber_dim_d(open, n) == 0);
    CHECK(fiber_dim_d(zero, n) == n * n);
    // Orbit dimension and d are complementary in the cone of dimension 2n².
    for (const auto& l : bipartitions_of(n)) CHECK(orbit_dim(l, n) + 2 * fiber_dim_d(l, n) == 2 * n * n);
  }
  CHECK_THROWS_AS(orbit_dim(bp("1|-"), 2), Error);
}

TEST_CASE("rows with empty first component follow the nilpotent orbit dimension") {
  for (int n = 1; n <= 7; ++n) {
    std::size_t rows = 0;
    for (const auto& l : bipartitions_of(n)) {
      if (!l.first.empty()) continue;
      ++rows;
      CHECK(orbit_dim(l, n) == 2 * n * n - 2 * n - 4 * n_invariant(l.second));
    }
    CHECK(rows == partition_count(n));
  }
}

TEST_CASE("removable nodes") {
  const auto a = removable_nodes(bp("2|-"));
  REQUIRE(a.size() == 1);
  CHECK(a[0] == NodeRemoval{1, 1, bp("1|-")});
  const auto b = removable_nodes(bp("1|1"));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == NodeRemoval{1, 1, bp("-|1")});
  CHECK(b[1] == NodeRemoval{2, 1, bp("1|-")});
  CHECK(removable_nodes(bp("2,1|1")).size() == 3);
  CHECK_THROWS_AS(removable_nodes(bp("-|-")), Error);
}

TEST_CASE("hasse diagram") {
  using Edge = std::pair<Bipartition, Bipartition>;
  CHECK(hasse_covers(1) == std::vector<Edge>{{bp("1|-"), bp("-|1")}});
  const auto covers = hasse_covers(2);
  const std::set<Edge> expected{{bp("2|-"), bp("1|1")},
                                {bp("1|1"), bp("1,1|-")},
                                {bp("1|1"), bp("-|2")},
                                {bp("1,1|-"), bp("-|1,1")},
                                {bp("-|2"), bp("-|1,1")}};
  CHECK(std::set<Edge>(covers.begin(), covers.end()) == expected);
  CHECK(bipartitions_of(3).size() == 10);
  for (int n = 1; n <= 5; ++n)
    for (const auto& [upper, lower] : hasse_covers(n)) CHECK(orbit_dim(upper, n) > orbit_dim(lower, n));
  const std::string dot = hasse_dot(2);
  CHECK(dot.find("\"1|1\" -> \"2|-\"") != std::string::npos);
}
