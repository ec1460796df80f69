#include <doctest.h>

#include "exotic/error.hpp"
#include "exotic/hyperoct.hpp"
#include "exotic/springer.hpp"
#include "exotic/suites.hpp"

using namespace exotic;

namespace {

Bipartition bp(const char* s) { return Bipartition::parse(s); }

}  // namespace

TEST_CASE("springer table n=1") {
  const SpringerTable t = springer_table(1);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].label == bp("1|-"));
  CHECK(t.rows[0].irrep == bp("1|-"));
  CHECK(t.rows[0].irrep_dim == 1);
  CHECK(t.rows[0].orbit_dim == 2);
  CHECK(t.rows[1].label == bp("-|1"));
  CHECK(t.rows[1].orbit_dim == 0);
  CHECK(t.rows[1].irrep_dim == 1);
}

TEST_CASE("springer table n=2") {
  const SpringerTable t = springer_table(2);
  const std::vector<std::uint64_t> dims{1, 2, 1, 1, 1};
  const std::vector<int> orbit_dims{8, 6, 4, 4, 0};
  REQUIRE(t.rows.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(t.rows[i].irrep == t.rows[i].label);
    CHECK(t.rows[i].irrep_dim == dims[i]);
    CHECK(t.rows[i].orbit_dim == orbit_dims[i]);
  }
  CHECK(t.rows[0].covers == std::vector<Bipartition>{bp("1|1")});
  for (int n = 1; n <= 5; ++n) {
    const SpringerTable tn = springer_table(n);
    CHECK(tn.rows.front().d == 0);
    CHECK(tn.rows.back().d == n * n);
  }
}

TEST_CASE("inductive determination") {
  const Determination d = determine_correspondence(6);
  CHECK(d.identity);
  REQUIRE(d.stats.size() == 6);
  for (const auto& s : d.stats) CHECK(s.solutions_with_axioms == 1);
  // Rank 1 has no branching data; the axioms alone pin it.
  CHECK(d.stats[0].solutions_without_axioms == 2);
  for (int n = 1; n <= 6; ++n) {
    CHECK(d.map.by_rank.at(n).size() == bipartition_count(n));
    for (const auto& [orbit, irrep] : d.map.by_rank.at(n)) CHECK(orbit == irrep);
  }
  CHECK_THROWS_AS(determine_correspondence(0), Error);
}

TEST_CASE("restriction identity") {
  for (int n = 2; n <= 6; ++n) {
    const Report r = verify_restriction(n);
    CHECK(r.passed());
    CHECK(r.checked == bipartition_count(n) * bipartition_count(n - 1));
  }
}

TEST_CASE("fiber-dimension differences") {
  const Bipartition b = bp("1|1");
  CHECK(fiber_dim_d(b, 2) - fiber_dim_d(bp("-|1"), 1) == 0);
  CHECK(fiber_dim_d(b, 2) - fiber_dim_d(bp("1|-"), 1) == 1);
  for (int n = 1; n <= 7; ++n) CHECK(d_difference_check(n).passed());
}

TEST_CASE("sum of squares") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(sum_squares_check(n));
    CHECK(sum_squares_report(n).passed());
  }
}

TEST_CASE("closure poset") {
  for (int n = 1; n <= 7; ++n) CHECK(closure_poset_report(n).passed());
}
