#include <doctest.h>

#include <filesystem>

#include "exotic/census.hpp"
#include "exotic/classify.hpp"
#include "exotic/error.hpp"
#include "exotic/suites.hpp"

using namespace exotic;

namespace {

Bipartition bp(const char* s) { return Bipartition::parse(s); }

// |{g ∈ M_2n(F_p) : gᵀJg = J}| by exhaustive search.
std::uint64_t brute_sp_order(int n, Scalar p) {
  const SymplecticSpace s(n, p);
  const int m = s.dim();
  std::uint64_t total = 1;
  for (int i = 0; i < m * m; ++i) total *= p;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    const FpMatrix g = unpack_matrix(code, m, p);
    if (g.transpose() * s.J() * g == s.J()) ++count;
  }
  return count;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("exotic_test_" + name);
}

}  // namespace

TEST_CASE("symplectic group order") {
  CHECK(sp_group_order(1, 3) == brute_sp_order(1, 3));
  CHECK(sp_group_order(1, 5) == brute_sp_order(1, 5));
  CHECK(sp_group_order(1, 3) == 24);
  CHECK(sp_group_order(1, 5) == 120);
  CHECK(sp_group_order(2, 3) == 81 * 8 * 80);
  CHECK(sp_group_order(2, 3) == 51840);
  CHECK_THROWS_AS(sp_group_order(40, 1000003), Error);
}

TEST_CASE("generators produce the whole group") {
  CHECK(sp_group_keys(1, 3).size() == 24);
  CHECK(sp_group_keys(1, 5).size() == 120);
  CHECK(sp_group_keys(2, 3).size() == 51840);
  const SymplecticSpace s(2, 3);
  for (const auto& g : sp_generators(s)) CHECK(g.transpose() * s.J() * g == s.J());
  for (const auto& g : sp_group_elements(1, 3)) CHECK(membership(g, Membership::HGroup));
}

TEST_CASE("size gate") {
  CHECK_THROWS_AS(require_census_gate(3, 3), Error);
  CHECK_THROWS_AS(require_census_gate(2, 7), Error);
  CHECK_THROWS_AS(orbit_census(3, 3), Error);
  CHECK_NOTHROW(require_census_gate(2, 5));
}

TEST_CASE("nilcone enumeration") {
  CHECK(enumerate_exotic_nilcone(1, 3).size() == 9);
  CHECK(enumerate_exotic_nilcone(1, 5).size() == 25);
  const NilconeEnumerator e(2, 3);
  CHECK(e.matrix_codes() == 729);
  CHECK(e.vector_codes() == 81);
  std::uint64_t nilpotent = 0;
  for (std::size_t c = 0; c < e.chunk_count(); ++c) e.for_each_matrix(c, [&](std::uint64_t, const FpMatrix&) { ++nilpotent; });
  // The nilpotent self-adjoint matrices number p^{2n² − 2n}.
  CHECK(nilpotent == 81);
}

TEST_CASE("stabilizer census") {
  const SymplecticSpace s(1, 3);
  CHECK(stabilizer_census({s, FpMatrix(3, 2, 2), {0, 0}, Flavor::Lie}) == 24);
  CHECK(stabilizer_census({s, FpMatrix(3, 2, 2), {1, 0}, Flavor::Lie}) == 3);
}

TEST_CASE("census n=1") {
  const CensusResult r = orbit_census(1, 3);
  CHECK(r.label_counts == std::map<Bipartition, std::uint64_t>{{bp("1|-"), 8}, {bp("-|1"), 1}});
  CHECK(census_report(r).passed());
  const CensusResult r5 = orbit_census(1, 5);
  CHECK(r5.label_counts.size() == 2);
  CHECK(census_report(r5).passed());
}

TEST_CASE("census n=2 p=3") {
  CensusOptions opts;
  const CensusResult r = orbit_census(2, 3, opts);
  CHECK(r.complete);
  CHECK(r.label_counts.size() == 5);
  CHECK(r.total_points == 6561);
  CHECK(r.labels_invariant);
  for (const auto& c : r.orbit_checks) {
    CHECK(c.orbit_stabilizer_ok);
    CHECK(c.transitive);
  }
  const auto open = std::find_if(r.orbit_checks.begin(), r.orbit_checks.end(),
                                 [](const OrbitCheck& c) { return c.label == bp("2|-"); });
  REQUIRE(open != r.orbit_checks.end());
  CHECK(open->count == 51840 / stabilizer_census(representative(r, bp("2|-"))));
  CHECK(census_report(r).passed());
  CHECK(strata_check(r).passed());
  CHECK(closure_shadow_check(r).passed());
  for (const auto& label : bipartitions_of(2)) CHECK(exotic_type(representative(r, label)) == label);

  // Merge order does not matter.
  CensusOptions two = opts;
  two.jobs = 2;
  two.chunks = 7;
  CHECK(orbit_census(2, 3, two).label_counts == r.label_counts);

  CensusOptions group = opts;
  group.flavor = Flavor::Group;
  group.orbit_checks = false;
  CHECK(compare_censuses(r, orbit_census(2, 3, group)).passed());
}

TEST_CASE("checkpoint resume") {
  const auto path = temp_path("resume.json");
  std::filesystem::remove(path);
  CensusOptions opts;
  opts.checkpoint = path;
  opts.orbit_checks = false;
  opts.chunks = 16;
  opts.max_chunks = 5;
  const CensusResult partial = orbit_census(2, 3, opts);
  CHECK_FALSE(partial.complete);
  CHECK(std::filesystem::exists(path));
  opts.max_chunks.reset();
  const CensusResult resumed = orbit_census(2, 3, opts);
  CHECK(resumed.complete);
  CensusOptions fresh;
  fresh.orbit_checks = false;
  fresh.chunks = 16;
  const CensusResult direct = orbit_census(2, 3, fresh);
  CHECK(resumed.label_counts == direct.label_counts);
  CHECK(resumed.representatives == direct.representatives);

  CensusOptions mismatched = opts;
  mismatched.chunks = 8;
  CHECK_THROWS_AS(orbit_census(2, 3, mismatched), Error);
  std::filesystem::remove(path);
}

TEST_CASE("general linear class counts") {
  CHECK(gl_class_count(1, 3) == 2);
  CHECK(gl_class_count(1, 5) == 4);
  CHECK(gl_class_count(2, 3) == 8);
}

TEST_CASE("Klyachko orbits") {
  const KlyachkoReport a = klyachko_census(1, 3);
  CHECK(a.orbit_count == 2);
  CHECK(a.passed());
  CHECK(klyachko_census(1, 5).orbit_count == 4);
  const KlyachkoReport c = klyachko_census(2, 3);
  CHECK(c.orbit_count == 8);
  CHECK(c.passed());
}
