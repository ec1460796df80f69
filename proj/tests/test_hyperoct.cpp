#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "exotic/error.hpp"
#include "exotic/hyperoct.hpp"
#include "exotic/suites.hpp"

using namespace exotic;

namespace {

Bipartition bp(const char* s) { return Bipartition::parse(s); }

// Signed permutation: image[i] = perm[i], with sign flip[i].
struct Signed {
  std::vector<int> perm;
  std::vector<int> flip;
};

std::vector<Signed> all_signed(int n) {
  std::vector<Signed> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Signed s{perm, std::vector<int>(static_cast<std::size_t>(n))};
      for (int i = 0; i < n; ++i) s.flip[i] = (mask >> i) & 1;
      out.push_back(s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// (positive cycle lengths, negative cycle lengths) of a signed permutation.
Bipartition cycle_type(const Signed& s) {
  const int n = static_cast<int>(s.perm.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> pos, neg;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, flips = 0;
    for (int j = i; !seen[j]; j = s.perm[j]) {
      seen[j] = 1;
      ++len;
      flips += s.flip[j];
    }
    (flips % 2 ? neg : pos).push_back(len);
  }
  return {Partition(pos), Partition(neg)};
}

// Trace of the signed permutation matrix.
int reflection_trace(const Signed& s) {
  int t = 0;
  for (std::size_t i = 0; i < s.perm.size(); ++i)
    if (s.perm[i] == static_cast<int>(i)) t += s.flip[i] ? -1 : 1;
  return t;
}

}  // namespace

TEST_CASE("group order") {
  CHECK(wn_order(1) == 2);
  CHECK(wn_order(2) == 8);
  CHECK(wn_order(8) == 10321920);
}

TEST_CASE("classes") {
  const auto c1 = wn_classes(1);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].size == 1);
  CHECK(c1[1].size == 1);
  const auto c2 = wn_classes(2);
  const std::vector<Bipartition> order{bp("1,1|-"), bp("2|-"), bp("1|1"), bp("-|2"), bp("-|1,1")};
  const std::vector<std::uint64_t> sizes{1, 2, 2, 2, 1};
  REQUIRE(c2.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(c2[i].signature == order[i]);
    CHECK(c2[i].size == sizes[i]);
  }
  std::uint64_t total = 0;
  for (const auto& c : wn_classes(3)) total += c.size;
  CHECK(wn_classes(3).size() == 10);
  CHECK(total == 48);
}

TEST_CASE("class sizes against brute-force enumeration") {
  for (int n = 1; n <= 4; ++n) {
    std::map<Bipartition, std::uint64_t> counted;
    for (const auto& s : all_signed(n)) ++counted[cycle_type(s)];
    for (const auto& c : wn_classes(n)) {
      CHECK(counted[c.signature] == c.size);
      CHECK(c.size * c.centralizer_order == wn_order(n));
    }
  }
}

TEST_CASE("symmetric group characters") {
  for (int n = 1; n <= 6; ++n) {
    const Partition triv({n});
    const Partition sign(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& rho : partitions_of(n)) {
      CHECK(sn_character(triv, rho) == 1);
      CHECK(sn_character(sign, rho) == ((n - rho.length()) % 2 ? -1 : 1));
    }
  }
  CHECK(sn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(sn_character(Partition({2, 1}), Partition({3})) == -1);
  CHECK_THROWS_AS(sn_character(Partition({2}), Partition({3})), Error);
}

TEST_CASE("hyperoctahedral characters") {
  const CharacterTable t2 = CharacterTable::build(2);
  const auto row = t2.row(t2.irrep_index(bp("1|1"))).values;
  CHECK(row == std::vector<std::int64_t>{2, 0, 0, 0, -2});
  for (int n = 1; n <= 5; ++n) {
    const CharacterTable t = CharacterTable::build(n);
    const Bipartition sign{{}, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))};
    for (std::size_t c = 0; c < t.classes().size(); ++c) {
      const Bipartition& s = t.classes()[c].signature;
      const int exponent = s.second.length() + (n - s.first.length() - s.second.length());
      CHECK(t.value(t.irrep_index(sign), c) == (exponent % 2 ? -1 : 1));
      CHECK(t.value(t.irrep_index(Bipartition{Partition({n}), {}}), c) == 1);
    }
  }
}

TEST_CASE("reflection representation against signed permutation matrices") {
  for (int n = 2; n <= 4; ++n) {
    const Bipartition reflection{Partition({n - 1}), Partition({1})};
    std::map<Bipartition, int> trace;
    for (const auto& s : all_signed(n)) trace[cycle_type(s)] = reflection_trace(s);
    for (const auto& c : wn_classes(n)) CHECK(wn_character(reflection, c.signature) == trace[c.signature]);
  }
}

TEST_CASE("irrep dimensions") {
  CHECK(irrep_dim(bp("3|-")) == 1);
  CHECK(irrep_dim(bp("1|1")) == 2);
  CHECK(irrep_dim(bp("1|2")) == 3);
  CHECK(standard_tableaux(Partition({2, 1})) == 2);
  CHECK(standard_tableaux(Partition({3, 2})) == 5);
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t sum = 0;
    for (const auto& l : bipartitions_of(n)) sum += irrep_dim(l) * irrep_dim(l);
    CHECK(sum == wn_order(n));
  }
}

TEST_CASE("inner products") {
  for (int n = 1; n <= 6; ++n) {
    const ClassFunction reg = regular_character(n);
    for (const auto& l : bipartitions_of(n)) {
      const ClassFunction chi = character(l);
      CHECK(inner_product(chi, chi) == Rational(1));
      CHECK(inner_product(reg, chi) == Rational(static_cast<std::int64_t>(irrep_dim(l))));
    }
    const Bipartition sign{{}, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))};
    CHECK(inner_product(character(Bipartition{Partition({n}), {}}), character(sign)) == Rational(0));
  }
  CHECK_THROWS_AS(inner_product(character(bp("1|-")), character(bp("1|1"))), Error);
}

TEST_CASE("table integrity") {
  for (int n = 1; n <= 6; ++n) CHECK(chartable_report(n).passed());
}

TEST_CASE("branching") {
  const BranchingMatrix b2 = restrict_branching(2);
  CHECK(b2.cols == std::vector<Bipartition>{bp("1|-"), bp("-|1")});
  CHECK(b2.entries[1] == std::vector<std::int64_t>{1, 1});
  for (int n = 2; n <= 6; ++n) {
    const BranchingMatrix b = restrict_branching(n);
    CHECK(b.entries[0][0] == 1);
    for (std::size_t j = 1; j < b.cols.size(); ++j) CHECK(b.entries[0][j] == 0);
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      std::int64_t sum = 0;
      for (auto e : b.entries[i]) sum += e;
      CHECK(sum == static_cast<std::int64_t>(removable_nodes(b.rows[i]).size()));
    }
  }
  CHECK_THROWS_AS(restrict_branching(1), Error);
}

TEST_CASE("graded fiber modules") {
  for (int n = 1; n <= 4; ++n) CHECK(graded_report(n).passed());
  const GradedWnModule m = graded_fiber_module(2, 1, Partition({1}), Partition({1}));
  CHECK(m.degrees.size() == 2);
  for (int n = 1; n <= 4; ++n) {
    const GradedWnModule top = graded_fiber_module(n, 0, Partition(), Partition({n}));
    CHECK(top.dimension() == (1u << n));
  }
  CHECK_THROWS_AS(graded_fiber_module(2, 3, Partition({3}), Partition()), Error);
  CHECK_THROWS_AS(graded_fiber_module(2, 1, Partition({2}), Partition()), Error);
}
