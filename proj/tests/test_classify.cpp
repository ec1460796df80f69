#include <doctest.h>

#include "exotic/classify.hpp"
#include "exotic/error.hpp"
#include "exotic/suites.hpp"

using namespace exotic;

namespace {

Bipartition bp(const char* s) { return Bipartition::parse(s); }

ExoticPair lie_form(const Bipartition& label, const SymplecticSpace& space) {
  const NormalFormData nf = normal_form_pair(label, space);
  return ExoticPair{space, log_map(nf.pair.x), nf.pair.v, Flavor::Lie};
}

}  // namespace

TEST_CASE("enhanced type") {
  const FpMatrix y = FpMatrix::identity(3, 2) + jordan_nilpotent(3, 2);
  CHECK(enhanced_type({y, {0, 1}, true}) == bp("2|-"));
  CHECK(enhanced_type({y, {1, 0}, true}) == bp("1|1"));
  CHECK(enhanced_type({y, {0, 0}, true}) == bp("-|2"));
  const FpMatrix n = jordan_nilpotent(5, 3);
  CHECK(enhanced_type({n, {0, 0, 0}, false}) == bp("-|3"));
}

TEST_CASE("enhanced type components add up to the Jordan type") {
  const FpMatrix n = [] {
    FpMatrix m(3, 5, 5);
    m(0, 1) = 1;
    m(1, 2) = 1;
    m(3, 4) = 1;
    return m;
  }();
  const EnhancedClassifier c(n);
  for (std::uint64_t code = 0; code < 243; ++code) {
    Vector v(5);
    std::uint64_t k = code;
    for (auto& e : v) {
      e = static_cast<Scalar>(k % 3);
      k /= 3;
    }
    const Bipartition t = c.type_of(v);
    CHECK(t.first + t.second == Partition({3, 2}));
    CHECK(c.span_dim(v) == t.first.size());
  }
}

TEST_CASE("halving") {
  CHECK(halve(Partition({2, 2, 1, 1})) == Partition({2, 1}));
  CHECK(halve(Partition()) == Partition());
  CHECK_THROWS_AS(halve(Partition({2, 1})), Error);
}

TEST_CASE("exotic type examples") {
  const SymplecticSpace s1(1, 3);
  CHECK(exotic_type({s1, FpMatrix::identity(3, 2), {1, 0}, Flavor::Group}) == bp("1|-"));
  CHECK(exotic_type({s1, FpMatrix(3, 2, 2), {1, 0}, Flavor::Lie}) == bp("1|-"));
  for (int n = 1; n <= 4; ++n) {
    const SymplecticSpace s(n, 3);
    const Vector zero(static_cast<std::size_t>(2 * n), 0);
    const Bipartition expected{{}, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))};
    CHECK(exotic_type({s, FpMatrix::identity(3, 2 * n), zero, Flavor::Group}) == expected);
  }
  CHECK_THROWS_AS(exotic_type({s1, jordan_nilpotent(3, 2), {1, 0}, Flavor::Lie}), Error);
}

TEST_CASE("stabilizer dimensions") {
  const SymplecticSpace s(2, 3);
  CHECK(stabilizer_dim({s, FpMatrix(3, 4, 4), {0, 0, 0, 0}, Flavor::Lie}, true) == 10);
  CHECK(stabilizer_dim(lie_form(bp("1|1"), s), true) == 4);
  for (int n = 1; n <= 4; ++n) {
    std::map<Bipartition, int> first;
    for (Scalar p : {3u, 5u, 7u}) {
      const SymplecticSpace space(n, p);
      for (const auto& label : bipartitions_of(n)) {
        const NormalFormData nf = normal_form_pair(label, space);
        const int with_v = stabilizer_dim(nf.pair, true);
        CHECK(with_v == 2 * n * n + n - orbit_dim(label, n));
        CHECK(stabilizer_dim(nf.pair, false) - 2 * label.first.size() == with_v);
        auto [it, inserted] = first.emplace(label, with_v);
        if (!inserted) CHECK(it->second == with_v);
      }
    }
  }
}

TEST_CASE("stabilizer without v follows the nilpotent orbit dimension") {
  for (int n = 1; n <= 4; ++n) {
    const SymplecticSpace s(n, 5);
    for (const auto& lambda : partitions_of(n)) {
      const NormalFormData nf = normal_form_pair(Bipartition{{}, lambda}, s);
      CHECK(stabilizer_dim(nf.pair, false) == 2 * n * n + n - (2 * n * n - 2 * n - 4 * n_invariant(lambda)));
    }
  }
}

TEST_CASE("cyclic dimension") {
  const SymplecticSpace s(2, 3);
  CHECK(cyclic_dim({s, FpMatrix(3, 4, 4), {0, 0, 0, 0}, Flavor::Lie}) == 0);
  CHECK(cyclic_dim(lie_form(bp("1|1"), s)) == 1);
  for (int n = 1; n <= 4; ++n) {
    const SymplecticSpace space(n, 5);
    for (const auto& label : bipartitions_of(n)) {
      const int c = cyclic_dim(lie_form(label, space));
      CHECK(c <= label.first.size());
      CHECK((c == label.first.size()) == (label.first.length() <= 1));
      CHECK(c == label.first.row(1));
    }
  }
}

TEST_CASE("line stabilizers") {
  const SymplecticSpace s2(2, 3);
  const NormalFormData nf = normal_form_pair(bp("1|1"), s2);
  CHECK(parabolic_stabilizer_dim(nf, 1, NodeCase::I) == 4);
  CHECK(parabolic_stabilizer_dim(nf, 1, NodeCase::II) == 3);
  CHECK_THROWS_AS(parabolic_stabilizer_dim(nf, 2, NodeCase::I), Error);
  CHECK_THROWS_AS(parabolic_stabilizer_dim(nf, 0, NodeCase::I), Error);

  const SymplecticSpace s3(3, 5);
  const NormalFormData nf3 = normal_form_pair(bp("2|1"), s3);
  const int z = stabilizer_dim(nf3.pair, true);
  CHECK(parabolic_stabilizer_dim(nf3, 1, NodeCase::I) == z);
  CHECK(parabolic_stabilizer_dim(nf3, 1, NodeCase::II) == z - 1);
}

TEST_CASE("line stabilizers at every removable node") {
  for (int n = 2; n <= 4; ++n)
    for (Scalar p : {3u, 5u}) CHECK(parabolic_report(n, p).passed());
}

TEST_CASE("classification is invariant under symplectic conjugation") {
  for (int n = 1; n <= 3; ++n)
    for (Scalar p : {3u, 5u}) CHECK(invariance_report(n, p, 1234 + n, 15).passed());
}
