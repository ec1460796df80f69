#include <doctest.h>

#include <random>

#include "exotic/classify.hpp"
#include "exotic/error.hpp"
#include "exotic/symplectic.hpp"

using namespace exotic;

namespace {

FpMatrix random_invertible(std::mt19937_64& rng, Scalar p, int m) {
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  while (true) {
    FpMatrix g(p, m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g(i, j) = d(rng);
    if (mat_rank(g) == m) return g;
  }
}

FpMatrix random_matrix(std::mt19937_64& rng, Scalar p, int m) {
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  FpMatrix g(p, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = d(rng);
  return g;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

}  // namespace

TEST_CASE("form") {
  const SymplecticSpace s(2, 3);
  CHECK(s.pairing(s.e(1), s.f(1)) == 1);
  CHECK(s.pairing(s.f(1), s.e(1)) == 2);
  CHECK(s.pairing(s.e(1), s.f(2)) == 0);
  CHECK(s.pairing(s.e(1), s.e(2)) == 0);
  CHECK_THROWS_AS(SymplecticSpace(2, 4), Error);
  CHECK_THROWS_AS(SymplecticSpace(0, 3), Error);
}

TEST_CASE("theta") {
  const SymplecticSpace s(2, 5);
  const FpMatrix one = FpMatrix::identity(5, 4);
  CHECK(theta_group(one) == one);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const FpMatrix g = random_invertible(rng, 5, 4), h = random_invertible(rng, 5, 4);
    CHECK(theta_group(theta_group(g)) == g);
    CHECK(theta_group(g * h) == theta_group(g) * theta_group(h));
    CHECK(membership(g * inverse(theta_group(g)), Membership::GIotaTheta));
    // Sp is the fixed-point set.
    if (g.transpose() * s.J() * g == s.J()) CHECK(theta_group(g) == g);
  }
  const FpMatrix x = FpMatrix::from_ints(5, 2, 2, std::vector<std::int64_t>{1, 2, 3, 4});
  const FpMatrix a = embed_in_A(x);
  CHECK(a * inverse(theta_group(a)) == block2x2(x, FpMatrix(5, 2, 2), FpMatrix(5, 2, 2), x.transpose()));
}

TEST_CASE("adjoint") {
  CHECK(adjoint(FpMatrix::identity(3, 2)) == FpMatrix::identity(3, 2));
  const FpMatrix m = FpMatrix::from_ints(7, 2, 2, std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(adjoint(m) == FpMatrix::from_ints(7, 2, 2, std::vector<std::int64_t>{4, -2, -3, 1}));
  const SymplecticSpace s(2, 5);
  for (const auto& h : sp_lie_basis(s)) CHECK(adjoint(h) == h.scaled(4));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Scalar> d(0, 4);
  for (int t = 0; t < 30; ++t) {
    const FpMatrix x = random_matrix(rng, 5, 4);
    Vector u(4), v(4);
    for (auto& e : u) e = d(rng);
    for (auto& e : v) e = d(rng);
    CHECK(s.pairing(x * u, v) == s.pairing(u, adjoint(x) * v));
  }
}

TEST_CASE("self-adjoint and sp dimensions") {
  for (int n = 1; n <= 3; ++n) {
    for (Scalar p : {3u, 5u}) {
      const SymplecticSpace s(n, p);
      CHECK(self_adjoint_basis(s).size() == static_cast<std::size_t>(2 * n * n - n));
      CHECK(sp_lie_basis(s).size() == static_cast<std::size_t>(2 * n * n + n));
      for (const auto& x : self_adjoint_basis(s)) CHECK(membership(x, Membership::GMinusTheta));
      for (const auto& x : sp_lie_basis(s)) CHECK(membership(x, Membership::SpLie));
    }
  }
  // n = 1: the self-adjoint matrices are the scalars.
  const auto basis = self_adjoint_basis(SymplecticSpace(1, 3));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == FpMatrix::identity(3, 2).scaled(basis[0](0, 0)));
  CHECK(membership(FpMatrix::identity(3, 4), Membership::GIotaTheta));
}

TEST_CASE("log map") {
  const SymplecticSpace s(2, 3);
  CHECK(log_map(FpMatrix::identity(3, 4)).is_zero());
  for (Scalar a = 1; a < 5; ++a) {
    const FpMatrix x = FpMatrix::identity(5, 2).scaled(a);
    CHECK(log_map(x) == FpMatrix::identity(5, 2).scaled(mod_sub(a, 1, 5)));
  }
  FpMatrix not_self_adjoint = FpMatrix::identity(3, 4);
  not_self_adjoint(0, 1) = 1;
  CHECK_THROWS_AS(log_map(not_self_adjoint), Error);
}

TEST_CASE("Klyachko embedding") {
  CHECK(klyachko_embed(embed_in_A(FpMatrix::identity(3, 2))) == FpMatrix::identity(3, 4));
  const FpMatrix two = FpMatrix::from_ints(3, 1, 1, std::vector<std::int64_t>{2});
  CHECK(klyachko_embed(embed_in_A(two)) == FpMatrix::identity(3, 2).scaled(2));
  for (int n = 1; n <= 4; ++n) {
    const FpMatrix regular = FpMatrix::identity(5, n) + jordan_nilpotent(5, n);
    const FpMatrix image = klyachko_embed(embed_in_A(regular));
    CHECK(nilpotent_jordan_type(image - FpMatrix::identity(5, 2 * n)) == Partition({n, n}));
  }
  FpMatrix not_in_a = FpMatrix::identity(3, 4);
  not_in_a(3, 0) = 1;
  CHECK_THROWS_AS(klyachko_embed(not_in_a), Error);
}

TEST_CASE("fixed-point counts") {
  for (int n = 1; n <= 3; ++n) {
    for (Scalar p : {3u, 5u}) {
      const FixedPointCounts c = fixed_point_counts(SymplecticSpace(n, p));
      CHECK(c.u_theta == ipow(p, n * n));
      CHECK(c.b_iota_theta == ipow(p - 1, n) * ipow(p, n * n - n));
      CHECK(c.t_iota_theta == ipow(p - 1, n));
    }
  }
}

TEST_CASE("normal forms") {
  const SymplecticSpace s(2, 3);
  const NormalFormData nf = normal_form_pair(Bipartition::parse("1|1"), s);
  CHECK(nf.nu == Partition({2}));
  CHECK(nf.y == FpMatrix::identity(3, 2) + jordan_nilpotent(3, 2));
  CHECK(nf.pair.v == nf.v_at(1, 1));
  CHECK(exotic_type(nf.pair) == Bipartition::parse("1|1"));

  const NormalFormData zero = normal_form_pair(Bipartition::parse("-|1,1"), s);
  CHECK(zero.pair.x == FpMatrix::identity(3, 4));
  CHECK(zero.pair.v == Vector(4, 0));

  for (int n = 1; n <= 5; ++n) {
    for (Scalar p : {3u, 5u}) {
      const SymplecticSpace space(n, p);
      const NormalFormData open = normal_form_pair(Bipartition{Partition({n}), {}}, space);
      CHECK(cyclic_dim(open.pair) == n);
      for (const auto& label : bipartitions_of(n)) {
        const NormalFormData f = normal_form_pair(label, space);
        CHECK(exotic_type(f.pair) == label);
        CHECK(membership(f.pair.x, Membership::GIotaTheta));
        for (int i = 1; i <= f.nu.length(); ++i)
          for (int j = 1; j <= f.nu.row(i); ++j)
            for (int i2 = 1; i2 <= f.nu.length(); ++i2)
              for (int j2 = 1; j2 <= f.nu.row(i2); ++j2)
                CHECK(space.pairing(f.v_at(i, j), f.dual_at(i2, j2)) == ((i == i2 && j == j2) ? 1u : 0u));
      }
    }
  }
  CHECK_THROWS_AS(normal_form_pair(Bipartition::parse("1|-"), s), Error);
}

TEST_CASE("pair validation") {
  const SymplecticSpace s(1, 3);
  CHECK_NOTHROW(validate(ExoticPair{s, FpMatrix(3, 2, 2), {1, 0}, Flavor::Lie}));
  CHECK_THROWS_AS(validate(ExoticPair{s, FpMatrix(3, 2, 2), {1, 0, 0}, Flavor::Lie}), Error);
  CHECK_THROWS_AS(validate(ExoticPair{s, FpMatrix::identity(3, 2), {1, 0}, Flavor::Lie}), Error);
  CHECK_THROWS_AS(validate(ExoticPair{s, jordan_nilpotent(3, 2), {1, 0}, Flavor::Lie}), Error);
}
