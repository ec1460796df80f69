#include "exotic/symplectic.hpp"

#include "exotic/error.hpp"

namespace exotic {

SymplecticSpace::SymplecticSpace(int n_, Scalar p_) : n(n_), p(p_) {
  if (n < 1) throw Error(ErrorKind::RangeError, "rank n must be positive");
  require_odd_prime(p);
}

FpMatrix SymplecticSpace::J() const {
  FpMatrix out(p, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    out(i, n + i) = 1;
    out(n + i, i) = p - 1;
  }
  return out;
}

Scalar SymplecticSpace::pairing(const Vector& u, const Vector& v) const {
  if (static_cast<int>(u.size()) != dim() || static_cast<int>(v.size()) != dim()) {
    throw Error(ErrorKind::SizeMismatch, "vector length differs from 2n");
  }
  // u^T J v = Σ_i u_i v_{n+i} − u_{n+i} v_i
  Scalar acc = 0;
  for (int i = 0; i < n; ++i) {
    acc = mod_add(acc, mod_mul(u[i], v[n + i], p), p);
    acc = mod_sub(acc, mod_mul(u[n + i], v[i], p), p);
  }
  return acc;
}

Vector SymplecticSpace::e(int i) const {
  Vector out(static_cast<std::size_t>(dim()), 0);
  out.at(static_cast<std::size_t>(i - 1)) = 1;
  return out;
}

Vector SymplecticSpace::f(int i) const {
  Vector out(static_cast<std::size_t>(dim()), 0);
  out.at(static_cast<std::size_t>(n + i - 1)) = 1;
  return out;
}

namespace {

void require_even_square(const FpMatrix& x) {
  if (!x.square()) throw Error(ErrorKind::NonSquare, "expected a square matrix");
  if (x.rows() % 2 != 0 || x.rows() == 0) throw Error(ErrorKind::SizeMismatch, "expected size 2n");
}

FpMatrix j_of(const FpMatrix& x) { return SymplecticSpace(x.rows() / 2, x.p()).J(); }

FpMatrix j_inverse_of(const FpMatrix& x) {
  FpMatrix j = j_of(x);
  return j.scaled(x.p() - 1);  // J⁻¹ = −J
}

Scalar half(Scalar p) { return (p + 1) / 2; }

}  // namespace

FpMatrix theta_group(const FpMatrix& g) {
  require_even_square(g);
  return j_inverse_of(g) * inverse(g).transpose() * j_of(g);
}

FpMatrix adjoint(const FpMatrix& x) {
  require_even_square(x);
  return j_inverse_of(x) * x.transpose() * j_of(x);
}

bool membership(const FpMatrix& x, Membership which) {
  require_even_square(x);
  switch (which) {
    case Membership::GMinusTheta: return adjoint(x) == x;
    case Membership::GIotaTheta: return adjoint(x) == x && mat_rank(x) == x.rows();
    case Membership::SpLie: return (adjoint(x) + x).is_zero();
    case Membership::HGroup: {
      FpMatrix j = j_of(x);
      return x.transpose() * j * x == j;
    }
  }
  return false;
}

FpMatrix log_map(const FpMatrix& x) {
  if (!membership(x, Membership::GIotaTheta)) {
    throw Error(ErrorKind::NotInGIotaTheta, "expected an invertible self-adjoint matrix");
  }
  FpMatrix z = x - FpMatrix::identity(x.p(), x.rows());
  return (z + adjoint(z)).scaled(half(x.p()));
}

FpMatrix embed_in_A(const FpMatrix& x) {
  if (!x.square()) throw Error(ErrorKind::NonSquare, "A-block must be square");
  const int n = x.rows();
  return block2x2(x, FpMatrix(x.p(), n, n), FpMatrix(x.p(), n, n), FpMatrix::identity(x.p(), n));
}

FpMatrix klyachko_embed(const FpMatrix& a) {
  require_even_square(a);
  const int n = a.rows() / 2;
  for (int r = 0; r < 2 * n; ++r) {
    for (int c = 0; c < 2 * n; ++c) {
      if (r < n && c < n) continue;
      const Scalar want = (r == c) ? 1 : 0;
      if (a(r, c) != want) throw Error(ErrorKind::NotInA, "matrix is not of the form diag(x, 1_n)");
    }
  }
  if (mat_rank(a) != 2 * n) throw Error(ErrorKind::NotInA, "upper-left block is singular");
  return a * inverse(theta_group(a));
}

namespace {

// Kernel of the linear map x ↦ x + sign·x* on (2n)×(2n) matrices.
std::vector<FpMatrix> adjoint_eigenspace(const SymplecticSpace& space, Scalar sign) {
  const int m = space.dim();
  const Scalar p = space.p;
  FpMatrix system(p, m * m, m * m);
  for (int idx = 0; idx < m * m; ++idx) {
    FpMatrix unit(p, m, m);
    unit(idx / m, idx % m) = 1;
    FpMatrix image = unit + adjoint(unit).scaled(sign);
    for (int k = 0; k < m * m; ++k) system(k, idx) = image.entries()[k];
  }
  std::vector<FpMatrix> out;
  const Subspace kernel = kernel_basis(system);
  for (const auto& v : kernel.basis()) out.emplace_back(p, m, m, v);
  return out;
}

}  // namespace

std::vector<FpMatrix> self_adjoint_basis(const SymplecticSpace& space) {
  return adjoint_eigenspace(space, space.p - 1);
}

std::vector<FpMatrix> sp_lie_basis(const SymplecticSpace& space) { return adjoint_eigenspace(space, 1); }

void validate(const ExoticPair& pair) {
  const int m = pair.space.dim();
  if (pair.x.rows() != m || pair.x.cols() != m || pair.x.p() != pair.space.p ||
      static_cast<int>(pair.v.size()) != m) {
    throw Error(ErrorKind::SizeMismatch, "pair does not live on F_p^{2n}");
  }
  for (Scalar c : pair.v)
    if (c >= pair.space.p) throw Error(ErrorKind::RangeError, "vector entry outside [0,p)");
  if (!membership(pair.x, Membership::GMinusTheta)) {
    throw Error(ErrorKind::NotDoubled, "x is not self-adjoint");
  }
  FpMatrix nil = pair.flavor == Flavor::Lie ? pair.x : pair.x - FpMatrix::identity(pair.space.p, m);
  if (!is_nilpotent(nil)) {
    throw Error(ErrorKind::NotNilpotent,
                pair.flavor == Flavor::Lie ? "x is not nilpotent" : "x is not unipotent");
  }
}

NormalFormData normal_form_pair(const Bipartition& label, const SymplecticSpace& space) {
  const int n = space.n;
  const Scalar p = space.p;
  if (label.rank() != n) {
    throw Error(ErrorKind::SizeMismatch, label.to_string() + " is not a bipartition of " + std::to_string(n));
  }
  NormalFormData nf;
  nf.label = label;
  nf.nu = label.first + label.second;
  const int a = nf.nu.length();

  // v_{i,j} = e_{offset_i + j}; the nilpotent part of y shifts each chain down by one.
  FpMatrix nilpart(p, n, n);
  int offset = 0;
  nf.jordan_basis.resize(static_cast<std::size_t>(a));
  for (int i = 1; i <= a; ++i) {
    const int len = nf.nu.row(i);
    for (int j = 1; j <= len; ++j) {
      nf.jordan_basis[i - 1].push_back(space.e(offset + j));
      if (j > 1) nilpart(offset + j - 2, offset + j - 1) = 1;
    }
    offset += len;
  }
  nf.y = FpMatrix::identity(p, n) + nilpart;
  FpMatrix y_in_a = embed_in_A(nf.y);
  FpMatrix x = y_in_a * inverse(theta_group(y_in_a));

  // Dual basis in span(f): solve <v_k, v'_l> = δ_kl.
  std::vector<Vector> flat;
  for (const auto& chain : nf.jordan_basis) flat.insert(flat.end(), chain.begin(), chain.end());
  FpMatrix pair_matrix(p, n, n);
  for (int k = 0; k < n; ++k)
    for (int b = 1; b <= n; ++b) pair_matrix(k, b - 1) = space.pairing(flat[k], space.f(b));
  FpMatrix coeffs = inverse(pair_matrix);
  nf.dual_basis.resize(static_cast<std::size_t>(a));
  int k = 0;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= nf.nu.row(i); ++j, ++k) {
      Vector dual(static_cast<std::size_t>(2 * n), 0);
      for (int b = 1; b <= n; ++b) dual[n + b - 1] = coeffs(b - 1, k);
      nf.dual_basis[i - 1].push_back(std::move(dual));
    }
  }

  for (int row = 1; row <= a;) {
    int end = row;
    while (end + 1 <= a && nf.nu.row(end + 1) == nf.nu.row(row)) ++end;
    nf.block_sizes.push_back(end - row + 1);
    nf.block_nu.push_back(nf.nu.row(row));
    nf.block_mu1.push_back(label.first.row(row));
    nf.block_first_row.push_back(row);
    nf.block_last_row.push_back(end);
    row = end + 1;
  }

  Vector v(static_cast<std::size_t>(2 * n), 0);
  for (int blk = 0; blk < nf.blocks(); ++blk) {
    const int height = nf.block_mu1[blk];
    if (height == 0) continue;
    const Vector& term = nf.v_at(nf.block_first_row[blk], height);
    for (int c = 0; c < 2 * n; ++c) v[c] = mod_add(v[c], term[c], p);
  }
  nf.pair = ExoticPair{space, std::move(x), std::move(v), Flavor::Group};
  return nf;
}

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

// Visits every upper-triangular n×n matrix whose diagonal entries come from `diag_values`.
template <class Visit>
void for_each_upper_triangular(int n, Scalar p, const std::vector<Scalar>& diag_values, Visit&& visit) {
  std::vector<std::pair<int, int>> strict;
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) strict.emplace_back(r, c);
  const std::uint64_t diag_count = ipow(diag_values.size(), n);
  const std::uint64_t strict_count = ipow(p, static_cast<int>(strict.size()));
  for (std::uint64_t d = 0; d < diag_count; ++d) {
    for (std::uint64_t s = 0; s < strict_count; ++s) {
      FpMatrix b(p, n, n);
      std::uint64_t code = d;
      for (int i = 0; i < n; ++i, code /= diag_values.size()) b(i, i) = diag_values[code % diag_values.size()];
      code = s;
      for (const auto& [r, c] : strict) {
        b(r, c) = static_cast<Scalar>(code % p);
        code /= p;
      }
      visit(b);
    }
  }
}

// Dimension of {c ∈ M_n : cᵀ − L(c) = 0} for a linear L given as a callback.
template <class Map>
int solution_dim(int n, Scalar p, Map&& map) {
  FpMatrix system(p, n * n, n * n);
  for (int idx = 0; idx < n * n; ++idx) {
    FpMatrix c(p, n, n);
    c(idx / n, idx % n) = 1;
    FpMatrix image = c.transpose() - map(c);
    for (int k = 0; k < n * n; ++k) system(k, idx) = image.entries()[k];
  }
  return n * n - mat_rank(system);
}

}  // namespace

FixedPointCounts fixed_point_counts(const SymplecticSpace& space) {
  const int n = space.n;
  const Scalar p = space.p;
  FixedPointCounts out;

  // U^θ: b upper unitriangular, lower-right block b^{-T}, and cᵀ = b⁻¹ c bᵀ.
  for_each_upper_triangular(n, p, {1}, [&](const FpMatrix& b) {
    const FpMatrix b_inv = inverse(b);
    const FpMatrix b_t = b.transpose();
    out.u_theta += ipow(p, solution_dim(n, p, [&](const FpMatrix& c) { return b_inv * c * b_t; }));
  });

  // B^{ιθ}: b invertible upper triangular, lower-right block bᵀ, and cᵀ = −c.
  std::vector<Scalar> units;
  for (Scalar s = 1; s < p; ++s) units.push_back(s);
  for_each_upper_triangular(n, p, units, [&](const FpMatrix&) {
    out.b_iota_theta += ipow(p, solution_dim(n, p, [&](const FpMatrix& c) { return c.scaled(p - 1); }));
  });

  // T^{ιθ}: invertible diagonal matrices that are self-adjoint.
  const std::uint64_t total = ipow(p - 1, 2 * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    FpMatrix t(p, 2 * n, 2 * n);
    std::uint64_t rest = code;
    for (int i = 0; i < 2 * n; ++i, rest /= (p - 1)) t(i, i) = static_cast<Scalar>(rest % (p - 1) + 1);
    if (membership(t, Membership::GIotaTheta)) ++out.t_iota_theta;
  }
  return out;
}

}  // namespace exotic
