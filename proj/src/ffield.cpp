#include "exotic/ffield.hpp"

#include <algorithm>
#include <sstream>

#include "exotic/error.hpp"

namespace exotic {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p >= (1ULL << 31)) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (!is_odd_prime(p)) {
    throw Error(ErrorKind::UsageError, "modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

Scalar mod_add(Scalar a, Scalar b, Scalar p) noexcept {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Scalar>(s >= p ? s - p : s);
}

Scalar mod_sub(Scalar a, Scalar b, Scalar p) noexcept { return a >= b ? a - b : a + (p - b); }

Scalar mod_mul(Scalar a, Scalar b, Scalar p) noexcept {
  return static_cast<Scalar>((std::uint64_t{a} * b) % p);
}

Scalar mod_neg(Scalar a, Scalar p) noexcept { return a == 0 ? 0 : p - a; }

Scalar reduce(std::int64_t value, Scalar p) noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  return static_cast<Scalar>(r < 0 ? r + p : r);
}

Scalar mod_inv(Scalar a, Scalar p) {
  if (a % p == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<Scalar>(result);
}

FpElem FpElem::make(std::int64_t value, Scalar p) {
  require_odd_prime(p);
  return FpElem{reduce(value, p), p};
}

FpElem field_arith(FpElem a, FpElem b, ArithOp op) {
  const Scalar p = a.p;
  if (op != ArithOp::Inv && b.p != p) throw Error(ErrorKind::SizeMismatch, "operands over different fields");
  switch (op) {
    case ArithOp::Add: return {mod_add(a.value, b.value, p), p};
    case ArithOp::Sub: return {mod_sub(a.value, b.value, p), p};
    case ArithOp::Mul: return {mod_mul(a.value, b.value, p), p};
    case ArithOp::Inv: return {mod_inv(a.value, p), p};
    case ArithOp::Div: return {mod_mul(a.value, mod_inv(b.value, p), p), p};
  }
  return a;
}

FpMatrix::FpMatrix(Scalar p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::RangeError, "negative matrix dimension");
}

FpMatrix::FpMatrix(Scalar p, int rows, int cols, std::vector<Scalar> entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::RangeError, "negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorKind::SizeMismatch, "entry count does not match rows*cols");
  }
  for (Scalar e : entries_)
    if (e >= p) throw Error(ErrorKind::RangeError, "matrix entry outside [0,p)");
}

FpMatrix FpMatrix::identity(Scalar p, int m) {
  FpMatrix out(p, m, m);
  for (int i = 0; i < m; ++i) out(i, i) = 1;
  return out;
}

FpMatrix FpMatrix::from_ints(Scalar p, int rows, int cols, std::span<const std::int64_t> values) {
  if (values.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorKind::SizeMismatch, "entry count does not match rows*cols");
  }
  std::vector<Scalar> entries(values.size());
  std::transform(values.begin(), values.end(), entries.begin(),
                 [p](std::int64_t v) { return reduce(v, p); });
  return FpMatrix(p, rows, cols, std::move(entries));
}

FpMatrix FpMatrix::column(Scalar p, const Vector& v) {
  return FpMatrix(p, static_cast<int>(v.size()), 1, v);
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Scalar e) { return e == 0; });
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

FpMatrix FpMatrix::scaled(Scalar s) const {
  FpMatrix out = *this;
  for (auto& e : out.entries_) e = mod_mul(e, s % p_, p_);
  return out;
}

Vector FpMatrix::row_vector(int r) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
  return Vector(first, first + cols_);
}

Vector FpMatrix::column_vector(int c) const {
  Vector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

namespace {

void check_same_shape(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::SizeMismatch, "matrix shapes or moduli differ");
  }
}

void require_square(const FpMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  check_same_shape(a, b);
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = mod_add(a.entries_[i], b.entries_[i], a.p_);
  return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  check_same_shape(a, b);
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = mod_sub(a.entries_[i], b.entries_[i], a.p_);
  return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) throw Error(ErrorKind::SizeMismatch, "matrix product shapes");
  FpMatrix out(a.p_, a.rows_, b.cols_);
  const std::uint64_t p = a.p_;
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < b.cols_; ++c) {
      std::uint64_t acc = 0;
      for (int k = 0; k < a.cols_; ++k) acc = (acc + std::uint64_t{a(r, k)} * b(k, c)) % p;
      out(r, c) = static_cast<Scalar>(acc);
    }
  }
  return out;
}

Vector operator*(const FpMatrix& a, const Vector& v) {
  if (static_cast<int>(v.size()) != a.cols_) throw Error(ErrorKind::SizeMismatch, "matrix-vector shapes");
  Vector out(static_cast<std::size_t>(a.rows_), 0);
  const std::uint64_t p = a.p_;
  for (int r = 0; r < a.rows_; ++r) {
    std::uint64_t acc = 0;
    for (int k = 0; k < a.cols_; ++k) acc = (acc + std::uint64_t{a(r, k)} * v[k]) % p;
    out[r] = static_cast<Scalar>(acc);
  }
  return out;
}

FpMatrix block2x2(const FpMatrix& a, const FpMatrix& b, const FpMatrix& c, const FpMatrix& d) {
  const int n = a.rows();
  for (const FpMatrix* m : {&a, &b, &c, &d}) {
    if (m->rows() != n || m->cols() != n || m->p() != a.p()) {
      throw Error(ErrorKind::SizeMismatch, "block2x2 expects equal square blocks");
    }
  }
  FpMatrix out(a.p(), 2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(i, j + n) = b(i, j);
      out(i + n, j) = c(i, j);
      out(i + n, j + n) = d(i, j);
    }
  }
  return out;
}

FpMatrix jordan_nilpotent(Scalar p, int m) {
  FpMatrix out(p, m, m);
  for (int i = 0; i + 1 < m; ++i) out(i, i + 1) = 1;
  return out;
}

Echelon rref(FpMatrix m) {
  const Scalar p = m.p();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Scalar inv = mod_inv(m(row, col), p);
    for (int c = col; c < m.cols(); ++c) m(row, c) = mod_mul(m(row, c), inv, p);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) = mod_sub(m(r, c), mod_mul(factor, m(row, c), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

int mat_rank(const FpMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

FpMatrix inverse(const FpMatrix& m) {
  require_square(m);
  const int n = m.rows();
  FpMatrix aug(m.p(), n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  }
  FpMatrix out(m.p(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  return out;
}

FpMatrix power(const FpMatrix& m, std::uint64_t k) {
  require_square(m);
  FpMatrix result = FpMatrix::identity(m.p(), m.rows());
  FpMatrix base = m;
  for (; k; k >>= 1) {
    if (k & 1) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

Subspace::Subspace(Scalar p, int ambient_dim) : p_(p), ambient_(ambient_dim) {}

Subspace Subspace::span(Scalar p, int ambient_dim, std::span<const Vector> vectors) {
  Subspace out(p, ambient_dim);
  if (vectors.empty()) return out;
  FpMatrix stacked(p, static_cast<int>(vectors.size()), ambient_dim);
  for (int r = 0; r < stacked.rows(); ++r) {
    if (static_cast<int>(vectors[r].size()) != ambient_dim) {
      throw Error(ErrorKind::SizeMismatch, "vector length differs from ambient dimension");
    }
    for (int c = 0; c < ambient_dim; ++c) stacked(r, c) = vectors[r][c] % p;
  }
  Echelon e = rref(std::move(stacked));
  out.pivots_ = e.pivots;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.basis_.push_back(e.reduced.row_vector(static_cast<int>(r)));
  return out;
}

Vector Subspace::reduce(Vector v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar coeff = v[pivots_[k]];
    if (coeff == 0) continue;
    for (int c = 0; c < ambient_; ++c) v[c] = mod_sub(v[c], mod_mul(coeff, basis_[k][c], p_), p_);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Scalar e) { return e == 0; });
}

Subspace kernel_basis(const FpMatrix& m) {
  const Scalar p = m.p();
  Echelon e = rref(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<Vector> vectors;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(static_cast<std::size_t>(m.cols()), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = mod_neg(e.reduced(static_cast<int>(r), free), p);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(p, m.cols(), vectors);
}

std::vector<FpMatrix> commutant_basis(const FpMatrix& y) {
  require_square(y);
  const int m = y.rows();
  const Scalar p = y.p();
  // Unknown Z as m*m coordinates z[a*m+b]; equation rows indexed by entry (i,j) of ZY - YZ.
  FpMatrix system(p, m * m, m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int eq = i * m + j;
      // (ZY)_{ij} = Σ_k Z_{ik} Y_{kj}
      for (int k = 0; k < m; ++k) system(eq, i * m + k) = mod_add(system(eq, i * m + k), y(k, j), p);
      // (YZ)_{ij} = Σ_k Y_{ik} Z_{kj}
      for (int k = 0; k < m; ++k) system(eq, k * m + j) = mod_sub(system(eq, k * m + j), y(i, k), p);
    }
  }
  Subspace ker = kernel_basis(system);
  std::vector<FpMatrix> out;
  out.reserve(ker.basis().size());
  for (const auto& v : ker.basis()) out.emplace_back(p, m, m, v);
  return out;
}

bool is_nilpotent(const FpMatrix& n) {
  require_square(n);
  const int m = n.rows();
  FpMatrix acc = n;
  for (int reached = 1; reached < m; reached *= 2) acc = acc * acc;
  return acc.is_zero();
}

Partition nilpotent_jordan_type(const FpMatrix& n) {
  if (!is_nilpotent(n)) throw Error(ErrorKind::NotNilpotent, "matrix is not nilpotent");
  const int m = n.rows();
  // Number of Jordan blocks of size >= j is rank(N^{j-1}) - rank(N^j).
  std::vector<int> at_least;
  int prev_rank = m;
  FpMatrix pw = FpMatrix::identity(n.p(), m);
  while (prev_rank > 0) {
    pw = pw * n;
    int r = mat_rank(pw);
    at_least.push_back(prev_rank - r);
    prev_rank = r;
  }
  return Partition(std::move(at_least)).conjugate();
}

FpMatrix induced_action(const FpMatrix& m, const Subspace& w, InducedMode mode) {
  require_square(m);
  if (w.ambient_dim() != m.rows() || w.p() != m.p()) throw Error(ErrorKind::SizeMismatch, "subspace ambient differs");
  const Scalar p = m.p();
  const int d = w.dim();
  for (const auto& b : w.basis()) {
    if (!w.contains(m * b)) throw Error(ErrorKind::NotStable, "subspace is not stable under the matrix");
  }
  if (mode == InducedMode::Restrict) {
    FpMatrix out(p, d, d);
    for (int k = 0; k < d; ++k) {
      Vector image = m * w.basis()[k];
      for (int l = 0; l < d; ++l) out(l, k) = image[w.pivots()[l]];
    }
    return out;
  }
  std::vector<int> complement;
  std::vector<char> is_pivot(static_cast<std::size_t>(m.rows()), 0);
  for (int c : w.pivots()) is_pivot[c] = 1;
  for (int c = 0; c < m.rows(); ++c)
    if (!is_pivot[c]) complement.push_back(c);
  const int q = static_cast<int>(complement.size());
  FpMatrix out(p, q, q);
  for (int k = 0; k < q; ++k) {
    Vector image = w.reduce(m.column_vector(complement[k]));
    for (int l = 0; l < q; ++l) out(l, k) = image[complement[l]];
  }
  return out;
}

std::string to_string(const FpMatrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    os << '[';
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

}  // namespace exotic
