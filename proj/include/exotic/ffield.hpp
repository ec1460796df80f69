#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "exotic/bicomb.hpp"

namespace exotic {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

/// True for odd primes p < 2^31.
bool is_odd_prime(std::uint64_t p);
/// Throws UsageError unless is_odd_prime(p).
void require_odd_prime(std::uint64_t p);

struct FpElem {
  Scalar value = 0;
  Scalar p = 3;

  static FpElem make(std::int64_t value, Scalar p);
  friend bool operator==(const FpElem&, const FpElem&) = default;
};

enum class ArithOp { Add, Sub, Mul, Inv, Div };

/// Exact arithmetic mod p; Inv ignores `b`. Throws DivisionByZero, SizeMismatch.
FpElem field_arith(FpElem a, FpElem b, ArithOp op);

Scalar mod_add(Scalar a, Scalar b, Scalar p) noexcept;
Scalar mod_sub(Scalar a, Scalar b, Scalar p) noexcept;
Scalar mod_mul(Scalar a, Scalar b, Scalar p) noexcept;
Scalar mod_neg(Scalar a, Scalar p) noexcept;
Scalar mod_inv(Scalar a, Scalar p);
Scalar reduce(std::int64_t value, Scalar p) noexcept;

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(Scalar p, int rows, int cols);
  FpMatrix(Scalar p, int rows, int cols, std::vector<Scalar> entries);

  static FpMatrix identity(Scalar p, int m);
  /// Reduces arbitrary integers mod p.
  static FpMatrix from_ints(Scalar p, int rows, int cols, std::span<const std::int64_t> values);
  static FpMatrix column(Scalar p, const Vector& v);

  Scalar p() const noexcept { return p_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Scalar operator()(int r, int c) const noexcept {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  Scalar& operator()(int r, int c) noexcept {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool is_zero() const noexcept;
  FpMatrix transpose() const;
  FpMatrix scaled(Scalar s) const;
  Vector row_vector(int r) const;
  Vector column_vector(int c) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend Vector operator*(const FpMatrix& a, const Vector& v);

 private:
  Scalar p_ = 3;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Block matrix [[a, b], [c, d]] with square blocks of equal size.
FpMatrix block2x2(const FpMatrix& a, const FpMatrix& b, const FpMatrix& c, const FpMatrix& d);
/// Regular nilpotent Jordan block: ones on the superdiagonal.
FpMatrix jordan_nilpotent(Scalar p, int m);

/// Reduced row echelon form; pivots normalized to 1.
struct Echelon {
  FpMatrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

Echelon rref(FpMatrix m);
int mat_rank(const FpMatrix& m);
FpMatrix inverse(const FpMatrix& m);  // Singular, NonSquare
FpMatrix power(const FpMatrix& m, std::uint64_t k);

/// Subspace of F_p^d held by its canonical reduced echelon basis.
class Subspace {
 public:
  Subspace(Scalar p, int ambient_dim);
  /// Span of arbitrary vectors.
  static Subspace span(Scalar p, int ambient_dim, std::span<const Vector> vectors);

  Scalar p() const noexcept { return p_; }
  int ambient_dim() const noexcept { return ambient_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  /// v minus its projection along the pivot coordinates; zero iff v is in the span.
  Vector reduce(Vector v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Scalar p_;
  int ambient_;
  std::vector<Vector> basis_;
  std::vector<int> pivots_;
};

Subspace kernel_basis(const FpMatrix& m);

/// Basis of {Z : ZY = YZ}. Throws NonSquare.
std::vector<FpMatrix> commutant_basis(const FpMatrix& y);

bool is_nilpotent(const FpMatrix& n);
/// Jordan type of a nilpotent matrix. Throws NotNilpotent, NonSquare.
Partition nilpotent_jordan_type(const FpMatrix& n);

enum class InducedMode { Restrict, Quotient };

/// Matrix of M on W (in W's echelon basis) or on ambient/W (basis: unit vectors at
/// non-pivot coordinates). Throws NotStable.
FpMatrix induced_action(const FpMatrix& m, const Subspace& w, InducedMode mode);

std::string to_string(const FpMatrix& m);

}  // namespace exotic
