#include "exotic/classify.hpp"

#include "exotic/error.hpp"

namespace exotic {

namespace {

FpMatrix nilpotent_part(const FpMatrix& y, bool unipotent) {
  if (!y.square()) throw Error(ErrorKind::NonSquare, "enhanced pair needs a square matrix");
  FpMatrix nil = unipotent ? y - FpMatrix::identity(y.p(), y.rows()) : y;
  if (!is_nilpotent(nil)) throw Error(ErrorKind::NotNilpotent, unipotent ? "y is not unipotent" : "y is not nilpotent");
  return nil;
}

FpMatrix exotic_nilpotent(const SymplecticSpace& space, const FpMatrix& x, Flavor flavor) {
  if (x.rows() != space.dim() || x.cols() != space.dim()) throw Error(ErrorKind::SizeMismatch, "x is not 2n x 2n");
  if (!membership(x, Membership::GMinusTheta)) throw Error(ErrorKind::NotDoubled, "x is not self-adjoint");
  FpMatrix nil = flavor == Flavor::Lie ? x : [&] {
    if (!membership(x, Membership::GIotaTheta)) throw Error(ErrorKind::NotNilpotent, "x is not unipotent");
    return log_map(x);
  }();
  if (!is_nilpotent(nil)) {
    throw Error(ErrorKind::NotNilpotent, flavor == Flavor::Lie ? "x is not nilpotent" : "x is not unipotent");
  }
  return nil;
}

// Rows of a linear system in the coordinates of an sp_{2n} basis.
class SpSystem {
 public:
  explicit SpSystem(const SymplecticSpace& space) : space_(space), basis_(sp_lie_basis(space)) {}

  void commute_with(const FpMatrix& x) {
    const int m = space_.dim();
    std::vector<FpMatrix> images;
    for (const auto& b : basis_) images.push_back(b * x - x * b);
    for (int e = 0; e < m * m; ++e) {
      Vector row;
      for (const auto& img : images) row.push_back(img.entries()[e]);
      rows_.push_back(std::move(row));
    }
  }

  void annihilate(const Vector& v) {
    std::vector<Vector> images;
    for (const auto& b : basis_) images.push_back(b * v);
    for (int e = 0; e < space_.dim(); ++e) {
      Vector row;
      for (const auto& img : images) row.push_back(img[e]);
      rows_.push_back(std::move(row));
    }
  }

  // h w ∈ <w>: every 2x2 minor of [h w | w] against a pivot of w vanishes.
  void preserve_line(const Vector& w) {
    const Scalar p = space_.p;
    int pivot = -1;
    for (int i = 0; i < space_.dim() && pivot < 0; ++i)
      if (w[i] != 0) pivot = i;
    if (pivot < 0) throw Error(ErrorKind::RangeError, "line spanned by the zero vector");
    std::vector<Vector> images;
    for (const auto& b : basis_) images.push_back(b * w);
    for (int s = 0; s < space_.dim(); ++s) {
      if (s == pivot) continue;
      Vector row;
      for (const auto& img : images) {
        row.push_back(mod_sub(mod_mul(img[s], w[pivot], p), mod_mul(img[pivot], w[s], p), p));
      }
      rows_.push_back(std::move(row));
    }
  }

  int solution_dim() const {
    const int vars = static_cast<int>(basis_.size());
    if (rows_.empty()) return vars;
    FpMatrix system(space_.p, static_cast<int>(rows_.size()), vars);
    for (int r = 0; r < system.rows(); ++r)
      for (int c = 0; c < vars; ++c) system(r, c) = rows_[r][c];
    return vars - mat_rank(system);
  }

 private:
  SymplecticSpace space_;
  std::vector<FpMatrix> basis_;
  std::vector<Vector> rows_;
};

}  // namespace

EnhancedClassifier::EnhancedClassifier(FpMatrix nilpotent)
    : nilpotent_(std::move(nilpotent)), commutant_(commutant_basis(nilpotent_)) {
  if (!is_nilpotent(nilpotent_)) throw Error(ErrorKind::NotNilpotent, "matrix is not nilpotent");
}

Subspace EnhancedClassifier::orbit_span(const Vector& v) const {
  std::vector<Vector> images;
  images.reserve(commutant_.size());
  for (const auto& z : commutant_) images.push_back(z * v);
  return Subspace::span(nilpotent_.p(), nilpotent_.rows(), images);
}

int EnhancedClassifier::span_dim(const Vector& v) const { return orbit_span(v).dim(); }

OrbitLabel EnhancedClassifier::type_of(const Vector& v) const {
  if (static_cast<int>(v.size()) != nilpotent_.rows()) throw Error(ErrorKind::SizeMismatch, "vector length");
  Subspace w = orbit_span(v);
  Partition inner = nilpotent_jordan_type(induced_action(nilpotent_, w, InducedMode::Restrict));
  Partition outer = nilpotent_jordan_type(induced_action(nilpotent_, w, InducedMode::Quotient));
  return {std::move(inner), std::move(outer)};
}

OrbitLabel enhanced_type(const EnhancedPair& pair) {
  return EnhancedClassifier(nilpotent_part(pair.y, pair.unipotent)).type_of(pair.v);
}

Partition halve(const Partition& doubled) {
  const auto& parts = doubled.parts();
  if (parts.size() % 2 != 0) throw Error(ErrorKind::NotDoubled, doubled.to_string() + " has odd length");
  std::vector<int> half;
  for (std::size_t i = 0; i < parts.size(); i += 2) {
    if (parts[i] != parts[i + 1]) throw Error(ErrorKind::NotDoubled, doubled.to_string() + " is not of the form λ∪λ");
    half.push_back(parts[i]);
  }
  return Partition(std::move(half));
}

ExoticClassifier::ExoticClassifier(const SymplecticSpace& space, const FpMatrix& x, Flavor flavor)
    : inner_(exotic_nilpotent(space, x, flavor)) {}

OrbitLabel ExoticClassifier::type_of(const Vector& v) const {
  OrbitLabel doubled = inner_.type_of(v);
  return {halve(doubled.first), halve(doubled.second)};
}

OrbitLabel exotic_type(const ExoticPair& pair) {
  return ExoticClassifier(pair.space, pair.x, pair.flavor).type_of(pair.v);
}

int stabilizer_dim(const ExoticPair& pair, bool include_v) {
  validate(pair);
  SpSystem system(pair.space);
  system.commute_with(pair.x);
  if (include_v) system.annihilate(pair.v);
  return system.solution_dim();
}

int cyclic_dim(const ExoticPair& pair) {
  validate(pair);
  std::vector<Vector> chain{pair.v};
  for (int k = 1; k < pair.space.dim(); ++k) chain.push_back(pair.x * chain.back());
  return Subspace::span(pair.space.p, pair.space.dim(), chain).dim();
}

Vector parabolic_line(const NormalFormData& nf, int block, NodeCase which) {
  if (block < 1 || block > nf.blocks()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "block " + std::to_string(block) + " outside 1.." + std::to_string(nf.blocks()));
  }
  const std::size_t k = static_cast<std::size_t>(block - 1);
  if (which == NodeCase::I) return nf.v_at(nf.block_last_row[k], 1);
  return nf.dual_at(nf.block_first_row[k], nf.block_nu[k]);
}

int parabolic_stabilizer_dim(const NormalFormData& nf, int block, NodeCase which) {
  Vector w = parabolic_line(nf, block, which);
  validate(nf.pair);
  SpSystem system(nf.pair.space);
  system.commute_with(nf.pair.x);
  system.annihilate(nf.pair.v);
  system.preserve_line(w);
  return system.solution_dim();
}

int parabolic_stabilizer_expected(int stabilizer, int q, NodeCase which) {
  return stabilizer - 2 * q + (which == NodeCase::I ? 2 : 1);
}

}  // namespace exotic
