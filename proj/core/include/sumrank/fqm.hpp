#pragma once

#include "sumrank/code.hpp"

namespace sumrank {

/// An F_{q^m}-linear code in F_{q^m}^n with a fixed length partition
/// n = n_1 + ... + n_ell. The generator matrix is kept in RREF over the
/// top field; k is its row count.
class FqmCode {
 public:
  FqmCode(FieldTowerPtr tower, std::vector<uint32_t> partition, Matrix gen_rref);

  const FieldTowerPtr& tower() const { return tower_; }
  const std::vector<uint32_t>& partition() const { return partition_; }
  const Matrix& generator() const { return gen_; }
  uint32_t k() const { return gen_.rows; }
  uint32_t n() const { return gen_.cols; }
  Fq top() const { return top_field(*tower_); }

  friend bool operator==(const FqmCode&, const FqmCode&);

 private:
  FieldTowerPtr tower_;
  std::vector<uint32_t> partition_;
  Matrix gen_;
};

FqmCode make_fqm_code(FieldTowerPtr tower, std::vector<uint32_t> partition, Matrix generators);

/// The matrix of a vector: column j of block i holds the alpha coordinates
/// of the j-th entry of that block.
Codeword matrix_repr(const FieldTower& t, std::span<const uint32_t> partition,
                     std::span<const uint32_t> c);
std::vector<uint32_t> vector_repr(const FieldTower& t, std::span<const uint32_t> partition,
                                  const Codeword& w);

/// Sum-rank weight of a vector; valid for any partition (no n_i <= m check).
uint32_t srk_vector(const FieldTower& t, std::span<const uint32_t> partition,
                    std::span<const uint32_t> c);

/// The matrix-space shape (m, ..., m | n_1, ..., n_ell); requires n_i <= m.
AmbientShape fqm_shape(const FieldTower& t, std::span<const uint32_t> partition);

/// The F_q-linear image in the matrix space (dimension m k).
LinearCode fq_image(const FqmCode& c);

/// Dual w.r.t. the standard inner product on F_{q^m}^n; its matrix image is
/// the trace-dual of the matrix image.
FqmCode fqm_dual(const FqmCode& c);

/// Block permutation (equal lengths), nonzero block scalars, and right
/// GL_{n_i}(F_q) factors.
struct FqmIsometry {
  std::vector<uint32_t> sigma;
  std::vector<uint32_t> beta;  // top codes, nonzero
  std::vector<Matrix> A;       // over F_q
};
FqmCode fqm_isometry_apply(const FqmIsometry& phi, const FqmCode& c);

/// Minimum distance by exhaustive codeword sweep (through the F_q image
/// when the shape allows, otherwise over F_{q^m} messages directly).
uint32_t fqm_min_distance(const FqmCode& c);
/// Independent oracle: least total support dimension meeting the code.
uint32_t fqm_min_distance_lattice(const FqmCode& c);

/// d(C) = n - k + 1, decided by the lattice oracle.
bool fqm_is_msrd(const FqmCode& c);

/// Generalized sum-rank weights over F_{q^m}-linear row-support spaces;
/// strictly increasing with d'_r <= n - k + r.
std::vector<uint32_t> dprime_generalized_weights(const FqmCode& c);

/// [n] is the disjoint union of {d'_r(C)} and {n + 1 - d'_s(C^perp)}.
bool fqm_wei_duality_check(const FqmCode& c);

/// Every maximal minor of G diag(A_1..A_ell) (or of the parity-check
/// matrix) is invertible for all A_i in GL_{n_i}(F_q) iff the code is MSRD.
bool msrd_minor_test(const FqmCode& c, bool use_parity = false);

/// Systematic-form criterion for a given pivot split k = k_1 + ... + k_ell:
/// all square submatrices of B P A + C invertible over the displayed
/// block-diagonal families. Throws when the split admits no systematic form.
bool systematic_msrd_test(const FqmCode& c, std::span<const uint32_t> k_split);

/// All of GL_n(F_q) (enumeration; gate the caller by max_gl_product).
std::vector<Matrix> all_invertible(Fq f, uint32_t n);

}  // namespace sumrank
