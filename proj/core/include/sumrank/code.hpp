#pragma once

#include <functional>
#include <optional>
#include <random>

#include "sumrank/matspace.hpp"

namespace sumrank {

/// An F_q-linear sum-rank metric code, stored as the RREF basis of its
/// flattened coordinate matrix. Two codes are equal iff their canonical
/// bases are equal.
class LinearCode {
 public:
  LinearCode(FieldTowerPtr field, AmbientShape shape, Matrix basis_flat_rref);

  const FieldTowerPtr& field() const { return field_; }
  Fq fq() const { return mid_field(*field_); }
  const AmbientShape& shape() const { return shape_; }
  uint32_t k() const { return basis_flat_.rows; }
  const Matrix& basis_flat() const { return basis_flat_; }
  Codeword basis_word(uint32_t i) const;
  /// Codeword for a message vector (k mid codes).
  std::vector<uint32_t> encode_flat(std::span<const uint32_t> msg) const;
  bool contains_flat(std::span<const uint32_t> flat) const;
  bool contains(const Codeword& c) const;
  uint64_t size() const;  // q^k, throws on overflow past the sweep ceiling

  friend bool operator==(const LinearCode&, const LinearCode&);

 private:
  FieldTowerPtr field_;
  AmbientShape shape_;
  Matrix basis_flat_;
};

/// Canonical code spanned by the given generators (dependent/zero
/// generators are fine).
LinearCode make_code(FieldTowerPtr field, const AmbientShape& shape,
                     std::span<const Codeword> generators);
LinearCode make_code_flat(FieldTowerPtr field, const AmbientShape& shape, Matrix generators);
LinearCode zero_code(FieldTowerPtr field, const AmbientShape& shape);
LinearCode full_code(FieldTowerPtr field, const AmbientShape& shape);

/// Trace-orthogonal complement; dim C + dim C^perp = dim M.
LinearCode dual_code(const LinearCode& c);

struct DistanceInvariants {
  std::optional<uint32_t> d;  // empty for the zero code
  uint32_t maxsrk = 0;
};
/// Exhaustive codeword sweep.
DistanceInvariants distance_invariants(const LinearCode& c);
uint32_t min_distance(const LinearCode& c);  // throws on the zero code

/// Exhaustive sweep over coset representatives.
uint32_t covering_radius(const LinearCode& c);

/// The subcode of elements whose support is contained in L.
LinearCode subcode_supported(const LinearCode& c, const SupportElem& L);

/// Flat basis of the row-support space V_L.
Matrix rowsupport_flat_basis(const AmbientShape& shape, const SupportElem& L);

/// Smallest lattice element containing every codeword support.
SupportElem code_support(const LinearCode& c);

/// maxsrk of the smallest product of per-block optimal anticodes
/// containing the code.
uint32_t code_weight(const LinearCode& c);

/// An isometry of the ambient space: block permutation plus per-block
/// A_i X B_i (or A_i X^t B_i on square blocks).
struct SumRankIsometry {
  std::vector<uint32_t> sigma;  // output block i reads input block sigma[i]
  std::vector<Matrix> A, B;     // A_i in GL_{m_i}, B_i in GL_{n_i}
  std::vector<bool> transpose;  // only on square blocks
};

SumRankIsometry identity_isometry(const AmbientShape& shape);
SumRankIsometry random_isometry(const AmbientShape& shape, Fq f, std::mt19937& rng);
Codeword apply_isometry_word(const SumRankIsometry& phi, const AmbientShape& shape, Fq f,
                             const Codeword& c);
LinearCode apply_isometry(const SumRankIsometry& phi, const LinearCode& c);

struct DecodeResult {
  std::vector<Codeword> nearest;  // all codewords at minimal distance
  uint32_t dist = 0;
};
DecodeResult exhaustive_decode(const LinearCode& c, const Codeword& received);

// --- sweep machinery -----------------------------------------------------------

/// Sum of the ranks of the blocks of a flattened ambient element.
uint32_t srk_flat(Fq f, const AmbientShape& shape, std::span<const uint32_t> flat,
                  std::vector<uint32_t>& scratch);

/// Per-block ranks of a flattened ambient element.
void block_ranks_flat(Fq f, const AmbientShape& shape, std::span<const uint32_t> flat,
                      std::vector<uint32_t>& scratch, std::vector<uint32_t>& ranks);

/// Visits every F_q-combination of the rows of `basis` exactly once
/// (including the zero vector), for combination indices in [begin, end).
/// The visitor receives the flattened vector.
void sweep_span(Fq f, const Matrix& basis, uint64_t begin, uint64_t end,
                const std::function<void(std::span<const uint32_t>)>& fn);

/// q^k with a ceiling check.
uint64_t sweep_size(uint64_t q, uint32_t k, const char* what);

// --- subspace helpers on flat coordinates ---------------------------------------

uint32_t dim_sum(Fq f, const Matrix& a, const Matrix& b);          // dim(rowsp a + rowsp b)
uint32_t dim_intersection(Fq f, const Matrix& a, const Matrix& b);  // dim(rowsp a ^ rowsp b)
/// Canonical basis of rowsp(a) ^ rowsp(b) (Zassenhaus).
Matrix space_intersection(Fq f, const Matrix& a, const Matrix& b);

}  // namespace sumrank
