#pragma once

#include "sumrank/code.hpp"

namespace sumrank {

/// An optimal rank-metric anticode inside one block: all matrices whose row
/// space lies in `space` (row family), or — on square blocks — all matrices
/// whose column space lies in `space` (column family). maxrank = space.rows.
struct BlockAnticode {
  uint32_t block = 0;
  bool col_family = false;
  Matrix space;  // RREF basis; cols = n_i (row family) or m_i (column family)

  uint32_t maxrank() const { return space.rows; }
};

/// A product of per-block optimal anticodes; dimension sum m_i t_i,
/// maximum sum-rank weight sum t_i.
struct AnticodeProduct {
  std::vector<BlockAnticode> parts;

  uint32_t maxsrk() const;
  uint32_t dim(const AmbientShape& shape) const;
  std::vector<uint32_t> t_profile() const;
};

/// Every optimal rank-metric anticode of maxrank t in block i, each exactly
/// once: the row-support family always, the column-support family when the
/// block is square and 0 < t < n_i (the endpoints coincide).
std::vector<BlockAnticode> enum_block_anticodes(Fq f, const AmbientShape& shape, uint32_t block,
                                                uint32_t t);

Matrix block_anticode_flat_basis(const AmbientShape& shape, const BlockAnticode& a);
Matrix product_flat_basis(const AmbientShape& shape, const AnticodeProduct& a);

/// max over codewords of sum_i m_i rk(C_i); dim(C) never exceeds it.
uint64_t anticode_bound_value(const LinearCode& c);
bool is_optimal_anticode(const LinearCode& c);

/// Generalized sum-rank weights d_1..d_k via products of per-block optimal
/// anticodes (both families on square blocks).
std::vector<uint32_t> generalized_weights(const LinearCode& c);

/// Row-support variant: minimum dim(L) over lattice elements with
/// dim(C ^ V_L) >= r.
std::vector<uint32_t> generalized_row_support_weights(const LinearCode& c);

/// Closed-form generalized weights of a product of per-block optimal
/// anticodes with the given maxrank profile.
std::vector<uint32_t> oac_generalized_weights(const AmbientShape& shape,
                                              std::span<const uint32_t> t_profile);

/// Generalized weights of the full ambient space.
std::vector<uint32_t> ambient_generalized_weights(const AmbientShape& shape);

/// Weight-set duality in equal-m ambients; throws std::invalid_argument when
/// the m_i differ (the identity genuinely fails there).
bool wei_duality_check(const LinearCode& c);
bool wei_duality_check(const LinearCode& c, const std::vector<uint32_t>& weights,
                       const std::vector<uint32_t>& dual_weights);

/// All optimal anticodes of the ambient predicted by the product
/// classification: products of per-block optimal rank-metric anticodes over
/// the blocks with m_i > 1, times an optimal Hamming-metric anticode on the
/// 1 x 1 tail (for q = 2 the tail contributes non-product subspaces too).
/// maxsrk is carried along (sum of head maxranks + tail dimension).
struct ClassifiedAnticode {
  LinearCode code;
  uint32_t maxsrk = 0;
};
std::vector<ClassifiedAnticode> classify_optimal_anticodes(FieldTowerPtr field,
                                                           const AmbientShape& shape);

}  // namespace sumrank
