#pragma once

#include <optional>
#include <string>

#include "sumrank/anticode.hpp"

namespace sumrank {

/// The (j, delta) parameter pair of an extremal code: j in [ell] (1-based)
/// and 0 <= delta <= n_j - 1, with the induced distance and dimension
/// targets. Either target determines the pair uniquely.
struct MsrdProfile {
  uint32_t j = 1;
  uint32_t delta = 0;
  uint32_t d_target = 0;
  uint32_t dim_target = 0;
  friend bool operator==(const MsrdProfile&, const MsrdProfile&) = default;
};

/// Solve sum_{i>=j} m_i n_i - delta m_j = dim; empty when no pair matches.
std::optional<MsrdProfile> profile_from_dim(const AmbientShape& shape, uint32_t dim);
/// Unique decomposition d - 1 = sum_{i<j} n_i + delta (requires 1 <= d <= n).
MsrdProfile profile_from_d(const AmbientShape& shape, uint32_t d);

/// Index offset r_h: the ambient dimension spent by the first h columns.
uint32_t r_h_value(const AmbientShape& shape, uint32_t h);

/// Dimension bound from the r-th generalized weight.
uint64_t singleton_bound_value(const AmbientShape& shape, uint32_t d_r, uint32_t r);
/// Convenience form; computes d_r by the anticode-product search.
uint64_t singleton_bound(const LinearCode& c, uint32_t r);

std::pair<bool, std::optional<MsrdProfile>> is_msrd(const LinearCode& c);

/// The four equivalent extremality conditions, each evaluated independently:
/// the defining parameter match, the complement condition C + A = M over
/// maximal optimal anticodes at maxsrk d, the trivial-intersection condition
/// against all optimal anticodes below the distance, and the column-set
/// subcode dimensions.
struct MsrdConditions {
  bool definition = false;
  bool anticode_complement = false;
  bool anticode_intersection = false;
  bool column_sets = false;
  std::optional<MsrdProfile> profile;
  bool all_agree() const {
    return definition == anticode_complement && definition == anticode_intersection &&
           definition == column_sets;
  }
};
MsrdConditions msrd_equivalent_conditions(const LinearCode& c);

/// Whether d_r(C) meets the extremal value h, with r derived from the r_h
/// table; requires dim(C) of the extremal form.
bool is_r_msrd(const LinearCode& c, uint32_t h);
uint32_t r_msrd_index(const AmbientShape& shape, const MsrdProfile& p, uint32_t h);

/// Generalized weights of an extremal code from its parameters alone
/// (the tail of the ambient weight sequence). Throws when not MSRD.
std::vector<uint32_t> msrd_weight_formula(const LinearCode& c);

/// Upper bounds on ell for extremal codes with constant block shape nu x m
/// and d >= 3: the two-floor general expressions plus the special cases,
/// with the tightest applicable value; mds_comparison carries the
/// MDS-conjecture limit floor((q^m + 1) / nu) on ell.
struct EllBoundReport {
  int64_t tightest = 0;
  std::vector<std::pair<std::string, int64_t>> cases;
  int64_t mds_comparison = 0;
};
EllBoundReport msrd_ell_bound(uint32_t nu, uint32_t m, uint64_t q, uint32_t d);

/// Duality facts for a non-trivial code: equal-m extremality passes to the
/// dual, and both sides are extremal exactly when d(C) + d(C^perp) = n + 2.
struct MsrdDualityReport {
  bool c_msrd = false;
  bool dual_msrd = false;
  uint32_t d = 0, d_dual = 0;
  bool equal_m_implication = true;  // equal m & C MSRD => dual MSRD
  bool sum_equivalence = true;      // both MSRD <=> d + d_dual = n + 2
  bool ok() const { return equal_m_implication && sum_equivalence; }
};
MsrdDualityReport msrd_duality_check(const LinearCode& c);

}  // namespace sumrank
