#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "sumrank/code.hpp"

namespace sumrank {

using BigInt = boost::multiprecision::cpp_int;

/// The q-ary Gaussian coefficient of any pair of integers, exact.
BigInt gaussian_binomial(int64_t a, int64_t b, const BigInt& q);

using RankListDistribution = std::map<std::vector<uint32_t>, BigInt>;
using SupportDistribution = std::map<SupportElem, BigInt>;

/// All three exhaustive tallies of one code. Only nonzero entries are kept
/// in the maps; the sum-rank vector is indexed 0..n.
struct Distributions {
  std::vector<BigInt> sum_rank;
  RankListDistribution rank_list;
  SupportDistribution support;
};

Distributions distributions(const LinearCode& c);

/// Rank-list MacWilliams transform: the predicted distribution of the dual
/// of a code with distribution W and F_q-dimension k. Exact integers.
RankListDistribution macwilliams_rank_list(const RankListDistribution& W,
                                           const AmbientShape& shape, uint64_t q, uint32_t k);

/// Support-distribution MacWilliams transform.
SupportDistribution macwilliams_support(const SupportDistribution& W, const AmbientShape& shape,
                                        Fq f, uint32_t k);

/// Verifies the binomial-moment identity for every profile v in prod [0, n_i].
bool binomial_moments_check(const LinearCode& c);

/// A pair of codes with identical sum-rank distributions whose duals have
/// different ones (W_1 of the duals is 9 vs 6): plain sum-rank distributions
/// admit no MacWilliams transform.
struct NoMacWilliamsWitness {
  LinearCode c1, c2;
  std::vector<BigInt> sum_rank_c1, sum_rank_c2;  // equal
  BigInt w1_dual_c1, w1_dual_c2;                 // 9 and 6
};
NoMacWilliamsWitness no_macwilliams_witness();

/// Marginalize a support distribution to rank lists, and rank lists to the
/// sum-rank distribution.
RankListDistribution support_to_rank_list(const SupportDistribution& W);
std::vector<BigInt> rank_list_to_sum_rank(const RankListDistribution& W, uint32_t n);

}  // namespace sumrank
