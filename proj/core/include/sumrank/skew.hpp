#pragma once

#include "sumrank/matspace.hpp"

namespace sumrank {

/// Element of the twisted polynomial ring over GF(q^m) with x a = sigma(a) x,
/// sigma the q-power map. Coefficients are top-level codes, low degree first,
/// with no trailing zeros; the zero polynomial has an empty list.
struct SkewPoly {
  std::vector<uint32_t> coeffs;

  static SkewPoly make(std::vector<uint32_t> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return SkewPoly{std::move(c)};
  }
  bool is_zero() const { return coeffs.empty(); }
  int64_t degree() const { return static_cast<int64_t>(coeffs.size()) - 1; }
  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
};

SkewPoly skew_add(const FieldTower& t, const SkewPoly& f, const SkewPoly& g);
/// Non-commutative product: coefficients of g pass through sigma^i.
SkewPoly skew_mul(const FieldTower& t, const SkewPoly& f, const SkewPoly& g);

/// i-th truncated norm a^{(q^i - 1)/(q - 1)}.
uint32_t truncated_norm(const FieldTower& t, uint32_t a, uint32_t i);

/// f_a(beta) = sum f_i beta^{q^i} N_i(a); F_q-linear in beta.
uint32_t skew_eval(const FieldTower& t, const SkewPoly& f, uint32_t a, uint32_t beta);

/// k x r matrix with entry (i, j) = beta_j^{q^i} N_i(a); row 0 is beta.
Matrix moore_matrix(const FieldTower& t, uint32_t k, uint32_t a, std::span<const uint32_t> beta);

/// Matrix of beta -> f_a(beta) over GF(q) in the basis alpha (m x m).
Matrix skew_eval_matrix(const FieldTower& t, const SkewPoly& f, uint32_t a);

/// dim ker(f_{a_i}) for each a_i; requires pairwise distinct norms and
/// nonzero f. The dimensions sum to at most deg(f).
std::vector<uint32_t> kernel_dims(const FieldTower& t, const SkewPoly& f,
                                  std::span<const uint32_t> a_list);

}  // namespace sumrank
