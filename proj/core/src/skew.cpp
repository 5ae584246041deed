#include "sumrank/skew.hpp"

#include <set>
#include <stdexcept>

namespace sumrank {

SkewPoly skew_add(const FieldTower& t, const SkewPoly& f, const SkewPoly& g) {
  std::vector<uint32_t> c(std::max(f.coeffs.size(), g.coeffs.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    uint32_t a = i < f.coeffs.size() ? f.coeffs[i] : 0;
    uint32_t b = i < g.coeffs.size() ? g.coeffs[i] : 0;
    c[i] = t.add(Level::Top, a, b);
  }
  return SkewPoly::make(std::move(c));
}

SkewPoly skew_mul(const FieldTower& t, const SkewPoly& f, const SkewPoly& g) {
  if (f.is_zero() || g.is_zero()) return SkewPoly{};
  std::vector<uint32_t> c(f.coeffs.size() + g.coeffs.size() - 1, 0);
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    for (size_t j = 0; j < g.coeffs.size(); ++j) {
      uint32_t twisted = t.frobenius(g.coeffs[j], i);
      c[i + j] = t.add(Level::Top, c[i + j], t.mul(Level::Top, f.coeffs[i], twisted));
    }
  }
  return SkewPoly::make(std::move(c));
}

uint32_t truncated_norm(const FieldTower& t, uint32_t a, uint32_t i) {
  // N_{i+1}(a) = sigma^i(a) N_i(a)
  uint32_t n = 1;
  for (uint32_t s = 0; s < i; ++s) n = t.mul(Level::Top, t.frobenius(a, s), n);
  return n;
}

uint32_t skew_eval(const FieldTower& t, const SkewPoly& f, uint32_t a, uint32_t beta) {
  uint32_t acc = 0;
  uint32_t norm_ladder = 1;  // N_i(a)
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i > 0) norm_ladder = t.mul(Level::Top, t.frobenius(a, i - 1), norm_ladder);
    if (f.coeffs[i] == 0) continue;
    uint32_t term = t.mul(Level::Top, f.coeffs[i], t.mul(Level::Top, t.frobenius(beta, i), norm_ladder));
    acc = t.add(Level::Top, acc, term);
  }
  return acc;
}

Matrix moore_matrix(const FieldTower& t, uint32_t k, uint32_t a, std::span<const uint32_t> beta) {
  if (k < 1) throw std::invalid_argument("Moore matrix needs k >= 1");
  Matrix out(k, static_cast<uint32_t>(beta.size()));
  uint32_t norm_ladder = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (i > 0) norm_ladder = t.mul(Level::Top, t.frobenius(a, i - 1), norm_ladder);
    for (uint32_t j = 0; j < beta.size(); ++j)
      out.at(i, j) = t.mul(Level::Top, t.frobenius(beta[j], i), norm_ladder);
  }
  return out;
}

Matrix skew_eval_matrix(const FieldTower& t, const SkewPoly& f, uint32_t a) {
  const uint32_t m = t.m();
  Matrix out(m, m);
  for (uint32_t j = 0; j < m; ++j) {
    uint32_t img = skew_eval(t, f, a, t.alpha()[j]);
    auto coords = t.coords(img);
    for (uint32_t i = 0; i < m; ++i) out.at(i, j) = coords[i];
  }
  return out;
}

std::vector<uint32_t> kernel_dims(const FieldTower& t, const SkewPoly& f,
                                  std::span<const uint32_t> a_list) {
  if (f.is_zero()) throw std::invalid_argument("kernel dimensions of the zero polynomial");
  std::set<uint32_t> norms;
  for (uint32_t a : a_list) {
    if (a == 0) throw std::invalid_argument("evaluation points must be nonzero");
    if (!norms.insert(t.norm(a)).second)
      throw std::invalid_argument("evaluation points must have pairwise distinct norms");
  }
  Fq f_mid = mid_field(t);
  std::vector<uint32_t> dims;
  uint64_t total = 0;
  for (uint32_t a : a_list) {
    Matrix fa = skew_eval_matrix(t, f, a);
    uint32_t d = t.m() - mat_rank(f_mid, fa);
    dims.push_back(d);
    total += d;
  }
  if (total > static_cast<uint64_t>(f.degree()))
    throw std::logic_error("kernel dimensions exceed the degree");
  return dims;
}

}  // namespace sumrank
